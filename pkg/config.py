import os
from pathlib import Path

class Config:
    """
    Configuration settings for the GL(2) toric period verification toolkit.
    """

    # Flask settings
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'dev-secret-key-change-in-production'
    DEBUG = os.environ.get('FLASK_DEBUG', '0') == '1'

    # Paths
    BASE_DIR = Path(__file__).parent
    REPORTS_DIR = BASE_DIR / os.environ.get('VERIFY_REPORTS_DIR', 'reports')

    # Enumeration limits: every finite quotient we walk must stay below this
    CAPACITY_CAP = int(os.environ.get('VERIFY_CAPACITY_CAP', '1000000'))

    # Numerical comparison of complex character sums
    TOLERANCE = float(os.environ.get('VERIFY_TOLERANCE', '1e-9'))

    # Randomised property checks
    SEED = int(os.environ.get('VERIFY_SEED', '0'))

    # Sweep worker pool
    WORKERS = int(os.environ.get('VERIFY_WORKERS', '4'))

    # Suite defaults
    DEFAULT_PRIMES = [int(p) for p in os.environ.get('VERIFY_DEFAULT_PRIMES', '3').split(',') if p.strip()]
    SERIES_TERMS = int(os.environ.get('VERIFY_SERIES_TERMS', '80'))
    # 0 sweeps every Omega; a positive value opts into seeded sampling
    OMEGA_SAMPLE = int(os.environ.get('VERIFY_OMEGA_SAMPLE', '0'))

    # Extra p-adic digits carried on top of c(Omega) + c(pi) + 4
    PRECISION_MARGIN = int(os.environ.get('VERIFY_PRECISION_MARGIN', '8'))

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')

    # Report schema version
    REPORT_SCHEMA = 1
