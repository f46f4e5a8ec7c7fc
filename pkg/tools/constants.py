from pathlib import Path

from config import Config

# Project Paths
PROJECT_ROOT = Path(__file__).parent.parent
REPORTS_DIR = Config.REPORTS_DIR
LATEST_JSON = "latest.json"

# CSV column orders (documented in README.md)
RECORD_COLUMNS = [
    "check_id", "status", "anchor", "computed", "expected", "residual",
    "measure", "precision", "inputs", "reason",
]
SWEEP_COLUMNS = [
    "p", "case", "c_pi", "c_omega", "omega_index", "computed", "computed_imag",
    "expected", "expected_exact", "residual", "measure",
]

# Markdown summary
SUMMARY_FAILURES_SHOWN = 20
