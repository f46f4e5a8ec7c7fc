import logging
from importlib import import_module
from typing import Any, Dict, List, Optional

from models.errors import UsageError
from models.report import VerificationReport
from models.suite_config import SuiteConfig

logger = logging.getLogger(__name__)

ALL = "all"

# Canonical run order; "all" runs them in this order
SUITE_MODULES = [
    "suites.local_field",
    "suites.characters",
    "suites.gl2",
    "suites.zeta",
    "suites.ps_functional",
    "suites.steinberg",
    "suites.supercuspidal",
    "suites.spectral",
    "suites.constants",
]


class SuiteManager:
    """
    Singleton service to register the verification suites and run them.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(SuiteManager, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        self.suites: Dict[str, Any] = {}
        self.latest: Optional[VerificationReport] = None
        self._initialized = True
        self._load_suites()

    def _load_suites(self):
        """Import every suite module with error handling."""
        for module_name in SUITE_MODULES:
            self._init_suite(module_name)

    def _init_suite(self, module_name: str):
        try:
            module = import_module(module_name)
            self.suites[module.NAME] = module
            logger.info("✓ Suite %s registered", module.NAME)
        except Exception as e:
            logger.error("✗ Error registering %s: %s", module_name, e)

    def get_suite(self, name: str) -> Optional[Any]:
        return self.suites.get(name)

    def list_suites(self) -> List[Dict[str, str]]:
        return [{'name': name, 'description': module.DESCRIPTION} for name, module in self.suites.items()]

    def names(self) -> List[str]:
        return list(self.suites)

    def run_suite(self, cfg: SuiteConfig) -> VerificationReport:
        """Run one suite, or every registered suite in canonical order for "all"."""
        cfg.validate()
        if cfg.suite == ALL:
            report = VerificationReport(ALL, cfg.to_dict())
            for name, module in self.suites.items():
                logger.info("Running suite %s", name)
                report.merge(module.run(cfg.with_suite(name)))
        else:
            module = self.get_suite(cfg.suite)
            if module is None:
                raise UsageError(f"unknown suite '{cfg.suite}'; choose from {[ALL] + self.names()}")
            logger.info("Running suite %s", cfg.suite)
            report = module.run(cfg)
        self.latest = report
        logger.info("Suite %s finished: %s", cfg.suite, report.summary())
        return report

    def sweep(self, cfg: SuiteConfig) -> VerificationReport:
        """The spectral sweep on its own: one row per (p, case, c(pi), c(Omega), Omega)."""
        cfg.validate()
        report = self.suites['spectral'].sweep(cfg.with_suite('spectral'))
        self.latest = report
        return report


# Global instance
suite_manager = SuiteManager()
