"""
Run configuration shared by the CLI, the config-file parser and the HTTP API.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from sympy import isprime

from config import Config
from models.errors import UsageError

INERT_CASE = "inert"
RAMIFIED_CASE = "ramified"          # v(a) = 0
RAMIFIED_VA1_CASE = "ramified-va1"  # v(a) = 1
CASES = (INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE)

FORMATS = ("json", "csv", "md")


@dataclass
class SuiteConfig:
    """
    Args:
        suite:     suite name or "all".
        primes:    odd primes p to run over.
        cases:     torus types, see CASES.
        c_pi:      conductor exponents of pi.
        c_omega:   extra conductor exponents c(Omega) - c(pi) for the spectral sweep.
        precision: working p-adic precision; None picks c(Omega) + c(pi) + 4 + margin.
        tolerance: absolute tolerance on complex comparisons.
        fmt:       report format.
        seed:      seed of the randomised property checks.
        samples:   instances per randomised property.
        omega_sample: Omegas per spectral grid point; 0 sweeps all of them.
        out:       output path; None writes to Config.REPORTS_DIR.
    """

    suite: str = "all"
    primes: List[int] = field(default_factory=lambda: list(Config.DEFAULT_PRIMES))
    cases: List[str] = field(default_factory=lambda: list(CASES))
    c_pi: List[int] = field(default_factory=lambda: [1, 2])
    c_omega: List[int] = field(default_factory=lambda: [0, 1])
    precision: Optional[int] = None
    tolerance: float = Config.TOLERANCE
    fmt: str = "json"
    seed: int = Config.SEED
    samples: int = 1000
    omega_sample: int = Config.OMEGA_SAMPLE
    out: Optional[str] = None

    def validate(self) -> "SuiteConfig":
        if self.tolerance <= 0:
            raise UsageError(f"tolerance must be positive, got {self.tolerance}")
        if not self.primes:
            raise UsageError("at least one prime is needed")
        for p in self.primes:
            if p < 3 or not isprime(p):
                raise UsageError(f"{p} is not an odd prime")
            if 2 * p ** (max(self.c_pi + [1]) + max(self.c_omega + [0])) > Config.CAPACITY_CAP:
                raise UsageError(f"p = {p} with these conductors exceeds the capacity cap {Config.CAPACITY_CAP}")
        unknown = [c for c in self.cases if c not in CASES]
        if unknown:
            raise UsageError(f"unknown extension cases {unknown}; choose from {list(CASES)}")
        if any(c < 1 for c in self.c_pi) or any(c < 0 for c in self.c_omega):
            raise UsageError("c(pi) ranges start at 1 and c(Omega) offsets at 0")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format '{self.fmt}'")
        if self.precision is not None and self.precision < 1:
            raise UsageError("precision must be positive")
        if self.samples < 1:
            raise UsageError("samples must be positive")
        if self.omega_sample < 0:
            raise UsageError("omega_sample must be 0 (every Omega) or positive")
        return self

    def precision_for(self, c_pi: int, c_omega: int) -> int:
        if self.precision is not None:
            return self.precision
        return c_omega + c_pi + 4 + Config.PRECISION_MARGIN

    def with_suite(self, suite: str) -> "SuiteConfig":
        return SuiteConfig(**{**asdict(self), "suite": suite})

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = [k for k in data if k not in known]
        if extra:
            raise UsageError(f"unknown configuration keys {extra}")
        return cls(**data).validate()
