"""
Check records and the versioned verification report.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from config import Config

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
STATUSES = (PASS, FAIL, SKIPPED)


def _plain(value: Any) -> Any:
    """JSON-safe rendering of computed/expected values."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, complex):
        if abs(value.imag) < 1e-15:
            return _plain(value.real)
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


@dataclass
class CheckRecord:
    """
    One verified statement.

    ``anchor`` names the statement being checked in words; ``residual`` is
    |computed - expected| for numeric checks and None for exact ones.
    """

    check_id: str
    anchor: str
    status: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    computed: Any = None
    expected: Any = None
    residual: Optional[float] = None
    measure: str = ""
    precision: Optional[int] = None
    reason: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status '{self.status}'")

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        for key in ("inputs", "computed", "expected", "residual"):
            out[key] = _plain(out[key])
        return out


@dataclass
class VerificationReport:
    suite: str
    config: Dict[str, Any] = field(default_factory=dict)
    records: List[CheckRecord] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    schema: int = Config.REPORT_SCHEMA

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, records: List[CheckRecord]):
        self.records.extend(records)

    def merge(self, other: "VerificationReport"):
        self.records.extend(other.records)
        self.rows.extend(other.rows)

    def summary(self) -> Dict[str, int]:
        counts = {status: 0 for status in STATUSES}
        for record in self.records:
            counts[record.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.records)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "suite": self.suite,
            "config": _plain(self.config),
            "summary": self.summary(),
            "records": [r.to_dict() for r in self.records],
            "rows": [_plain(row) for row in self.rows],
        }
