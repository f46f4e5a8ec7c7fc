"""
Helpers shared by the suites: standard tori, check execution and outcome
comparison.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

from models.errors import SKIPPABLE_ERRORS
from models.finite_field import residue_field_ext
from models.padic import LocalFieldCtx
from models.quadratic import QuadExtData, build_quadratic_data
from models.report import FAIL, PASS, SKIPPED, CheckRecord
from models.suite_config import INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE

logger = logging.getLogger(__name__)


def standard_extension(p: int, case: str, prec: int) -> QuadExtData:
    """
    inert:        X^2 = D with D a non-residue (a = -D, b = 0, c = 1)
    ramified:     roots of u^2 + 2u + 1 + p, so v(a) = 0 and u0 = -1
    ramified-va1: X^2 = -p, so v(a) = 1 and u0 = 0
    """
    ctx = LocalFieldCtx(p, prec)
    if case == INERT_CASE:
        return build_quadratic_data(ctx, -residue_field_ext(p).D, 0, 1)
    if case == RAMIFIED_CASE:
        return build_quadratic_data(ctx, 1 + p, 2, 1)
    if case == RAMIFIED_VA1_CASE:
        return build_quadratic_data(ctx, p, 0, 1)
    raise ValueError(f"unknown case '{case}'")


@dataclass
class Outcome:
    """computed against expected; exact outcomes compare with ==, others within tolerance."""

    computed: Any
    expected: Any
    exact: bool = False
    inputs: Optional[Dict[str, Any]] = None


def _exact_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    return value


def run_check(check_id: str, anchor: str, fn: Callable[[], Outcome], tol: float,
              inputs: Optional[Dict[str, Any]] = None, measure: str = "",
              precision: Optional[int] = None) -> CheckRecord:
    """Run one check; expected exceptions become skips, anything else a fail."""
    inputs = dict(inputs or {})
    try:
        outcome = fn()
    except SKIPPABLE_ERRORS as exc:
        return CheckRecord(check_id, anchor, SKIPPED, inputs, measure=measure,
                           precision=precision, reason=str(exc))
    except Exception as exc:
        logger.error("Check %s raised %s: %s", check_id, type(exc).__name__, exc)
        return CheckRecord(check_id, anchor, FAIL, inputs, residual=float("inf"), measure=measure,
                           precision=precision,
                           reason=f"{type(exc).__name__}: {exc}")
    if outcome.inputs:
        inputs.update(outcome.inputs)
    if outcome.exact:
        ok = outcome.computed == outcome.expected
        residual = None if ok else _exact_residual(outcome.computed, outcome.expected)
        computed, expected = _exact_value(outcome.computed), _exact_value(outcome.expected)
    else:
        residual = abs(complex(outcome.computed) - complex(outcome.expected))
        ok = residual <= tol
        computed, expected = outcome.computed, outcome.expected
    status = PASS if ok else FAIL
    if not ok:
        logger.warning("Check %s failed: computed %s, expected %s", check_id, computed, expected)
    return CheckRecord(check_id, anchor, status, inputs, computed, expected, residual, measure, precision,
                       "" if ok else "computed value differs from the expected value")


def _exact_residual(computed: Any, expected: Any) -> float:
    try:
        return float(abs(computed - expected))
    except TypeError:
        return float("inf")
