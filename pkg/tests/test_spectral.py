from fractions import Fraction

import pytest
import sympy as sp

from models.errors import InvalidDataError, NotCoveredError
from models.report import PASS
from models.suite_config import INERT_CASE, RAMIFIED_CASE, SuiteConfig
from services.characters import enumerate_omegas, unramified_char
from services.spectral import (
    SpectralConfig,
    character_sum_expected,
    jtilde,
    jtilde_expected,
    jtilde_oldform,
    oldform_gram_identity,
    repcount_expected,
    spherical_value,
    verify_coset_reps,
)
from services.suite_manager import suite_manager
from suites.common import standard_extension
from suites.spectral import newform_representation, sweep


def _config(p, case, c_pi, c_omega):
    ext = standard_extension(p, case, c_pi + c_omega + 8)
    return SpectralConfig(newform_representation(p, c_pi), enumerate_omegas(ext, c_omega)[0])


@pytest.mark.parametrize("case,c_pi,c_omega,expected", [
    (INERT_CASE, 2, 2, Fraction(1, 8)),
    (INERT_CASE, 1, 1, Fraction(1, 3)),
    (RAMIFIED_CASE, 1, 1, Fraction(2, 9)),
    (RAMIFIED_CASE, 2, 2, Fraction(1, 12)),
])
def test_jtilde_closed_form(case, c_pi, c_omega, expected):
    """Closed form of J~ at p = 3."""
    assert jtilde_expected(_config(3, case, c_pi, c_omega)) == expected


def test_jtilde_matches_closed_form():
    """The computed J~ for p = 3, inert, c(pi) = c(Omega) = 2 is 1/8."""
    value = jtilde(_config(3, INERT_CASE, 2, 2))
    assert abs(value - 0.125) < 1e-9


def test_conductor_below_c_pi_not_covered():
    """c(Omega) < c(pi) is outside the closed form."""
    with pytest.raises(NotCoveredError):
        _config(3, INERT_CASE, 2, 1)


def test_split_torus_rejected():
    """Omega data on a split torus is refused."""
    from models.padic import LocalFieldCtx
    from models.quadratic import build_quadratic_data

    split = build_quadratic_data(LocalFieldCtx(5, 8), -1, 0, 1)
    with pytest.raises(InvalidDataError):
        enumerate_omegas(split, 1)


@pytest.mark.parametrize("case,c,expected", [
    (INERT_CASE, 1, 4),
    (INERT_CASE, 2, 12),
    (RAMIFIED_CASE, 1, 6),
    (RAMIFIED_CASE, 2, 18),
])
def test_coset_counts(case, c, expected):
    """q^c + q^(c-1) representatives over an inert L, 2 q^c over a ramified one."""
    ext = standard_extension(3, case, 12)
    assert repcount_expected(ext, c) == expected
    assert verify_coset_reps(ext, c).ok


def test_character_sum_trichotomy():
    """1 at k = c, -1 at k = c - 1, 0 below."""
    assert character_sum_expected(3, 3) == 1
    assert character_sum_expected(3, 2) == -1
    assert character_sum_expected(3, 1) == 0
    with pytest.raises(InvalidDataError):
        character_sum_expected(3, 0)


def test_oldform_gram_identity():
    """The oldform normalisation identity holds symbolically."""
    assert oldform_gram_identity()


def test_sweep_rows():
    """Every row of the (3, inert, 2, 2) sweep expects 1/8 and carries the measure."""
    cfg = SuiteConfig(suite="spectral", primes=[3], cases=[INERT_CASE], c_pi=[2], c_omega=[0])
    report = sweep(cfg)
    assert len(report.records) == 1
    assert report.records[0].status == PASS
    assert len(report.rows) == 8
    assert {row["expected_exact"] for row in report.rows} == {"1/8"}
    assert all(row["residual"] < 1e-9 for row in report.rows)
    assert all(row["measure"] for row in report.rows)


def test_spectral_suite_passes():
    """The whole spectral suite at p = 3 runs at least twenty checks and passes them all."""
    report = suite_manager.run_suite(SuiteConfig(suite="spectral", primes=[3], cases=[INERT_CASE, RAMIFIED_CASE]))
    summary = report.summary()
    assert summary["total"] >= 20
    assert summary["fail"] == 0
    assert summary["pass"] >= 20


def test_coset_reps_above_pairwise_cap():
    """Above the pair cap the keys still decide the check, and the report says the pairs were not compared."""
    report = verify_coset_reps(standard_extension(3, INERT_CASE, 12), 2, pairwise_cap=0)
    assert report.ok
    assert not report.pairwise
    assert report.count == 12


def test_sweep_covers_every_omega_by_default():
    """Without omega_sample every Omega of the grid point gets a row."""
    cfg = SuiteConfig(suite="spectral", primes=[3], cases=[INERT_CASE], c_pi=[1], c_omega=[1])
    report = sweep(cfg)
    inputs = report.records[0].inputs
    assert inputs["total_omegas"] == inputs["omegas"] == 8
    assert inputs["sampled"] is False
    assert len(report.rows) == 8


def test_sweep_sampling_is_reported():
    """A positive omega_sample draws that many Omegas and flags the record as sampled."""
    cfg = SuiteConfig(suite="spectral", primes=[3], cases=[INERT_CASE], c_pi=[1], c_omega=[1], omega_sample=3)
    report = sweep(cfg)
    inputs = report.records[0].inputs
    assert inputs["omegas"] == 3
    assert inputs["total_omegas"] == 8
    assert inputs["sampled"] is True
    assert len(report.rows) == 3


def test_spherical_value_at_identity():
    assert sp.simplify(spherical_value(0, 3) - 1) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_oldform_exact(p):
    """J~ at the oldform place is exactly 1/q and e' is orthogonal to phi0."""
    result = jtilde_oldform(unramified_char(p, Fraction(1, 5)), standard_extension(p, INERT_CASE, 10))
    assert result.phi0_vanishes
    assert result.exact_value == Fraction(1, p)
    assert result.spherical_residual < 1e-9
