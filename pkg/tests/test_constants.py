from fractions import Fraction

import pytest
import sympy as sp

from models.errors import IncompleteInputError, InvalidDataError
from models.quadratic import INERT, RAMIFIED, SPLIT
from models.suite_config import INERT_CASE, RAMIFIED_CASE
from services.global_constants import (
    DS,
    L_ETA,
    PS,
    R_COMPLEX,
    R_SPLIT,
    ArchSpec,
    FinitePlace,
    RamProfile,
    arch_constant,
    arch_cross_check,
    average_algebraic_rhs,
    avg_rhs,
    corollary12_constant,
    local_jtilde,
    mw_disjoint_constant,
    nonvanishing_threshold,
    sigma_bounds,
    central_value_constant,
)
from suites.constants import arch_grid, disjoint_profile


@pytest.mark.parametrize("spec,expected", [
    (ArchSpec(R_SPLIT, DS, k=2), sp.Integer(4)),
    (ArchSpec(R_COMPLEX, DS, k=2, m=Fraction(0)), 1 / sp.pi),
    (ArchSpec(R_SPLIT, PS, eps=0, lam=Fraction(1, 4)), sp.Integer(1)),
])
def test_arch_examples(spec, expected):
    """Closed forms of the archimedean constant."""
    assert sp.simplify(arch_constant(spec) - expected) == 0


def test_arch_grid_positive_and_cross_checked():
    """Every constant on the grid is positive and agrees with mpmath."""
    for spec in arch_grid():
        assert float(sp.N(arch_constant(spec))) > 0
        assert arch_cross_check(spec) < 1e-15


def test_arch_cross_check_at_working_precision():
    """32 pi^2 agrees with its mpmath value to far more than double precision."""
    assert arch_cross_check(ArchSpec(R_SPLIT, PS, eps=1, lam=Fraction(1, 4))) < 1e-20


def test_arch_half_integral_m_rejected():
    """m must be a half-integer."""
    with pytest.raises(InvalidDataError):
        ArchSpec(R_COMPLEX, DS, k=2, m=Fraction(1, 3))


def test_sigma_bounds():
    """At |p| = 5 the bounds are 55/16 and 5 - 25/36 around 4."""
    assert sigma_bounds(5) == (Fraction(55, 16), 5 - Fraction(25, 36), 4)
    for p in (3, 5, 7, 11):
        lower, upper, limit = sigma_bounds(p)
        assert lower < limit < upper


def test_nonvanishing_threshold():
    """The lower bound turns positive past (3 + sqrt(5))/2."""
    threshold = nonvanishing_threshold()
    assert sp.simplify(threshold - (3 + sp.sqrt(5)) / 2) == 0
    assert sigma_bounds(2)[0] < 0 < sigma_bounds(3)[0]


def test_disjoint_constant():
    """With disjoint ramification both constants agree, and an unramified split place changes nothing."""
    general = central_value_constant(disjoint_profile()).exact
    assert sp.simplify(general - mw_disjoint_constant(disjoint_profile()).exact) == 0
    padded = central_value_constant(disjoint_profile(FinitePlace(7, SPLIT))).exact
    assert sp.simplify(general - padded) == 0


def test_level_ratio():
    """Level 15 against level 1 with 3 and 5 inert costs (1 + 1/3)^-1 (1 + 1/5)^-1."""
    places = [FinitePlace(3, INERT, c_omega=2), FinitePlace(5, INERT, c_omega=2)]
    full = corollary12_constant(2, places, places, delta_l=4).exact
    bare = corollary12_constant(2, [], places, delta_l=4).exact
    assert sp.nsimplify(full / bare) == sp.Rational(5, 8)


def test_level_must_divide_conductor():
    """A level prime outside c(Omega) is refused."""
    with pytest.raises(InvalidDataError):
        corollary12_constant(2, [FinitePlace(7, INERT)], [FinitePlace(3, INERT, c_omega=1)], delta_l=4)


def test_avg_rhs():
    """N0 = {3}, d = 1, Delta = 1 and L(1, eta) = 1 give 27/4."""
    report = avg_rhs(RamProfile(numerics={L_ETA: 1.0}), [FinitePlace(3, INERT)], [], [])
    assert report.value == pytest.approx(27 / 4)


def test_avg_rhs_needs_l_eta():
    """L(1, eta) must come from the caller."""
    with pytest.raises(IncompleteInputError):
        avg_rhs(RamProfile(), [FinitePlace(3, INERT)], [], [])


def test_average_algebraic():
    """Weight 2, level 1 over Q."""
    assert average_algebraic_rhs([], [2], 1, 1) == 32


@pytest.mark.parametrize("case,place_case,c_pi,c_omega,expected", [
    (INERT_CASE, INERT, 2, 2, Fraction(1, 8)),
    (INERT_CASE, INERT, 1, 1, Fraction(1, 3)),
    (RAMIFIED_CASE, RAMIFIED, 1, 1, Fraction(2, 9)),
    (RAMIFIED_CASE, RAMIFIED, 2, 2, Fraction(1, 12)),
])
def test_local_jtilde(case, place_case, c_pi, c_omega, expected):
    """The tabulated local J~ at p = 3."""
    value = local_jtilde(FinitePlace(3, place_case, c_pi, c_omega))
    assert value.coefficient == expected
    assert value.carries == ""
