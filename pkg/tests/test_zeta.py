import math
from fractions import Fraction

import pytest

from models.errors import InvalidDataError, NotCoveredError
from models.padic import LocalFieldCtx
from services.characters import enumerate_mult_chars, trivial_char, unramified_char
from services.representations import (
    PS_RAM,
    STEINBERG,
    UNRAM_PS,
    l_roots,
    principal_series,
    steinberg,
    trivial_l,
)
from services.whittaker import bruhat_lower_integral, functional_equation_check, whittaker_lower_integral
from suites.zeta import representations, twist_characters

CTX = LocalFieldCtx(3, 10)


def test_principal_series_kinds():
    """chi1 x chi2 is classified by which characters ramify, the unramified one first."""
    alpha = unramified_char(3, Fraction(1, 5))
    ram = enumerate_mult_chars(CTX, 1)[0]
    assert principal_series(alpha, alpha.inverse()).kind == UNRAM_PS
    pi = principal_series(ram, alpha)
    assert pi.kind == PS_RAM
    assert pi.chi1 == alpha
    assert pi.cond == 1


def test_reducible_principal_series():
    """|.|^(1/2) x |.|^(-1/2) is reducible."""
    with pytest.raises(InvalidDataError):
        principal_series(trivial_char(3).twist(Fraction(1, 2)), trivial_char(3).twist(Fraction(-1, 2)))


def test_l_roots():
    """Two roots for an unramified principal series, one for Steinberg, none for trivial-L."""
    alpha = unramified_char(3, Fraction(1, 5))
    assert len(l_roots(principal_series(alpha, alpha.inverse()))) == 2
    st = steinberg(trivial_char(3))
    assert st.kind == STEINBERG and st.cond == 1
    assert len(l_roots(st)) == 1
    assert l_roots(trivial_l(3, 2)) == []
    assert l_roots(st, enumerate_mult_chars(CTX, 1)[0]) == []


def test_trivial_l_needs_conductor_two():
    """L(s, pi) = 1 forces c(pi) >= 2."""
    with pytest.raises(InvalidDataError):
        trivial_l(3, 1)


@pytest.mark.parametrize("label", ["unramified-ps", "steinberg", "trivial-l-2"])
def test_functional_equation(label):
    """The local functional equation holds for unramified twists."""
    pi = dict(representations(CTX))[label]
    for mu in twist_characters(CTX):
        if mu.is_unramified():
            assert functional_equation_check(pi, mu).holds


def test_twist_characters():
    """One unramified twist, the single conductor 1 character at p = 3 and two of conductor 2."""
    conductors = [mu.cond for mu in twist_characters(CTX)]
    assert conductors == [0, 1, 2, 2]


@pytest.mark.parametrize("label", ["unramified-ps", "steinberg", "trivial-l-2"])
def test_functional_equation_ramified_twists(label):
    """Against a ramified mu both zeta integrals are evaluated and vanish."""
    pi = dict(representations(CTX))[label]
    for mu in twist_characters(CTX):
        if not mu.is_unramified():
            result = functional_equation_check(pi, mu)
            assert result.vanishing
            assert result.holds
            assert result.rhs.is_zero()


def test_unramified_lower_integral():
    """Below the conductor: q^-1 (alpha^2 + 1 + alpha^-2) at j = 0, k = -1."""
    pi = dict(representations(LocalFieldCtx(5, 10)))["unramified-ps"]
    expected = (1 + 2 * math.cos(4 * math.pi / 5)) / 5
    assert abs(whittaker_lower_integral(pi, 0, -1) - expected) < 1e-12


@pytest.mark.parametrize("label", ["unramified-ps", "steinberg", "trivial-l-2", "trivial-l-3"])
def test_lower_integral_against_bruhat(label):
    """The tabulated lower integral agrees with its Bruhat derivation."""
    pi = dict(representations(CTX))[label]
    for j in range(3):
        for k in (0, -1, -2):
            assert abs(whittaker_lower_integral(pi, j, k) - bruhat_lower_integral(pi, j, k)) < 1e-12


def test_steinberg_lower_integral_values():
    """-q^-1 at j = k = 0; negative j is outside the table."""
    st = steinberg(trivial_char(3))
    assert abs(whittaker_lower_integral(st, 0, 0) + 1 / 3) < 1e-12
    with pytest.raises(NotCoveredError):
        whittaker_lower_integral(st, -1, 0)
