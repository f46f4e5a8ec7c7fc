from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import InvalidDataError, PrecisionError
from models.padic import LocalFieldCtx, PAdic
from models.quadratic import INERT, RAMIFIED, legendre_symbol
from models.suite_config import INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE
from suites.common import standard_extension

CTX = LocalFieldCtx(3, 10)

units = st.integers(min_value=1, max_value=3 ** 6).filter(lambda n: n % 3 != 0)
exponents = st.integers(min_value=-2, max_value=2)


@st.composite
def padics(draw):
    return CTX.element(draw(units)) * CTX.uniformizer(draw(exponents))


@settings(max_examples=200)
@given(padics(), padics(), padics())
def test_ring_laws(a, b, c):
    """Distributivity, commutativity and subtraction hold up to the tracked precision."""
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@settings(max_examples=200)
@given(padics())
def test_inverse(a):
    """Every nonzero element times its inverse is 1."""
    assert a * a.inverse() == 1


@settings(max_examples=100)
@given(st.integers(min_value=-10 ** 6, max_value=10 ** 6), st.integers(min_value=1, max_value=10))
def test_residue_matches_integer_reduction(n, k):
    """The residue of an integer modulo p^k is n mod p^k."""
    assert CTX.element(n).residue(k) == n % 3 ** k


def test_from_rational_and_lift():
    """A rational with p in the denominator keeps its valuation and lifts back."""
    x = PAdic.from_rational(Fraction(5, 9), 3, 10)
    assert x.valuation() == -2
    assert x.fractional_part() == Fraction(5, 9)
    assert CTX.element(7).lift() == 7


def test_zero_with_finite_precision():
    """0 + O(p^2) cannot be placed in p^3."""
    z = PAdic.zero(3, 2)
    assert z.in_ideal(2)
    with pytest.raises(PrecisionError):
        z.in_ideal(3)


def test_bad_context():
    """Only odd primes are accepted."""
    with pytest.raises(InvalidDataError):
        LocalFieldCtx(4, 5)
    with pytest.raises(InvalidDataError):
        LocalFieldCtx(2, 5)


def test_enumerate_units():
    """(o/p^2)^x has p(p - 1) elements."""
    assert len(CTX.enumerate_units(2)) == 6
    assert CTX.enumerate_residues(0) == [0]


@pytest.mark.parametrize("case,kind,legendre", [
    (INERT_CASE, INERT, -1),
    (RAMIFIED_CASE, RAMIFIED, 0),
    (RAMIFIED_VA1_CASE, RAMIFIED, 0),
])
def test_standard_extensions(case, kind, legendre):
    """The three standard tori have the expected type."""
    ext = standard_extension(5, case, 8)
    assert ext.case == kind
    assert legendre_symbol(ext) == legendre


@settings(max_examples=50)
@given(units, units, units, units)
def test_norm_is_multiplicative(x1, y1, x2, y2):
    """N(st) = N(s) N(t) on the inert torus."""
    ext = standard_extension(3, INERT_CASE, 10)
    s, t = ext.element(x1, y1), ext.element(x2, y2)
    assert (s * t).norm() == s.norm() * t.norm()
