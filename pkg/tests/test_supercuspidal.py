from fractions import Fraction

import pytest

from models.errors import InvalidDataError, NotCoveredError
from models.finite_field import ELLIPTIC, SCALAR, SPLIT_REGULAR, UNIPOTENT
from services.supercuspidal import DepthZeroSpec, char_norm, class_census, m0_and_i, unipotent_restriction
from suites.supercuspidal import census_expected, regular_thetas


def test_m0_and_i():
    """m0 and the intersection depth on the two worked examples."""
    assert m0_and_i(1, 1, 4, 0) == (-2, 1)
    assert m0_and_i(0, 1, 2, 0) == (-1, 0)


def test_m0_and_i_edges():
    """c(Omega) below c(pi) is not covered; ramified strata need odd n."""
    with pytest.raises(NotCoveredError):
        m0_and_i(1, 1, 3, 0)
    with pytest.raises(InvalidDataError):
        m0_and_i(2, 2, 8, 0)


def test_regular_thetas():
    """One regular character up to Frobenius at p = 3, two at p = 5."""
    assert regular_thetas(3) == [Fraction(1, 4)]
    assert regular_thetas(5) == [Fraction(1, 6), Fraction(1, 3)]


def test_non_regular_theta_rejected():
    """theta factoring through the norm is not regular."""
    with pytest.raises(InvalidDataError):
        DepthZeroSpec(3, Fraction(1, 2))


def test_class_census():
    """GL2(F_3) splits into 2 + 16 + 18 + 12 = 48 elements by class type."""
    census = class_census(DepthZeroSpec(3, Fraction(1, 4)))
    assert census == {SCALAR: 2, UNIPOTENT: 16, ELLIPTIC: 18, SPLIT_REGULAR: 12}
    assert census == census_expected(3)
    assert sum(census.values()) == 48


@pytest.mark.parametrize("p", [3, 5])
def test_cuspidal_character(p):
    """The cuspidal character has norm 1 and restricts to Nbar as the sum of nontrivial characters."""
    spec = DepthZeroSpec(p, regular_thetas(p)[0])
    assert abs(char_norm(spec) - 1.0) < 1e-9
    assert unipotent_restriction(spec) == {u: int(u != 0) for u in range(p)}
