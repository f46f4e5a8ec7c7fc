from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import InvalidDataError
from models.padic import LocalFieldCtx
from models.suite_config import INERT_CASE, RAMIFIED_CASE
from services.characters import (
    build_mult_char,
    conductor,
    enumerate_mult_chars,
    enumerate_omegas,
    epsilon_factor,
    omega_conductor,
    psi_eval,
    unramified_char,
)
from suites.characters import omega_count_expected
from suites.common import standard_extension

CTX = LocalFieldCtx(5, 10)
CHARS = enumerate_mult_chars(CTX, 1) + enumerate_mult_chars(CTX, 2)

units = st.integers(min_value=1, max_value=5 ** 5).filter(lambda n: n % 5 != 0)


@settings(max_examples=150)
@given(st.sampled_from(CHARS), units, units, st.integers(min_value=-2, max_value=2))
def test_multiplicativity(chi, x, y, k):
    """chi(xy) = chi(x) chi(y)."""
    a = CTX.element(x) * CTX.uniformizer(k)
    b = CTX.element(y)
    assert abs(chi(a * b) - chi(a) * chi(b)) < 1e-9


def test_character_counts():
    """Exact conductor 1 leaves p - 2 characters, exact conductor 2 leaves (p - 1)p - (p - 1)."""
    assert len(enumerate_mult_chars(CTX, 1)) == 3
    assert len(enumerate_mult_chars(CTX, 2)) == 20 - 4
    assert all(conductor(chi) == 2 for chi in enumerate_mult_chars(CTX, 2))


def test_build_rejects_wrong_conductor():
    """An angle of conductor 1 cannot be declared with conductor 2."""
    with pytest.raises(InvalidDataError):
        build_mult_char(CTX, 2, Fraction(1, 4))


def test_psi_standard():
    """psi is trivial on o and e(1/p) at varpi^-1."""
    assert abs(psi_eval(CTX.element(3)) - 1) < 1e-12
    assert abs(psi_eval(CTX.uniformizer(-1)) - complex(0.30901699437494745, 0.9510565162951535)) < 1e-12


@pytest.mark.parametrize("c", [1, 2])
def test_epsilon_dual(c):
    """epsilon(mu) epsilon(mu^-1) = mu(-1) and |epsilon(mu)| = 1."""
    minus_one = CTX.element(-1)
    for mu in enumerate_mult_chars(CTX, c):
        assert abs(abs(epsilon_factor(mu)) - 1) < 1e-9
        assert abs(epsilon_factor(mu) * epsilon_factor(mu.inverse()) - mu(minus_one)) < 1e-9


def test_unramified_epsilon():
    """Unramified characters have epsilon factor 1."""
    assert epsilon_factor(unramified_char(5, Fraction(1, 3))) == 1


@pytest.mark.parametrize("case,c,expected", [
    (INERT_CASE, 1, 3),
    (INERT_CASE, 2, 8),
    (RAMIFIED_CASE, 1, 4),
    (RAMIFIED_CASE, 2, 12),
])
def test_omega_counts(case, c, expected):
    """Characters of L^x / F^x with exact conductor c, over p = 3."""
    assert omega_count_expected(case, 3, c) == expected
    omegas = enumerate_omegas(standard_extension(3, case, c + 6), c)
    assert len(omegas) == expected
    assert all(omega_conductor(omega) == c for omega in omegas)


def test_unramified_omega_counts():
    """Only the trivial character is unramified over an inert L; a ramified L adds the sign of varpi_L."""
    assert omega_count_expected(INERT_CASE, 3, 0) == 1
    assert omega_count_expected(RAMIFIED_CASE, 3, 0) == 2
