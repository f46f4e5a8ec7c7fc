from fractions import Fraction

import pytest

from models.errors import InvalidDataError, NotCoveredError
from models.padic import LocalFieldCtx
from models.report import PASS
from models.suite_config import INERT_CASE, RAMIFIED_VA1_CASE, SuiteConfig
from services.characters import enumerate_mult_chars, enumerate_omegas, trivial_char, unramified_char
from services.induced import F0, STEINBERG_UNRAM, epsilon_hat, fhat_vector, newform_vector, psi_hat_scale, \
    verify_translate_closed_form
from services.representations import principal_series, steinberg, trivial_l
from services.suite_manager import suite_manager
from suites.common import standard_extension


def _omega(p, c_omega):
    return enumerate_omegas(standard_extension(p, INERT_CASE, c_omega + 8), c_omega)[0]


def test_newform_tags():
    """Ramified principal series use f0, the unramified Steinberg its own vector."""
    ctx = LocalFieldCtx(5, 8)
    pi = principal_series(unramified_char(5, Fraction(1, 5)), enumerate_mult_chars(ctx, 1)[0])
    assert newform_vector(pi).tag == F0
    assert newform_vector(steinberg(trivial_char(5))).tag == STEINBERG_UNRAM


def test_no_induced_model_for_trivial_l():
    with pytest.raises(InvalidDataError):
        newform_vector(trivial_l(5, 2))
    with pytest.raises(InvalidDataError):
        fhat_vector(trivial_l(5, 2), _omega(5, 2))


def test_psi_hat_unramified():
    """c1 = 0 needs no extension of psi."""
    assert psi_hat_scale(_omega(3, 2), 0) == 0


def test_closed_form_needs_induced_newform():
    with pytest.raises(NotCoveredError):
        verify_translate_closed_form(steinberg(trivial_char(3)), _omega(3, 1))


def test_closed_form_regime():
    """c(Omega) below 2 c(chi1) is outside the closed form."""
    ctx = LocalFieldCtx(5, 10)
    chi = enumerate_mult_chars(ctx, 1)[0]
    with pytest.raises(NotCoveredError):
        verify_translate_closed_form(principal_series(chi, chi), _omega(5, 1))


def test_suite_records_carry_reported_values():
    """Passing records expose kappa' and |l(f-hat)|."""
    report = suite_manager.run_suite(SuiteConfig(suite="ps-functional", primes=[3], cases=[INERT_CASE]))
    assert report.records
    for record in report.records:
        if record.status != PASS:
            continue
        if record.check_id.startswith("translate-closed-form/"):
            assert "kappa_prime" in record.inputs
        if record.check_id.startswith("fhat-nonvanishing/"):
            assert record.inputs["abs_ell_fhat"] > 0


@pytest.mark.parametrize("p,case,magnitude", [
    (5, INERT_CASE, 5 ** -1.5 * 5 / 6),
    (3, RAMIFIED_VA1_CASE, 1 / 3),
])
def test_translate_closed_form_values(p, case, magnitude):
    """c1 = 0, c2 = 1, c(Omega) = 2: f0 fills p^c(Omega), so no unit-group factor appears."""
    ext = standard_extension(p, case, 15)
    pi = principal_series(unramified_char(p, Fraction(1, 5)), enumerate_mult_chars(ext.ctx, 1)[0])
    omega = enumerate_omegas(ext, 2, pi.central)[0]
    report = verify_translate_closed_form(pi, omega)
    assert abs(abs(report.expected) - magnitude) < 1e-9
    assert report.residual < 1e-9


def test_epsilon_hat():
    """epsilon(1/2, chi1, psi-hat) has modulus one and needs psi-hat of full conductor."""
    chi = enumerate_mult_chars(LocalFieldCtx(5, 10), 1)[0]
    assert abs(abs(epsilon_hat(chi, 2)) - 1) < 1e-9
    assert epsilon_hat(unramified_char(5, Fraction(1, 5)), 0) == 1
    with pytest.raises(InvalidDataError):
        epsilon_hat(chi, 5)
