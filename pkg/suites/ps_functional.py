"""
The toric functional on ramified principal series: translated newform
closed form, nonvanishing on f-hat and stability in the averaging depth.
"""

import logging
from fractions import Fraction

from models.matrices import Mat2
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import enumerate_mult_chars, enumerate_omegas, omega_conductor, unramified_char
from services.induced import TORIC_MEASURE, default_depth, ell, fhat_vector, newform_vector, stability, \
    verify_translate_closed_form
from services.representations import principal_series
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "ps-functional"
DESCRIPTION = "toric functionals on PS(chi1, chi2) with one ramified character"

OMEGAS_PER_CONDUCTOR = 2


def _translate(pi, omega) -> Outcome:
    rep = verify_translate_closed_form(pi, omega)
    return Outcome(rep.residual, 0.0, inputs={"s": rep.s, "kappa_prime": rep.kappa_prime, **rep.inputs})


def _fhat_nonzero(pi, omega, tol: float) -> Outcome:
    # no closed value for l(f-hat); only |l| is reported
    value = abs(ell(fhat_vector(pi, omega), omega))
    return Outcome(value > tol, True, exact=True, inputs={"abs_ell_fhat": value})


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for p in cfg.primes:
        for case in cfg.cases:
            for c2 in (1, 2):
                for c_omega in (2, 3):
                    prec = cfg.precision_for(c2, c_omega)
                    ext = standard_extension(p, case, prec)
                    chi2 = enumerate_mult_chars(ext.ctx, c2)[0]
                    pi = principal_series(unramified_char(p, Fraction(1, 5)), chi2)
                    omegas = enumerate_omegas(ext, c_omega, pi.central)[:OMEGAS_PER_CONDUCTOR]
                    for omega in omegas:
                        tag = f"p={p}/{case}/c2={c2}/comega={c_omega}/omega={omega.index}"
                        inputs = {"p": p, "case": case, "pi": pi.describe(),
                                  "c_omega": omega_conductor(omega), "omega_index": omega.index}
                        report.add(run_check(
                            f"translate-closed-form/{tag}",
                            "A(f0)(diag(varpi^s, 1)) equals its Gauss sum closed form",
                            lambda pi=pi, omega=omega: _translate(pi, omega),
                            tol, inputs, measure=TORIC_MEASURE, precision=prec))
                        report.add(run_check(
                            f"fhat-nonvanishing/{tag}", "l(f-hat) is nonzero",
                            lambda pi=pi, omega=omega: _fhat_nonzero(pi, omega, tol),
                            tol, inputs, measure=TORIC_MEASURE, precision=prec))
                        report.add(run_check(
                            f"depth-stability/{tag}", "A(f0)(1) does not change with the averaging depth",
                            lambda pi=pi, omega=omega: Outcome(
                                stability(newform_vector(pi), Mat2.identity(ext.ctx), omega,
                                          default_depth(pi, omega)), 0.0),
                            tol, inputs, measure=TORIC_MEASURE, precision=prec))
    logger.info("ps-functional suite: %s", report.summary())
    return report
