"""
Zeta integrals of Whittaker newforms against characters of F^x.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from models.matrices import Mat2
from models.padic import LocalFieldCtx
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import MultChar, enumerate_mult_chars, trivial_char, unramified_char
from services.representations import ReprSpec, principal_series, steinberg, trivial_l
from services.whittaker import (
    BIG_CELL_KINDS,
    KIRILLOV_MEASURE,
    ZETA_MEASURE,
    functional_equation_check,
    lower_integral_consistency,
    normalised_zeta,
    split_test_vector,
    zeta_integral,
    zeta_prop_expected,
)
from suites.common import Outcome, run_check

logger = logging.getLogger(__name__)

NAME = "zeta"
DESCRIPTION = "zeta integrals, the local functional equation and split test vectors"

UNRAMIFIED_ANGLE = Fraction(1, 5)


def representations(ctx: LocalFieldCtx) -> List[Tuple[str, ReprSpec]]:
    p = ctx.p
    alpha = unramified_char(p, UNRAMIFIED_ANGLE)
    return [
        ("unramified-ps", principal_series(alpha, alpha.inverse())),
        ("ps-ram", principal_series(alpha, enumerate_mult_chars(ctx, 1)[0])),
        ("steinberg", steinberg(trivial_char(p))),
        ("trivial-l-2", trivial_l(p, 2)),
        ("trivial-l-3", trivial_l(p, 3)),
    ]


def twist_characters(ctx: LocalFieldCtx) -> List[MultChar]:
    return enumerate_mult_chars(ctx, 0) + enumerate_mult_chars(ctx, 1)[:2] + enumerate_mult_chars(ctx, 2)[:2]


def _zeta_residual(pi: ReprSpec, mu: MultChar, ctx: LocalFieldCtx) -> float:
    translate = Mat2.upper(ctx, ctx.uniformizer(-mu.cond))
    got = zeta_integral(pi, translate, mu)
    want = zeta_prop_expected(pi, mu)
    residual = got.residual(want)
    return max((abs(v) for v in residual.values()), default=0.0)


def _functional_equation_outcome(pi: ReprSpec, mu: MultChar, tol: float) -> Outcome:
    result = functional_equation_check(pi, mu, tol)
    holds = result.holds and (mu.is_unramified() or result.vanishing)
    return Outcome(holds, True, exact=True, inputs={"vanishing": result.vanishing})


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for p in cfg.primes:
        prec = cfg.precision or 10
        ctx = LocalFieldCtx(p, prec)
        mus = twist_characters(ctx)
        for label, pi in representations(ctx):
            for mu in mus:
                tag = f"p={p}/{label}/mu=(c={mu.cond},{mu.gen_angle})"
                inputs = {"p": p, "pi": pi.describe(), "mu_cond": mu.cond, "mu_angle": str(mu.gen_angle)}
                report.add(run_check(
                    f"zeta-translate/{tag}", "Z(s, pi(n(varpi^-c(mu))) W0, mu^-1) in closed form",
                    lambda pi=pi, mu=mu: Outcome(_zeta_residual(pi, mu, ctx), 0.0),
                    tol, inputs, measure=ZETA_MEASURE, precision=prec))
                report.add(run_check(
                    f"zeta-laurent/{tag}", "Z(s, pi(n(y)) W0, mu^-1) / L(s, mu^-1 x pi) is a Laurent polynomial",
                    lambda pi=pi, mu=mu: Outcome(
                        normalised_zeta(pi, Mat2.upper(ctx, ctx.uniformizer(-mu.cond)), mu).is_laurent(),
                        True, exact=True),
                    tol, inputs, measure=ZETA_MEASURE, precision=prec))
                if pi.kind in BIG_CELL_KINDS:
                    report.add(run_check(
                        f"functional-equation/{tag}", "local functional equation for GL2 x GL1",
                        lambda pi=pi, mu=mu: _functional_equation_outcome(pi, mu, tol),
                        tol, inputs, measure=ZETA_MEASURE, precision=prec))
                report.add(run_check(
                    f"split-test-vector/{tag}", "the split torus functional is nonzero on its test vector",
                    lambda pi=pi, mu=mu: Outcome(
                        split_test_vector(pi, mu, pi.central * mu.inverse(), ctx, tol).nonzero, True, exact=True),
                    tol, inputs, measure=ZETA_MEASURE, precision=prec))
            if pi.kind not in BIG_CELL_KINDS:
                continue
            for j in range(3):
                for k in (0, -1):
                    report.add(run_check(
                        f"lower-integral/p={p}/{label}/j={j}/k={k}",
                        "tabulated lower unipotent integral agrees with its Bruhat derivation",
                        lambda pi=pi, j=j, k=k: Outcome(*lower_integral_consistency(pi, j, k)),
                        tol, {"p": p, "pi": pi.describe(), "j": j, "k": k},
                        measure=KIRILLOV_MEASURE, precision=prec))
    logger.info("zeta suite: %s", report.summary())
    return report
