"""
Characters of F^x and of the torus: orthogonality, epsilon factors,
multiplicativity and the number of Omega of each conductor.
"""

import logging
import random
from fractions import Fraction

from models.padic import LocalFieldCtx
from models.quadratic import INERT
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import (
    GAUSS_MEASURE,
    e,
    enumerate_mult_chars,
    enumerate_omegas,
    epsilon_factor,
    psi_eval,
)
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "characters"
DESCRIPTION = "characters of F^x and L^x, Gauss sums and epsilon factors"


def omega_count_expected(case: str, q: int, c: int) -> int:
    """Number of characters of L^x / F^x with conductor exactly c."""
    if c == 0:
        return 1 if case == INERT else 2
    if case == INERT:
        return q if c == 1 else (q + 1) * (q - 1) * q ** (c - 2)
    return 2 * (q ** c - q ** (c - 1))


def _orthogonality(ctx: LocalFieldCtx, c: int) -> float:
    """max over chi of conductor c of |sum over (o/p^c)^x of chi|."""
    worst = 0.0
    for chi in enumerate_mult_chars(ctx, c):
        total = sum(e(chi.unit_angle(u)) for u in ctx.enumerate_units(c))
        worst = max(worst, abs(total))
    return worst


def _multiplicativity(ctx: LocalFieldCtx, rng: random.Random, samples: int) -> float:
    chars = enumerate_mult_chars(ctx, 1) + enumerate_mult_chars(ctx, 2)
    worst = 0.0
    p = ctx.p
    for _ in range(samples):
        chi = rng.choice(chars)
        x = ctx.element(rng.randrange(1, p ** 4)) * ctx.uniformizer(rng.randrange(-2, 3))
        y = ctx.element(rng.randrange(1, p ** 4))
        worst = max(worst, abs(chi(x * y) - chi(x) * chi(y)))
    return worst


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for p in cfg.primes:
        prec = cfg.precision or 10
        ctx = LocalFieldCtx(p, prec)
        report.add(run_check(
            f"psi/p={p}", "psi is trivial on o and nontrivial on p^-1",
            lambda: Outcome(abs(psi_eval(ctx.element(1)) - 1)
                            + abs(psi_eval(ctx.uniformizer(-1)) - e(Fraction(1, p))), 0.0),
            tol, {"p": p}))
        for c in (1, 2):
            report.add(run_check(
                f"orthogonality/p={p}/c={c}", "sum of a nontrivial character over (o/p^c)^x vanishes",
                lambda c=c: Outcome(_orthogonality(ctx, c), 0.0), tol, {"p": p, "c": c}))
            report.add(run_check(
                f"epsilon-modulus/p={p}/c={c}", "|epsilon(1/2, mu, psi)| = 1 for unitary mu",
                lambda c=c: Outcome(max(abs(abs(epsilon_factor(mu)) - 1) for mu in enumerate_mult_chars(ctx, c)), 0.0),
                tol, {"p": p, "c": c}, measure=GAUSS_MEASURE))
            report.add(run_check(
                f"epsilon-dual/p={p}/c={c}", "epsilon(1/2, mu) epsilon(1/2, mu^-1) = mu(-1)",
                lambda c=c: Outcome(max(abs(epsilon_factor(mu) * epsilon_factor(mu.inverse()) - mu(ctx.element(-1)))
                                        for mu in enumerate_mult_chars(ctx, c)), 0.0),
                tol, {"p": p, "c": c}, measure=GAUSS_MEASURE))
        rng = random.Random(cfg.seed * 7919 + p)
        report.add(run_check(
            f"multiplicativity/p={p}", "chi(xy) = chi(x) chi(y)",
            lambda: Outcome(_multiplicativity(ctx, rng, cfg.samples), 0.0),
            tol, {"p": p, "samples": cfg.samples}))
        for case in cfg.cases:
            for c in (1, 2):
                report.add(run_check(
                    f"omega-count/p={p}/{case}/c={c}", "characters of L^x / F^x of exact conductor c",
                    lambda case=case, c=c: Outcome(
                        len(enumerate_omegas(standard_extension(p, case, c + 6), c)),
                        omega_count_expected(case, p, c), exact=True),
                    tol, {"p": p, "case": case, "c": c}))
    logger.info("characters suite: %s", report.summary())
    return report
