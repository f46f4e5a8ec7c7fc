"""
Residue enumeration, quadratic algebra classification and randomised ring
laws of PAdic and LElement arithmetic.
"""

import logging
import random

from models.padic import LocalFieldCtx
from models.quadratic import build_quadratic_data, legendre_symbol
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "local-field"
DESCRIPTION = "p-adic residues, quadratic algebras and ring laws"

LEGENDRE_EXPECTED = {"inert": -1, "ramified": 0, "ramified-va1": 0}


def _random_padic(ctx: LocalFieldCtx, rng: random.Random):
    unit = rng.randrange(1, ctx.p ** 6)
    while unit % ctx.p == 0:
        unit = rng.randrange(1, ctx.p ** 6)
    return ctx.element(unit) * ctx.uniformizer(rng.randrange(-2, 3))


def _ring_law_failures(ctx: LocalFieldCtx, rng: random.Random, samples: int) -> int:
    failures = 0
    for _ in range(samples):
        a, b, c = (_random_padic(ctx, rng) for _ in range(3))
        ok = ((a + b) * c == a * c + b * c
              and a * b == b * a
              and (a - b) + b == a
              and a * a.inverse() == 1)
        failures += not ok
    return failures


def _l_law_failures(ext, rng: random.Random, samples: int) -> int:
    p = ext.p
    failures = 0
    for _ in range(samples):
        x = ext.element(rng.randrange(p ** 4), rng.randrange(1, p ** 4))
        y = ext.element(rng.randrange(1, p ** 4), rng.randrange(p ** 4))
        s = x + x.conj()
        ok = ((x * y).norm() == x.norm() * y.norm()
              and x.conj().conj() == x
              and s.x == x.trace() and s.y.is_zero()
              and (x * y).conj() == x.conj() * y.conj())
        failures += not ok
    return failures


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for p in cfg.primes:
        prec = cfg.precision or 12
        ctx = LocalFieldCtx(p, prec)
        for n in range(4):
            report.add(run_check(
                f"residues/p={p}/n={n}", "o/p^n has p^n residues",
                lambda n=n: Outcome(len(ctx.enumerate_residues(n)), p ** n, exact=True),
                tol, {"p": p, "n": n}, precision=prec))
        for case in cfg.cases:
            report.add(run_check(
                f"legendre/p={p}/{case}", "Legendre symbol of the standard torus",
                lambda case=case: Outcome(legendre_symbol(standard_extension(p, case, prec)),
                                          LEGENDRE_EXPECTED[case], exact=True),
                tol, {"p": p, "case": case}, precision=prec))
        report.add(run_check(
            f"legendre/p={p}/split", "Legendre symbol of X^2 = 1",
            lambda: Outcome(legendre_symbol(build_quadratic_data(ctx, -1, 0, 1)), 1, exact=True),
            tol, {"p": p, "case": "split"}, precision=prec))

        rng = random.Random(cfg.seed * 1009 + p)
        report.add(run_check(
            f"padic-ring-laws/p={p}", "PAdic distributivity, commutativity and inverses",
            lambda: Outcome(_ring_law_failures(ctx, rng, cfg.samples), 0, exact=True),
            tol, {"p": p, "samples": cfg.samples}, precision=prec))
        for case in cfg.cases:
            report.add(run_check(
                f"l-arith/p={p}/{case}", "norm multiplicative, conjugation an involutive automorphism",
                lambda case=case: Outcome(
                    _l_law_failures(standard_extension(p, case, prec), rng, cfg.samples), 0, exact=True),
                tol, {"p": p, "case": case, "samples": cfg.samples}, precision=prec))
    logger.info("local-field suite: %s", report.summary())
    return report
