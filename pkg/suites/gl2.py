"""
Congruence subgroups, the toric coset identity and the Borel/Iwasawa
decompositions of torus translates.
"""

import logging
import random

from models.matrices import Mat2, is_upper_triangular
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import enumerate_omegas, trivial_char
from services.gl2 import borel_decompose, conjugate_membership, iwasawa, toric_coset_identity, torus_element
from services.representations import steinberg, trivial_l
from services.spectral import SpectralConfig, kprime_shape_check
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "gl2"
DESCRIPTION = "subgroups of GL2(o), torus decompositions and K' membership"


def _random_unit(p: int, rng: random.Random, bound: int) -> int:
    u = rng.randrange(1, bound)
    while u % p == 0:
        u = rng.randrange(1, bound)
    return u


def _borel_failures(ext, rng: random.Random, samples: int) -> int:
    ctx = ext.ctx
    p = ext.p
    failures = 0
    for _ in range(samples):
        x = ctx.element(_random_unit(p, rng, p ** 4)) * ctx.uniformizer(rng.randrange(-1, 3))
        y = ctx.element(_random_unit(p, rng, p ** 4)) * ctx.uniformizer(rng.randrange(-1, 3))
        s = rng.randrange(-2, 3)
        t = torus_element(ext, x, y)
        b, k, _ = borel_decompose(t, s)
        ok = is_upper_triangular(b) and k.in_GL2o() and b * k == t.matrix() * Mat2.diag_pi(ctx, s)
        failures += not ok
    return failures


def _iwasawa_failures(ctx, rng: random.Random, samples: int) -> int:
    p = ctx.p
    failures = 0
    for _ in range(samples):
        entries = [ctx.element(_random_unit(p, rng, p ** 4)) * ctx.uniformizer(rng.randrange(-2, 3))
                   for _ in range(4)]
        g = Mat2(ctx, *entries)
        if g.det.is_zero():
            continue
        b, k = iwasawa(g)
        failures += not (is_upper_triangular(b) and k.in_GL2o() and b * k == g)
    return failures


def _conjugate_failures(ctx, rng: random.Random, samples: int, n: int) -> int:
    p = ctx.p
    failures = 0
    for _ in range(samples):
        entries = [ctx.element(rng.randrange(p ** 3)) for _ in range(4)]
        entries = [x if not x.is_zero() else ctx.element(p ** 5) for x in entries]
        g = Mat2(ctx, *entries)
        s = rng.randrange(n + 1)
        failures += not conjugate_membership(g, n, s)
    return failures


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    samples = max(cfg.samples // 10, 10)
    for p in cfg.primes:
        rng = random.Random(cfg.seed * 104729 + p)
        for case in cfg.cases:
            prec = cfg.precision or 14
            ext = standard_extension(p, case, prec)
            for m in range(4):
                for n in range(3):
                    report.add(run_check(
                        f"toric-coset/p={p}/{case}/m={m}/n={n}",
                        "diag(varpi^-m, 1) in T(F) diag(varpi^(m - v(a)), 1) w K1(p^n)",
                        lambda m=m, n=n: Outcome(toric_coset_identity(ext, m, n)[0], True, exact=True),
                        tol, {"p": p, "case": case, "m": m, "n": n}, precision=prec))
            report.add(run_check(
                f"borel/p={p}/{case}", "t diag(varpi^s, 1) = b k with b upper triangular, k in GL2(o)",
                lambda: Outcome(_borel_failures(ext, rng, samples), 0, exact=True),
                tol, {"p": p, "case": case, "samples": samples}, precision=prec))
            for c_pi in cfg.c_pi:
                for offset in cfg.c_omega:
                    c_omega = c_pi + offset
                    pi = steinberg(trivial_char(p)) if c_pi == 1 else trivial_l(p, c_pi)
                    report.add(run_check(
                        f"kprime-shape/p={p}/{case}/cpi={c_pi}/comega={c_omega}",
                        "h K1(p^c(pi)) h^-1 has the displayed entrywise shape",
                        lambda pi=pi, c_omega=c_omega: Outcome(
                            all(kprime_shape_check(SpectralConfig(pi, enumerate_omegas(ext, c_omega)[0])).values()),
                            True, exact=True),
                        tol, {"p": p, "case": case, "c_pi": c_pi, "c_omega": c_omega}, precision=prec))
        ctx = standard_extension(p, cfg.cases[0], cfg.precision or 14).ctx
        report.add(run_check(
            f"iwasawa/p={p}", "g = b k with b upper triangular and k in GL2(o)",
            lambda: Outcome(_iwasawa_failures(ctx, rng, samples), 0, exact=True),
            tol, {"p": p, "samples": samples}))
        for n in (1, 2, 3):
            report.add(run_check(
                f"k1-conjugate/p={p}/n={n}", "K1^(s)(p^n) by conjugation equals its entrywise shape",
                lambda n=n: Outcome(_conjugate_failures(ctx, rng, samples, n), 0, exact=True),
                tol, {"p": p, "n": n, "samples": samples}))
    logger.info("gl2 suite: %s", report.summary())
    return report
