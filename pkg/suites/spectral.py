"""
The local spectral distribution J~ over nonsplit tori, its ingredients and
the sweep over (p, torus, c(pi), c(Omega), Omega).
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from config import Config
from models.matrices import Mat2
from models.padic import LocalFieldCtx
from models.report import CheckRecord, VerificationReport
from models.suite_config import INERT_CASE, SuiteConfig
from services.characters import enumerate_omegas, trivial_char, unramified_char
from services.representations import ReprSpec, principal_series, steinberg, trivial_l
from services.spectral import (
    SpectralConfig,
    character_sum_by_valuation,
    character_sum_expected,
    jtilde_batch,
    jtilde_expected,
    jtilde_oldform,
    kirillov_inner,
    normalised_translate_inner,
    oldform_gram_identity,
    phi0_norm_expected,
    representative_independence,
    unramified_translate_expected,
    verify_coset_reps,
    x_shift_equivalent,
)
from services.whittaker import KIRILLOV_MEASURE
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "spectral"
DESCRIPTION = "the local spectral distribution J~ and its sweep over Omega"

Row = Dict[str, Any]


def newform_representation(p: int, c_pi: int) -> ReprSpec:
    """Steinberg at c(pi) = 1, a representation with L(s, pi) = 1 above."""
    return steinberg(trivial_char(p)) if c_pi == 1 else trivial_l(p, c_pi)


def sample_omegas(ext, c_omega: int, size: int, rng: random.Random) -> Tuple[list, int]:
    """Every Omega of exact conductor c_omega, or a seeded sample of ``size`` when size > 0."""
    omegas = enumerate_omegas(ext, c_omega)
    total = len(omegas)
    if 0 < size < total:
        omegas = sorted(rng.sample(omegas, size), key=lambda omega: omega.index)
    return omegas, total


def _sweep_point(cfg: SuiteConfig, p: int, case: str, c_pi: int, c_omega: int) -> Tuple[CheckRecord, List[Row]]:
    prec = cfg.precision_for(c_pi, c_omega)
    rows: List[Row] = []

    def check() -> Outcome:
        ext = standard_extension(p, case, prec)
        pi = newform_representation(p, c_pi)
        rng = random.Random(f"{cfg.seed}/{p}/{case}/{c_pi}/{c_omega}")
        omegas, total = sample_omegas(ext, c_omega, cfg.omega_sample, rng)
        expected = jtilde_expected(SpectralConfig(pi, omegas[0]))
        values = jtilde_batch(pi, ext, omegas)
        for omega, value in zip(omegas, values):
            rows.append({
                "p": p, "case": case, "c_pi": c_pi, "c_omega": c_omega, "omega_index": omega.index,
                "computed": round(float(value.real), 12), "computed_imag": round(float(value.imag), 12),
                "expected": float(expected), "expected_exact": str(expected),
                "residual": float(abs(value - float(expected))), "measure": KIRILLOV_MEASURE,
            })
        worst = max(rows, key=lambda row: row["residual"])
        return Outcome(complex(worst["computed"], worst["computed_imag"]), float(expected),
                       inputs={"omegas": len(omegas), "total_omegas": total, "sampled": len(omegas) < total,
                               "worst_omega_index": worst["omega_index"]})

    record = run_check(
        f"jtilde/p={p}/{case}/cpi={c_pi}/comega={c_omega}",
        "J~ = q^-c(Omega) L(1, 1_F) L(1, eta) / e, over L(2, 1_F) when c(pi) = 1",
        check, cfg.tolerance, {"p": p, "case": case, "c_pi": c_pi, "c_omega": c_omega},
        measure=KIRILLOV_MEASURE, precision=prec)
    return record, rows


def sweep(cfg: SuiteConfig) -> VerificationReport:
    """J~ against its closed form on every grid point, one row per Omega."""
    report = VerificationReport(NAME, cfg.to_dict())
    grid = [(p, case, c_pi, c_pi + offset)
            for p in cfg.primes for case in cfg.cases for c_pi in cfg.c_pi for offset in cfg.c_omega]
    with ThreadPoolExecutor(max_workers=Config.WORKERS) as pool:
        results = list(pool.map(lambda point: _sweep_point(cfg, *point), grid))
    for record, rows in results:
        report.add(record)
        report.rows.extend(rows)
    report.rows.sort(key=lambda row: (row["p"], row["case"], row["c_pi"], row["c_omega"], row["omega_index"]))
    logger.info("Swept %d grid points into %d rows", len(grid), len(report.rows))
    return report


def _coset_outcome(ext, c_omega: int) -> Outcome:
    rep = verify_coset_reps(ext, c_omega)
    return Outcome(rep.ok, True, exact=True,
                   inputs={"count": rep.count, "expected_count": rep.expected, "pairwise": rep.pairwise})


def _character_sum_worst(ext, c: int) -> float:
    omega = enumerate_omegas(ext, c)[0]
    return max(abs(character_sum_by_valuation(omega, k) - character_sum_expected(c, k)) for k in range(1, c + 1))


def run(cfg: SuiteConfig) -> VerificationReport:
    report = sweep(cfg)
    tol = cfg.tolerance
    for p in cfg.primes:
        for case in cfg.cases:
            prec = cfg.precision or 14
            ext = standard_extension(p, case, prec)
            for c_omega in (1, 2, 3):
                report.add(run_check(
                    f"coset-reps/p={p}/{case}/comega={c_omega}",
                    "the listed representatives are a complete set for T / (T cap Z K')",
                    lambda c_omega=c_omega: _coset_outcome(ext, c_omega),
                    tol, {"p": p, "case": case, "c_omega": c_omega}, precision=prec))
            for c_omega in (2, 3):
                report.add(run_check(
                    f"x-shift/p={p}/{case}/comega={c_omega}", "varpi^k + xi0 ~ xi0 from k = c(Omega) + v(a)",
                    lambda c_omega=c_omega: Outcome(
                        (x_shift_equivalent(ext, c_omega, c_omega + ext.va),
                         x_shift_equivalent(ext, c_omega, c_omega + ext.va - 1)), (True, False), exact=True),
                    tol, {"p": p, "case": case, "c_omega": c_omega}, precision=prec))
                report.add(run_check(
                    f"character-sum/p={p}/{case}/comega={c_omega}",
                    "sums of Omega^-1(1 + y xi0) over v(y) = k vanish below c(Omega) - 1",
                    lambda c_omega=c_omega: Outcome(_character_sum_worst(ext, c_omega), 0.0),
                    tol, {"p": p, "case": case, "c_omega": c_omega}, precision=prec))
            for c_pi in (1, 2):
                pi = newform_representation(p, c_pi)
                report.add(run_check(
                    f"representative-independence/p={p}/{case}/cpi={c_pi}",
                    "(e', phi) does not depend on the coset representatives",
                    lambda pi=pi: Outcome(representative_independence(
                        SpectralConfig(pi, enumerate_omegas(ext, pi.cond)[0]), cfg.seed), 0.0),
                    tol, {"p": p, "case": case, "c_pi": c_pi}, measure=KIRILLOV_MEASURE, precision=prec))
        for c_pi in (1, 2):
            pi = newform_representation(p, c_pi)
            report.add(run_check(
                f"phi0-norm/p={p}/cpi={c_pi}", "(phi0, phi0) in closed form",
                lambda pi=pi: Outcome(kirillov_inner(pi, Mat2.identity(LocalFieldCtx(p, 10))),
                                      float(phi0_norm_expected(pi))),
                tol, {"p": p, "c_pi": c_pi}, measure=KIRILLOV_MEASURE))
        unram = principal_series(unramified_char(p, Fraction(1, 5)), unramified_char(p, Fraction(-1, 5)))
        report.add(run_check(
            f"unramified-translate/p={p}", "(pi(diag(varpi, 1)) phi0, phi0) / (phi0, phi0) for unramified pi",
            lambda: Outcome(normalised_translate_inner(unram, Mat2.diag_pi(LocalFieldCtx(p, 10), 1)),
                            unramified_translate_expected(unram)),
            tol, {"p": p}, measure=KIRILLOV_MEASURE))
        chi = unramified_char(p, Fraction(1, 5))
        inert = standard_extension(p, INERT_CASE, cfg.precision or 10)
        oldform: Dict[str, Any] = {}
        report.add(run_check(
            f"oldform/p={p}", "J~ at an unramified place with an order of level p is exactly 1/q, (phi0, e') = 0",
            lambda: _oldform_outcome(chi, inert, oldform),
            tol, {"p": p, "chi_pi_angle": "1/5"}, measure=KIRILLOV_MEASURE))
        report.add(run_check(
            f"oldform-spherical/p={p}", "Kirillov inner products agree with the spherical values",
            lambda: Outcome(oldform["result"].spherical_residual, 0.0),
            tol, {"p": p}, measure=KIRILLOV_MEASURE))
    report.add(run_check(
        "oldform-gram", "1 - |(phi0, phi0')|^2 = L(2, 1_F) / (L(1, pi, Ad) (1 + q^-1))",
        lambda: Outcome(oldform_gram_identity(), True, exact=True), tol))
    logger.info("spectral suite: %s", report.summary())
    return report


def _oldform_outcome(chi, ext, cache: Dict[str, Any]) -> Outcome:
    result = cache["result"] = jtilde_oldform(chi, ext)
    computed = result.exact_value if result.phi0_vanishes else None
    return Outcome(computed, result.expected, exact=True,
                   inputs={**result.inputs, "value": str(result.value), "phi0_e": str(result.phi0_e)})
