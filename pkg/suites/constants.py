"""
Global constants of the central value formula: archimedean factors, the
general and disjoint-ramification constants, level ratios, averages and
the bounds on Sigma.
"""

import logging
from fractions import Fraction
from typing import List

import sympy as sp

from models.quadratic import INERT, RAMIFIED, SPLIT
from models.report import VerificationReport
from models.suite_config import INERT_CASE, RAMIFIED_CASE, SuiteConfig
from services.characters import enumerate_omegas
from services.global_constants import (
    COMPLEX,
    DS,
    L_ETA,
    PS,
    R_COMPLEX,
    R_SPLIT,
    ArchSpec,
    FinitePlace,
    RamProfile,
    adjoint_ratio_identity,
    arch_constant,
    arch_cross_check,
    average_algebraic_rhs,
    avg_rhs,
    corollary12_constant,
    local_jtilde,
    mw_disjoint_constant,
    nonvanishing_threshold,
    sigma_bounds,
    central_value_constant,
)
from services.spectral import SpectralConfig, jtilde_expected
from suites.common import Outcome, run_check, standard_extension
from suites.spectral import newform_representation

logger = logging.getLogger(__name__)

NAME = "constants"
DESCRIPTION = "global constants, archimedean factors, averages and nonvanishing bounds"

ARCH_EXAMPLES = [
    (ArchSpec(R_SPLIT, DS, k=2), sp.Integer(4)),
    (ArchSpec(R_COMPLEX, DS, k=2, m=Fraction(0)), 1 / sp.pi),
    (ArchSpec(R_SPLIT, PS, eps=0, lam=Fraction(1, 4)), sp.Integer(1)),
]


def arch_grid() -> List[ArchSpec]:
    specs = [ArchSpec(R_SPLIT, DS, k=k) for k in (2, 4, 6)]
    specs += [ArchSpec(R_SPLIT, PS, eps=1, lam=Fraction(1, 4)), ArchSpec(R_SPLIT, PS, eps=1, r=Fraction(1, 8))]
    specs += [ArchSpec(R_COMPLEX, DS, k=k, m=Fraction(m)) for k in (2, 3, 4, 6) for m in (0, 1, Fraction(3, 2))]
    specs += [ArchSpec(R_COMPLEX, PS, m=Fraction(m), lam=Fraction(1, 4)) for m in (0, 1, 2)]
    specs += [ArchSpec(COMPLEX, PS, k=k, m=Fraction(m), lam=Fraction(1, 4)) for k, m in ((0, 0), (1, 2), (2, 4))]
    return specs


def disjoint_profile(*extra: FinitePlace) -> RamProfile:
    """pi ramified at an inert 3, Omega at a ramified 5, over F = Q."""
    places = (FinitePlace(3, INERT, c_pi=1), FinitePlace(5, RAMIFIED, c_omega=2)) + extra
    return RamProfile(places=places, arch=(ArchSpec(R_SPLIT, DS, k=2),), delta=1, delta_l=20)


def _same(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.simplify(a - b) == 0


def _level_ratio() -> sp.Expr:
    omega_places = [FinitePlace(3, INERT, c_omega=2), FinitePlace(5, INERT, c_omega=2)]
    full = corollary12_constant(2, omega_places, omega_places, delta_l=4)
    bare = corollary12_constant(2, [], omega_places, delta_l=4)
    return sp.nsimplify(full.exact / bare.exact)


def _local_vs_spectral(p: int, case: str, c_pi: int, c_omega: int) -> Outcome:
    ext = standard_extension(p, case, c_omega + c_pi + 6)
    cfg = SpectralConfig(newform_representation(p, c_pi), enumerate_omegas(ext, c_omega)[0])
    place_case = INERT if case == INERT_CASE else RAMIFIED
    return Outcome(local_jtilde(FinitePlace(p, place_case, c_pi, c_omega)).coefficient,
                   jtilde_expected(cfg), exact=True)


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for spec, expected in ARCH_EXAMPLES:
        report.add(run_check(
            f"arch-example/{spec.kind}/k={spec.k}", "closed form of C_v",
            lambda spec=spec, expected=expected: Outcome(_same(arch_constant(spec), expected), True, exact=True),
            tol, {"spec": spec.kind, "k": spec.k, "m": str(spec.m), "expected": str(expected)}))
    grid = arch_grid()
    report.add(run_check(
        "arch-positive", "C_v > 0 across the archimedean grid",
        lambda: Outcome(all(float(sp.N(arch_constant(spec))) > 0 for spec in grid), True, exact=True),
        tol, {"specs": len(grid)}))
    report.add(run_check(
        "arch-cross-check", "exact C_v agrees with an independent mpmath evaluation",
        lambda: Outcome(max(arch_cross_check(spec) for spec in grid), 0.0),
        tol, {"specs": len(grid)}))

    for p in cfg.primes:
        report.add(run_check(
            f"sigma-bounds/p={p}", "|p| - 1/(1 -+ 1/|p|)^2 bracket Sigma, which tends to |p| - 1",
            lambda p=p: Outcome(sigma_bounds(p)[0] < p - 1 < sigma_bounds(p)[1], True, exact=True),
            tol, {"p": p}))
    report.add(run_check(
        "sigma-bounds/p=5", "bounds at |p| = 5",
        lambda: Outcome(sigma_bounds(5), (Fraction(55, 16), 5 - Fraction(25, 36), 4), exact=True), tol, {"p": 5}))
    report.add(run_check(
        "nonvanishing-threshold", "the lower bound of Sigma is positive beyond (3 + sqrt(5))/2",
        lambda: Outcome(_same(nonvanishing_threshold(), (3 + sp.sqrt(5)) / 2), True, exact=True), tol))

    report.add(run_check(
        "disjoint-constant", "with disjoint ramification the general constant reduces to the disjoint one",
        lambda: Outcome(_same(central_value_constant(disjoint_profile()).exact,
                              mw_disjoint_constant(disjoint_profile()).exact), True, exact=True), tol))
    report.add(run_check(
        "unramified-place-insertion", "listing an unramified split place leaves the constant unchanged",
        lambda: Outcome(_same(central_value_constant(disjoint_profile(FinitePlace(7, SPLIT))).exact,
                              central_value_constant(disjoint_profile()).exact), True, exact=True), tol))
    report.add(run_check(
        "level-ratio", "level 15 against level 1, both primes inert: (1 + 1/3)^-1 (1 + 1/5)^-1",
        lambda: Outcome(_level_ratio(), sp.Rational(5, 8), exact=True), tol))
    report.add(run_check(
        "avg-rhs", "2^(2-d) Delta^(3/2) |N| L_S(N0)(2) L(1, eta) at N0 = {3}",
        lambda: Outcome(avg_rhs(RamProfile(numerics={L_ETA: 1.0}), [FinitePlace(3, INERT)], [], []).value,
                        27 / 4), tol))
    report.add(run_check(
        "average-algebraic", "sum of L^alg over weight 2 forms of level 1 over Q",
        lambda: Outcome(average_algebraic_rhs([], [2], 1, 1), sp.Integer(32), exact=True), tol))
    report.add(run_check(
        "adjoint-ratio", "L(1/2)/L(1, Ad) through L^alg and the Petersson norm",
        lambda: Outcome(adjoint_ratio_identity([2, 4], [0, 1], 5, 1, 3), True, exact=True), tol))

    for p in cfg.primes:
        for case in (INERT_CASE, RAMIFIED_CASE):
            for c_pi in (1, 2):
                for c_omega in (c_pi, c_pi + 1):
                    report.add(run_check(
                        f"local-jtilde/p={p}/{case}/cpi={c_pi}/comega={c_omega}",
                        "the tabulated local J~ agrees with the spectral closed form",
                        lambda p=p, case=case, c_pi=c_pi, c_omega=c_omega: _local_vs_spectral(p, case, c_pi, c_omega),
                        tol, {"p": p, "case": case, "c_pi": c_pi, "c_omega": c_omega}))
    logger.info("constants suite: %s", report.summary())
    return report
