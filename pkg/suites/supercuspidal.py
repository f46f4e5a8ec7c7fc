"""
Minimal supercuspidals against characters of nonsplit tori: the depth zero
character table, the support of the toric Hom space and the odd level
intertwining class z0.
"""

import logging
from fractions import Fraction
from typing import Dict, List

from models.errors import NotCoveredError
from models.finite_field import ELLIPTIC, SCALAR, SPLIT_REGULAR, UNIPOTENT, residue_field_ext
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import enumerate_omegas
from services.supercuspidal import (
    CHAIN_J,
    CHAIN_M,
    DepthZeroSpec,
    OddLevelSpec,
    char_norm,
    class_census,
    depth0_support,
    find_z0,
    gl2o_double_coset,
    intersection_depth,
    m0_and_i,
    unipotent_restriction,
)
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "supercuspidal"
DESCRIPTION = "depth zero and odd level minimal supercuspidals on nonsplit tori"

M0_EXAMPLES = {
    (1, 1, 4, 0): (-2, 1),
    (0, 1, 2, 0): (-1, 0),
}


def regular_thetas(p: int) -> List[Fraction]:
    """theta_j = e((p - 1) j dlog / (p^2 - 1)), trivial on F_p^x, one per theta ~ theta^p class."""
    return [Fraction((p - 1) * j, p * p - 1) for j in range(1, (p + 1) // 2)]


def census_expected(p: int) -> Dict[str, int]:
    return {
        SCALAR: p - 1,
        UNIPOTENT: (p - 1) * (p * p - 1),
        ELLIPTIC: (p * p - p) ** 2 // 2,
        SPLIT_REGULAR: p * (p + 1) * (p - 1) * (p - 2) // 2,
    }


def odd_level_specs(p: int) -> List[tuple]:
    """(spec, c(Omega)) pairs: an unramified stratum of level 1 and a ramified one of level 1/2."""
    inv4 = pow(4, -1, p)
    m_spec = OddLevelSpec(1, CHAIN_M, (residue_field_ext(p).D * inv4) % p, 0)
    j_spec = OddLevelSpec(1, CHAIN_J, p, 0)
    return [(m_spec, m_spec.cond), (j_spec, j_spec.cond)]


def _first_omega(ext, c: int):
    omegas = enumerate_omegas(ext, c)
    if not omegas:
        raise NotCoveredError(f"no character of conductor {c} on a {ext.case} torus")
    return omegas[0]


def _depth_zero_total(spec: DepthZeroSpec, ext, c_omega: int) -> int:
    return sum(depth0_support(spec, ext, _first_omega(ext, c_omega)).values())


def _intersection_ok(spec: OddLevelSpec, ext, omega) -> bool:
    z0 = find_z0(spec, ext, omega).z0
    ok, _ = intersection_depth(spec, ext, omega, z0 or 1)
    return ok


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    for args, expected in M0_EXAMPLES.items():
        report.add(run_check(
            f"m0-and-i/{args}", "m0 = [l + 3/2] - c(Omega) - v(a) and the depth i",
            lambda args=args, expected=expected: Outcome(m0_and_i(*args), expected, exact=True),
            tol, {"level_e": args[0], "e_a": args[1], "c_omega": args[2], "va": args[3]}))
    for p in cfg.primes:
        for j, theta in enumerate(regular_thetas(p), start=1):
            spec = DepthZeroSpec(p, theta)
            tag = f"p={p}/theta={theta}"
            inputs = {"p": p, "theta": str(theta)}
            report.add(run_check(
                f"cuspidal-norm/{tag}", "the cuspidal character has norm 1",
                lambda spec=spec: Outcome(char_norm(spec), 1.0), tol, inputs))
            report.add(run_check(
                f"unipotent-restriction/{tag}", "every nontrivial character of Nbar(F_p) occurs once",
                lambda spec=spec: Outcome(unipotent_restriction(spec),
                                          {u: int(u != 0) for u in range(p)}, exact=True),
                tol, inputs))
            if j == 1:
                report.add(run_check(
                    f"class-census/p={p}", "class type sizes of GL2(F_p)",
                    lambda spec=spec: Outcome(class_census(spec), census_expected(p), exact=True),
                    tol, {"p": p}))
            for case in cfg.cases:
                for c_omega in (2, 3):
                    prec = cfg.precision or c_omega + 6
                    report.add(run_check(
                        f"depth-zero-support/{tag}/{case}/comega={c_omega}",
                        "Hom_T(pi, Omega) is one dimensional and lives on the g(m0, z) cosets",
                        lambda spec=spec, case=case, c_omega=c_omega, prec=prec: Outcome(
                            _depth_zero_total(spec, standard_extension(p, case, prec), c_omega), 1, exact=True),
                        tol, {**inputs, "case": case, "c_omega": c_omega}, precision=prec))
        for case in cfg.cases:
            for spec, c_omega in odd_level_specs(p):
                prec = cfg.precision or c_omega + 8
                ext = standard_extension(p, case, prec)
                tag = f"p={p}/{case}/chain={spec.chain}/comega={c_omega}"
                inputs = {"p": p, "case": case, "chain": spec.chain, "a0": spec.a0, "a1": spec.a1,
                          "c_omega": c_omega}
                report.add(run_check(
                    f"odd-level-z0/{tag}", "exactly one class z0 mod p^i intertwines rho with Omega",
                    lambda spec=spec, ext=ext, c_omega=c_omega: Outcome(
                        find_z0(spec, ext, _first_omega(ext, c_omega)).ok, True, exact=True),
                    tol, inputs, precision=prec))
                if spec.chain == CHAIN_M:
                    report.add(run_check(
                        f"intersection-depth/{tag}", "T(F) meets g J g^-1 from depth c(Omega) - [l/2] - 1",
                        lambda spec=spec, ext=ext, c_omega=c_omega: Outcome(
                            _intersection_ok(spec, ext, _first_omega(ext, c_omega)), True, exact=True),
                        tol, inputs, precision=prec))
            ext = standard_extension(p, case, cfg.precision or 12)
            for m in range(-2, 3):
                report.add(run_check(
                    f"gl2o-double-coset/p={p}/{case}/m={m}", "g(m, z) lies at depth max(0, m, -m - v(a))",
                    lambda m=m, ext=ext: Outcome(*gl2o_double_coset(ext, m, 1), exact=True),
                    tol, {"p": p, "case": case, "m": m}))
    logger.info("supercuspidal suite: %s", report.summary())
    return report
