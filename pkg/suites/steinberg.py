"""
The Waldspurger model B of the Steinberg newform over a nonsplit torus:
Hecke relations, tower rules, double coset labels and equivariance.
"""

import logging
import random
from fractions import Fraction

from models.matrices import Mat2
from models.quadratic import INERT, RAMIFIED
from models.report import VerificationReport
from models.suite_config import SuiteConfig
from services.characters import enumerate_omegas, trivial_char, unramified_char
from services.induced import TORIC_MEASURE, newform_vector, toric_functional_A
from services.representations import steinberg
from services.steinberg import (
    IWAHORI_CELL,
    U0_CELL,
    SteinbergModel,
    W_CELL,
    cell_representative,
    cells_at,
    classify_double_coset,
    coset_criterion,
    tower_consistency,
    translation_residual,
    value_rules,
    verify_B_relations,
)
from suites.common import Outcome, run_check, standard_extension

logger = logging.getLogger(__name__)

NAME = "steinberg"
DESCRIPTION = "the Steinberg newform in its Waldspurger model"

SAMPLE_DEPTH = 3
MAX_C_OMEGA = 3


def _model(ext, omega, chi) -> SteinbergModel:
    return SteinbergModel(ext, omega, chi, depth=SAMPLE_DEPTH + 2)


def _label(ext, g: Mat2):
    label = classify_double_coset(g, ext, SAMPLE_DEPTH + 2)
    return label.r, label.cell


def _induced_proportionality(ext, omega, chi) -> float:
    """
    A(f)(g) from the induced Steinberg newform against B(g): both span the
    one dimensional Hom space, so A(f) = lambda B with lambda read off at
    diag(varpi^c(Omega), 1) w.
    """
    model = _model(ext, omega, chi)
    fvec = newform_vector(steinberg(chi))
    points = [cell_representative(ext, r, cell) for r in range(SAMPLE_DEPTH) for cell in cells_at(ext, r)]
    anchor = cell_representative(ext, model.c, W_CELL)
    b_anchor = model(anchor)
    a_anchor = toric_functional_A(fvec, anchor, omega)
    scale = a_anchor / b_anchor if b_anchor != 0 else 0j
    return max(abs(toric_functional_A(fvec, g, omega) - scale * model(g)) for g in points)


def _value_rules_outcome(model: SteinbergModel, tol: float) -> Outcome:
    rules = value_rules(model, SAMPLE_DEPTH, tol)
    failed = sorted(name for name, ok in rules.items() if not ok)
    return Outcome(not failed, True, exact=True, inputs={"failed_rules": failed})


def _translation_worst(model: SteinbergModel, rng: random.Random, samples: int) -> float:
    ext = model.ext
    ctx = ext.ctx
    p = ext.p
    worst = 0.0
    for _ in range(samples):
        r = rng.randrange(SAMPLE_DEPTH)
        g = cell_representative(ext, r, rng.choice(cells_at(ext, r)))
        x = rng.randrange(1, p ** 3)
        while x % p == 0:
            x = rng.randrange(1, p ** 3)
        t = ext.element(x, rng.randrange(p ** 3))
        u1, u2 = rng.randrange(1, p), rng.randrange(1, p)
        k = Mat2(ctx, u1, rng.randrange(p ** 2), p * rng.randrange(p ** 2), u2)
        worst = max(worst, translation_residual(model, g, t, k))
    return worst


def run(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(NAME, cfg.to_dict())
    tol = cfg.tolerance
    samples = max(cfg.samples // 20, 10)
    for p in cfg.primes:
        rng = random.Random(cfg.seed * 65537 + p)
        chars = [("trivial", trivial_char(p)), ("quadratic-unramified", unramified_char(p, Fraction(1, 2)))]
        for case in cfg.cases:
            prec = cfg.precision or 16
            ext = standard_extension(p, case, prec)
            ctx = ext.ctx
            report.add(run_check(
                f"coset-criterion/p={p}/{case}", "nbar(u) joins the w cell exactly when beta_(u, r) is a unit",
                lambda: Outcome(all(coset_criterion(ext, SAMPLE_DEPTH).values()), True, exact=True),
                tol, {"p": p, "case": case}, precision=prec))
            report.add(run_check(
                f"label/p={p}/{case}/diag2", "diag(varpi^2, 1) lies in the Iwahori cell at r = 2",
                lambda: Outcome(_label(ext, Mat2.diag_pi(ctx, 2)), (2, IWAHORI_CELL), exact=True),
                tol, {"p": p, "case": case}, precision=prec))
            if ext.case == INERT:
                report.add(run_check(
                    f"label/p={p}/{case}/weyl", "over an inert L, w lies in T(F) I",
                    lambda: Outcome(_label(ext, Mat2.weyl(ctx)), (0, IWAHORI_CELL), exact=True),
                    tol, {"p": p, "case": case}, precision=prec))
            if ext.case == RAMIFIED:
                report.add(run_check(
                    f"label/p={p}/{case}/u0", "over a ramified L, nbar(u0) gives the third cell",
                    lambda: Outcome(_label(ext, cell_representative(ext, 0, U0_CELL)), (0, U0_CELL), exact=True),
                    tol, {"p": p, "case": case}, precision=prec))
            for chi_name, chi in chars:
                for c in range(MAX_C_OMEGA + 1):
                    omegas = enumerate_omegas(ext, c)
                    if not omegas:
                        continue
                    omega = omegas[0]
                    tag = f"p={p}/{case}/chi={chi_name}/comega={c}"
                    inputs = {"p": p, "case": case, "chi": chi_name, "c_omega": c}
                    report.add(run_check(
                        f"hecke-relations/{tag}", "trace over nbar(u) and the Atkin-Lehner eigenvalue",
                        lambda omega=omega, chi=chi: Outcome(
                            verify_B_relations(ext, omega, chi, SAMPLE_DEPTH).max_residual, 0.0),
                        tol, inputs, precision=prec))
                    report.add(run_check(
                        f"tower-consistency/{tag}", "the Iwahori tower agrees with the Atkin-Lehner step",
                        lambda omega=omega, chi=chi: Outcome(
                            tower_consistency(_model(ext, omega, chi), SAMPLE_DEPTH), 0.0),
                        tol, inputs, precision=prec))
                    report.add(run_check(
                        f"value-rules/{tag}", "normalisation and tower rules of B",
                        lambda omega=omega, chi=chi: _value_rules_outcome(_model(ext, omega, chi), tol),
                        tol, inputs, measure=TORIC_MEASURE, precision=prec))
                    report.add(run_check(
                        f"equivariance/{tag}", "B(t g k) = Omega(t) B(g) for t in T and k in I",
                        lambda omega=omega, chi=chi: Outcome(
                            _translation_worst(_model(ext, omega, chi), rng, samples), 0.0),
                        tol, {**inputs, "samples": samples}, precision=prec))
                    report.add(run_check(
                        f"induced-proportionality/{tag}", "A(f) of the induced Steinberg newform is a multiple of B",
                        lambda omega=omega, chi=chi: Outcome(_induced_proportionality(ext, omega, chi), 0.0),
                        tol, inputs, measure=TORIC_MEASURE, precision=prec))
            if ext.case == INERT:
                report.add(run_check(
                    f"norm-character/p={p}/{case}", "Omega = chi o N gives B = 0",
                    lambda: Outcome(abs(SteinbergModel(ext, enumerate_omegas(ext, 0)[0], trivial_char(p))(
                        Mat2.weyl(ctx))), 0.0),
                    tol, {"p": p, "case": case}, precision=prec))
    logger.info("steinberg suite: %s", report.summary())
    return report
