"""
Newform of an unramified twist chi St in its Omega-Waldspurger model.

Double cosets T(F) \\ GL2(F) / I are read off the lattice g o^2: under
z -> M(z) e2 the plane F^2 is identified with L, so that g o^2 becomes
z (o + varpi^r o_L) and the first column of g fixes the Iwahori cell.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.errors import DepthExceededError, InternalError, InvalidDataError, UnsupportedKindError
from models.matrices import Mat2
from models.quadratic import INERT, RAMIFIED, LElement, QuadExtData
from services.characters import MultChar, OmegaChar, omega_conductor, omega_restriction_ok, unit_generator
from services.gl2 import IWAHORI, subgroup_member, torus_matrix
from services.induced import newform_vector, toric_functional_A
from services.representations import steinberg

logger = logging.getLogger(__name__)

IWAHORI_CELL = "I"
W_CELL = "w"
U0_CELL = "u0"

CELL_ORDER = (IWAHORI_CELL, W_CELL, U0_CELL)


@dataclass(frozen=True)
class DoubleCosetLabel:
    """g = M(t) rep(r, cell) k with k in I."""

    r: int
    cell: str
    t: Optional[LElement] = field(default=None, compare=False, repr=False)
    k: Optional[Mat2] = field(default=None, compare=False, repr=False)


def cell_representative(ext: QuadExtData, r: int, cell: str) -> Mat2:
    ctx = ext.ctx
    if cell == IWAHORI_CELL:
        return Mat2.diag_pi(ctx, r)
    if cell == W_CELL:
        return Mat2.diag_pi(ctx, r) * Mat2.weyl(ctx)
    if cell == U0_CELL:
        if ext.case != RAMIFIED or r != 0:
            raise InvalidDataError("the u0 cell only exists for r = 0 over a ramified L")
        return Mat2.lower(ctx, ext.u0)
    raise InvalidDataError(f"unknown cell '{cell}'")


def cells_at(ext: QuadExtData, r: int) -> List[str]:
    """The cells T(F) diag(varpi^r, 1) GL2(o) splits into."""
    if r > 0:
        return [IWAHORI_CELL, W_CELL]
    if ext.case == INERT:
        return [IWAHORI_CELL]
    return [W_CELL, U0_CELL]


def order_depth(g: Mat2, ext: QuadExtData) -> int:
    """r with {z in L : z g o^2 in g o^2} = o + varpi^r o_L."""
    conj = g.inverse() * torus_matrix(ext.beta) * g
    return max(0, -conj.min_valuation())


def _column(ext: QuadExtData, top, bottom) -> LElement:
    return ext.element(bottom, top)


def classify_double_coset(g: Mat2, ext: QuadExtData, depth: int) -> DoubleCosetLabel:
    """
    Find (r, cell) with g in T(F) diag(varpi^r, 1) (cell) I together with
    the torus element t and the Iwahori element k.
    """
    r = order_depth(g, ext)
    if r > depth:
        raise DepthExceededError(depth)
    lam1 = _column(ext, g.a, g.c)
    lam2 = _column(ext, g.b, g.d)
    z = min((lam1, lam2, lam1 + lam2), key=lambda w: w.norm().valuation())
    w1 = lam1 / z
    if not w1.y.in_ideal(r):
        raise InternalError(f"first column left the order o + p^{r} o_L")
    x, y = w1.x, w1.y.shift(-r)
    if r > 0:
        if x.is_unit():
            cell, t = W_CELL, -lam1
        else:
            cell, t = IWAHORI_CELL, z * y
    elif ext.case == INERT:
        cell, t = IWAHORI_CELL, lam1 / ext.beta
    elif w1.norm().is_unit():
        cell, t = W_CELL, -lam1
    else:
        cell, t = U0_CELL, lam1 / ext.uniformizer_L()
    k = (torus_matrix(t) * cell_representative(ext, r, cell)).inverse() * g
    if not subgroup_member(k, IWAHORI):
        raise InternalError(f"cell {cell} at r={r} did not give an Iwahori element")
    logger.debug("Classified g into r=%d cell=%s", r, cell)
    return DoubleCosetLabel(r, cell, t, k)


# -- the newform B ------------------------------------------------------------------

def is_norm_character(omega: OmegaChar, chi: MultChar) -> bool:
    """Omega = chi o N_{L/F} (only possible when c(Omega) = 0)."""
    if omega_conductor(omega) != 0:
        return False
    pil = omega.ext.uniformizer_L()
    return (omega.angle(pil) - chi.angle(pil.norm())) % 1 == 0


class SteinbergModel:
    """
    The function B with B(t g k) = Omega(t) B(g), normalised by
    B(diag(varpi^c(Omega), 1) w) = 1.
    """

    def __init__(self, ext: QuadExtData, omega: OmegaChar, chi: MultChar, depth: int = 32):
        if not chi.is_unramified():
            raise UnsupportedKindError("steinberg-ram", "Waldspurger newform table (use the induced model)")
        ctx = ext.ctx
        pi = steinberg(chi)
        if not omega_restriction_ok(omega, pi.central, [ctx.element(unit_generator(ext.p)), ctx.uniformizer()]):
            raise InvalidDataError("Omega restricted to F^x differs from chi^2")
        self.ext = ext
        self.omega = omega
        self.chi = chi
        self.pi = pi
        self.depth = depth
        self.q = ext.q
        self.alpha = chi.at_pi(1)
        self.c = omega_conductor(omega)
        self.vanishes = is_norm_character(omega, chi)
        if self.vanishes:
            logger.info("Omega = chi o N: no Waldspurger model, B vanishes identically")

    def w_tower(self, r: int) -> complex:
        """B(diag(varpi^r, 1) w)."""
        c = self.c
        if r >= max(c - 1, 0):
            return (self.alpha / self.q) ** (r - c)
        return 0j

    def iwahori_tower(self, r: int) -> complex:
        """B(diag(varpi^r, 1)) for r > 0."""
        if r < self.c:
            return 0j
        return -self.q * self.w_tower(r)

    def u0_value(self) -> complex:
        return -self.q * self.w_tower(0) if self.c == 0 else 0j

    def representative_value(self, r: int, cell: str) -> complex:
        if self.vanishes:
            return 0j
        if cell == W_CELL:
            return self.w_tower(r)
        if cell == U0_CELL:
            return self.u0_value()
        if r > 0:
            return self.iwahori_tower(r)
        # B(1) = -chi(varpi)^-1 B(atkin-lehner), which sits at r = 1
        return -self(Mat2.atkin_lehner(self.ext.ctx)) / self.alpha

    def __call__(self, g: Mat2) -> complex:
        if self.vanishes:
            return 0j
        label = classify_double_coset(g, self.ext, self.depth)
        value = self.representative_value(label.r, label.cell)
        if value == 0:
            return 0j
        return self.omega(label.t) * value


def steinberg_B(g: Mat2, ext: QuadExtData, omega: OmegaChar, chi: MultChar) -> complex:
    return SteinbergModel(ext, omega, chi)(g)


@dataclass
class RelationReport:
    max_residual: float
    checked: int
    vanishes: bool
    residuals: Dict[str, float] = field(default_factory=dict)


def _sample_points(ext: QuadExtData, sample_depth: int) -> List[Tuple[str, Mat2]]:
    points = []
    for r in range(sample_depth + 1):
        for cell in cells_at(ext, r):
            points.append((f"r={r},{cell}", cell_representative(ext, r, cell)))
    if ext.case == INERT:
        points.append(("r=0,w", Mat2.weyl(ext.ctx)))
    return points


def verify_B_relations(ext: QuadExtData, omega: OmegaChar, chi: MultChar, sample_depth: int) -> RelationReport:
    """
    sum over u in o/p of B(g nbar(u)) = -B(g w) and B(g [[0, 1], [varpi, 0]]) = -chi(varpi) B(g)
    on every cell representative with r <= sample_depth.
    """
    model = SteinbergModel(ext, omega, chi, depth=sample_depth + 2)
    ctx = ext.ctx
    al = Mat2.atkin_lehner(ctx)
    w = Mat2.weyl(ctx)
    residuals: Dict[str, float] = {}
    for name, g in _sample_points(ext, sample_depth):
        trace = sum(model(g * Mat2.lower(ctx, u)) for u in range(ext.p))
        residuals[f"trace {name}"] = abs(trace + model(g * w))
        residuals[f"atkin-lehner {name}"] = abs(model(g * al) + model.alpha * model(g))
    worst = max(residuals.values()) if residuals else 0.0
    logger.debug("Steinberg relations checked on %d points, worst residual %.3e", len(residuals), worst)
    return RelationReport(worst, len(residuals), model.vanishes, residuals)


def tower_consistency(model: SteinbergModel, depth: int) -> float:
    """
    B(diag(varpi^(r+1), 1)) reached two ways: as -q times the w-tower and
    through the Atkin-Lehner step -chi(varpi) B(diag(varpi^r, 1) w).
    """
    worst = 0.0
    for r in range(max(model.c - 1, 0), depth):
        direct = model.iwahori_tower(r + 1)
        through_al = -model.alpha * model.w_tower(r)
        worst = max(worst, abs(direct - through_al))
    return worst


# -- consistency checks ------------------------------------------------------------

def beta_ur(ext: QuadExtData, u: int, r: int):
    """beta_(u, r) = a varpi^2r + b varpi^r u + c u^2."""
    ctx = ext.ctx
    pr = ctx.uniformizer(r)
    return ext.a * pr * pr + ext.b * pr * u + ext.c * u * u


def coset_criterion(ext: QuadExtData, depth: int) -> Dict[str, bool]:
    """
    T diag(varpi^r, 1) w I = T diag(varpi^r, 1) nbar(u) I exactly when
    beta_(u, r) is a unit, for u in o/p and 0 <= r <= depth.
    """
    ctx = ext.ctx
    results: Dict[str, bool] = {}
    for r in range(depth + 1):
        base = classify_double_coset(Mat2.diag_pi(ctx, r) * Mat2.weyl(ctx), ext, depth + 1)
        for u in range(ext.p):
            label = classify_double_coset(Mat2.diag_pi(ctx, r) * Mat2.lower(ctx, u), ext, depth + 1)
            same = (label.r, label.cell) == (base.r, base.cell)
            results[f"r={r},u={u}"] = same == beta_ur(ext, u, r).is_unit()
    return results


def integrated_values(model: SteinbergModel, depth: int) -> Dict[Tuple[int, str], complex]:
    """
    B on the cell representatives with r <= depth, integrated from its
    definition: the toric integral of the Iwahori-fixed vector of
    chi|.|^(1/2) x chi|.|^(-1/2), scaled to 1 at diag(varpi^c(Omega), 1) w.
    Unscaled when Omega = chi o N, where every value must vanish.
    """
    ext = model.ext
    fvec = newform_vector(model.pi)
    points = [(r, cell) for r in range(depth + 1) for cell in cells_at(ext, r)]
    raw = {key: toric_functional_A(fvec, cell_representative(ext, *key), model.omega) for key in points}
    if model.vanishes:
        return raw
    anchor = toric_functional_A(fvec, cell_representative(ext, model.c, W_CELL), model.omega)
    if anchor == 0:
        raise InternalError("the toric integral vanishes at the normalising point")
    return {key: value / anchor for key, value in raw.items()}


def value_rules(model: SteinbergModel, depth: int, tol: float = 1e-9) -> Dict[str, bool]:
    """
    The tower rules of B checked on integrated values. The depth is capped
    at max(c(Omega), 1) + 1, the range the default toric depth resolves.
    """
    c, q = model.c, model.q
    top = min(depth, max(c, 1) + 1)
    got = integrated_values(model, top)
    if model.vanishes:
        return {"vanishes": all(abs(v) <= tol for v in got.values())}

    def close(a: complex, b: complex) -> bool:
        return abs(a - b) <= tol

    ext = model.ext
    rules = {
        "w-tower vanishes below c-1": all(close(got[(r, W_CELL)], 0)
                                          for r in range(max(c - 1, 0)) if (r, W_CELL) in got),
        "up one step": close(got[(c + 1, W_CELL)], model.alpha / q) if c + 1 <= top else True,
        "iwahori is -q w": all(close(got[(r, IWAHORI_CELL)], -q * got[(r, W_CELL)])
                               for r in range(max(c, 1), top + 1)),
        "table": all(close(got[key], model(cell_representative(ext, *key))) for key in got),
    }
    if ext.case == RAMIFIED:
        rules["u0 cell"] = close(got[(0, U0_CELL)], -q * got[(0, W_CELL)] if c == 0 else 0)
    failed = [name for name, ok in rules.items() if not ok]
    if failed:
        logger.warning("Steinberg value rules failed for c(Omega)=%d: %s", c, failed)
    return rules


def translation_residual(model: SteinbergModel, g: Mat2, t: LElement, k: Mat2) -> float:
    """|B(t g k) - Omega(t) B(g)| for t in T and k in I."""
    if not subgroup_member(k, IWAHORI):
        raise InvalidDataError("k must lie in the Iwahori subgroup")
    return abs(model(torus_matrix(t) * g * k) - model.omega(t) * model(g))
