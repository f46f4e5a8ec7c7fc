"""
Intertwining of minimal supercuspidals c-Ind_J rho with Omega on the
double coset T(F) g(m0, z) J, g(m0, z) = diag(z varpi^m0, 1).

Depth zero is checked through the character table of the cuspidal
representation of GL2(F_p); odd level through the additive character
y -> Omega(1 + y xi) against psi_alpha on the lower unipotent group.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from models.errors import InternalError, InvalidDataError, NotCoveredError
from models.finite_field import (
    ELLIPTIC,
    SCALAR,
    SPLIT_REGULAR,
    UNIPOTENT,
    FMat,
    class_type,
    dlog,
    residue_field_ext,
)
from models.matrices import Mat2
from models.padic import LocalFieldCtx
from models.quadratic import SPLIT, QuadExtData
from services.characters import (
    MultChar,
    OmegaChar,
    conductor,
    e,
    omega_conductor,
    omega_restriction_ok,
    psi_angle,
    unit_generator,
)
from services.gl2 import torus_matrix
from services.steinberg import order_depth
from services.unit_groups import projective_group

logger = logging.getLogger(__name__)

CHAIN_M = "M"
CHAIN_J = "J"
CHAIN_E = {CHAIN_M: 1, CHAIN_J: 2}

INNER_PRODUCT_TOL = 1e-9


def m0_and_i(level_e: int, e_a: int, c_omega: int, va: int) -> Tuple[int, int]:
    """
    m0 = [l + 3/2] - c(Omega) - v(a) with l = level_e / e_a, and
    i = [(l + 1)/2] for the chain order M, [(r + 2)/2] for J where level_e = 2r + 1.
    """
    if e_a not in (1, 2):
        raise InvalidDataError(f"e_A must be 1 or 2, got {e_a}")
    level = Fraction(level_e, e_a)
    if c_omega < 2 * level + 2:
        raise NotCoveredError(f"c(Omega) = {c_omega} below c(pi) = {2 * level + 2}")
    m0 = math.floor(level + Fraction(3, 2)) - c_omega - va
    if e_a == 1:
        i = math.floor((level + 1) / 2)
    else:
        if level_e % 2 == 0:
            raise InvalidDataError("a ramified simple stratum has odd n")
        r = (level_e - 1) // 2
        i = (r + 2) // 2
    return m0, i


def g_m0(ctx: LocalFieldCtx, m: int, z: int) -> Mat2:
    return Mat2.diag(ctx, ctx.element(z) * ctx.uniformizer(m), 1)


# -- depth zero -----------------------------------------------------------------------

@dataclass(frozen=True)
class DepthZeroSpec:
    """
    rho inflated from the cuspidal representation of GL2(F_p) attached to a
    regular character theta of F_{p^2}^x, with rho(varpi) = e(pi_angle).
    """

    p: int
    theta_angle: Fraction
    pi_angle: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "theta_angle", Fraction(self.theta_angle) % 1)
        object.__setattr__(self, "pi_angle", Fraction(self.pi_angle) % 1)
        order = self.p * self.p - 1
        if (self.theta_angle * order).denominator != 1:
            raise InvalidDataError(f"{self.theta_angle} is not a character of F_{self.p}^2 x")
        if (self.theta_angle * (self.p - 1)).denominator == 1:
            raise InvalidDataError("theta = theta^q: not regular")

    @property
    def q(self) -> int:
        return self.p

    @property
    def cond(self) -> int:
        return 2

    def theta(self, y) -> complex:
        return e(self.theta_angle * dlog(self.p, y))

    def theta_q(self, y) -> complex:
        return e(self.theta_angle * self.p * dlog(self.p, y))

    def central(self) -> MultChar:
        """omega_pi: theta on F_p^x, e(pi_angle) on varpi."""
        field_ext = residue_field_ext(self.p)
        ang = (self.theta_angle * dlog(self.p, field_ext.embed(unit_generator(self.p)))) % 1
        chi = MultChar(self.p, 1, ang, self.pi_angle)
        if conductor(chi) == 0:
            return MultChar(self.p, 0, Fraction(0), self.pi_angle)
        return chi


def cuspidal_char_value(spec: DepthZeroSpec, m: FMat) -> complex:
    """Trace of the cuspidal representation of GL2(F_p) attached to theta."""
    kind, eig = class_type(m, spec.p)
    if kind == SCALAR:
        return (spec.q - 1) * spec.theta(eig)
    if kind == UNIPOTENT:
        return -spec.theta(eig)
    if kind == ELLIPTIC:
        return -(spec.theta(eig) + spec.theta_q(eig))
    return 0j


def char_norm(spec: DepthZeroSpec) -> float:
    """<chi, chi> over GL2(F_p) by direct summation."""
    p = spec.p
    total, order = 0.0, 0
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 0:
                        continue
                    order += 1
                    total += abs(cuspidal_char_value(spec, (a, b, c, d))) ** 2
    return total / order


def class_census(spec: DepthZeroSpec) -> Dict[str, int]:
    """Element count per class type of GL2(F_p)."""
    p = spec.p
    counts = {SCALAR: 0, UNIPOTENT: 0, ELLIPTIC: 0, SPLIT_REGULAR: 0}
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p:
                        counts[class_type((a, b, c, d), p)[0]] += 1
    return counts


@dataclass
class HomDimension:
    dim: int
    raw: complex
    group_size: int
    m: int
    z: int


def _scaled_into_gl2o(h: Mat2):
    """(v, h varpi^(-v)) with h varpi^(-v) in GL2(o), or None."""
    vdet = h.det.valuation()
    if vdet % 2:
        return None
    v = vdet // 2
    scaled = h * h.ctx.uniformizer(-v)
    return (v, scaled) if scaled.in_GL2o() else None


def hom_dim_depth0(spec: DepthZeroSpec, ext: QuadExtData, omega: OmegaChar, z: int,
                   m: Optional[int] = None) -> HomDimension:
    """
    dim Hom over J cap g^-1 T(F) g of (rho, Omega^g), g = g(m, z), as the
    exact average of Tr rho(h) Omega^g(h)^-1 over the finite image of the
    intersection.
    """
    if ext.case == SPLIT:
        raise InvalidDataError("the torus must come from a field")
    ctx = ext.ctx
    c_omega = omega_conductor(omega)
    va = ext.va
    if m is None:
        m, _ = m0_and_i(0, 1, c_omega, va)
    test_points = [ctx.element(unit_generator(ext.p)), ctx.uniformizer()]
    if not omega_restriction_ok(omega, spec.central(), test_points):
        raise InvalidDataError("Omega restricted to F^x differs from the central character of rho")
    depth = max(c_omega, 1 + m, 1 - m - va, 1)
    grp = projective_group(ext, depth)
    g = g_m0(ctx, m, z)
    g_inv = g.inverse()
    pil = ext.uniformizer_L()
    total, size = 0j, 0
    for key in grp.group.elements:
        x, y = grp.representative(key)
        t = ext.element(x, y)
        if key[0]:
            t = t * pil
        found = _scaled_into_gl2o(g_inv * torus_matrix(t) * g)
        if found is None:
            continue
        v, h = found
        size += 1
        reduced = tuple(entry.residue(1) for entry in h.entries())
        total += e(spec.pi_angle * v) * cuspidal_char_value(spec, reduced) * e(-omega.angle(t))
    if size == 0:
        raise InternalError("empty intersection of T(F) with a conjugate of J")
    raw = total / size
    dim = round(raw.real)
    if abs(raw - dim) > INNER_PRODUCT_TOL:
        raise InternalError(f"character inner product {raw} is not an integer")
    logger.debug("hom dim at m=%d z=%d: %s over %d elements", m, z, raw, size)
    return HomDimension(int(dim), raw, size, m, z)


def depth0_support(spec: DepthZeroSpec, ext: QuadExtData, omega: OmegaChar) -> Dict[int, int]:
    """dim at g(m0, z) for z over o^x / (1 + p^i)."""
    c_omega = omega_conductor(omega)
    m0, i = m0_and_i(0, 1, c_omega, ext.va)
    zs = ext.ctx.enumerate_units(i) if i > 0 else [1]
    return {z: hom_dim_depth0(spec, ext, omega, z, m0).dim for z in zs}


# -- odd level ---------------------------------------------------------------------

@dataclass(frozen=True)
class OddLevelSpec:
    """
    rho = lambda on J_alpha with alpha = varpi^-n alpha0, n = level_e, and
    alpha0 = scale * [[0, 1], [a0, a1]].
    """

    level_e: int
    chain: str
    a0: int
    a1: int
    scale: int = 1

    def __post_init__(self):
        if self.chain not in CHAIN_E:
            raise InvalidDataError(f"unknown chain order '{self.chain}'")
        if self.level_e % 2 == 0 or self.level_e < 1:
            raise InvalidDataError("odd level needs n = 2r + 1")

    @property
    def e_a(self) -> int:
        return CHAIN_E[self.chain]

    @property
    def r(self) -> int:
        return (self.level_e - 1) // 2

    @property
    def level(self) -> Fraction:
        return Fraction(self.level_e, self.e_a)

    @property
    def cond(self) -> int:
        return int(2 * self.level + 2)

    @property
    def top(self) -> int:
        """psi_alpha(nbar(u)) = psi(scale varpi^-top u)."""
        return self.level_e + 1 if self.chain == CHAIN_M else self.r + 2

    def validate(self, p: int):
        if self.scale % p == 0:
            raise InvalidDataError("the scale of alpha0 must be a unit")
        if self.chain == CHAIN_M:
            disc = (self.a1 * self.a1 + 4 * self.a0) % p
            if disc == 0 or pow(disc, (p - 1) // 2, p) == 1:
                raise InvalidDataError("alpha0 mod p does not generate the unramified quadratic extension")
        elif self.a0 % p or self.a0 % (p * p) == 0 or self.a1 % p:
            raise InvalidDataError("a ramified simple stratum needs v(a0) = 1 and a1 in p")


def _omega_side_angle(spec: OddLevelSpec, ext: QuadExtData, omega: OmegaChar, z: int, m0: int, i: int) -> Fraction:
    ctx = ext.ctx
    y = -(ctx.uniformizer(i) / (ext.a * ctx.element(z) * ctx.uniformizer(m0)))
    return omega.angle(ext.element(1) + ext.xi * y)


def _rho_side_angle(spec: OddLevelSpec, ctx: LocalFieldCtx, i: int) -> Fraction:
    return psi_angle(ctx.element(spec.scale) * ctx.uniformizer(i - spec.top))


def intertwine_oddlevel(spec: OddLevelSpec, ext: QuadExtData, omega: OmegaChar, z: int) -> bool:
    """
    Omega^g(m0, z) and psi_alpha agree on nbar(p^i) / nbar(p^top); both are
    characters of a cyclic group, so agreement on nbar(varpi^i) suffices.
    """
    spec.validate(ext.p)
    c_omega = omega_conductor(omega)
    m0, i = m0_and_i(spec.level_e, spec.e_a, c_omega, ext.va)
    lhs = _omega_side_angle(spec, ext, omega, z, m0, i)
    rhs = _rho_side_angle(spec, ext.ctx, i)
    return (lhs - rhs) % 1 == 0


def omega_additive(ext: QuadExtData, omega: OmegaChar, k: int) -> bool:
    """y -> Omega(1 + y xi) is additive on p^k / p^c(Omega), tested on a grid of residues."""
    ctx = ext.ctx
    c_omega = omega_conductor(omega)
    if k >= c_omega:
        return True
    step = ctx.uniformizer(k)
    samples = [step * s for s in range(min(ext.p ** (c_omega - k), 2 * ext.p))]
    one = ext.element(1)

    def ang(y):
        return omega.angle(one + ext.xi * y)

    return all((ang(a) + ang(b) - ang(a + b)) % 1 == 0 for a in samples for b in samples)


@dataclass
class Z0Report:
    ok: bool
    z0: int
    i: int
    m0: int
    resolution: int
    matches: List[int] = field(default_factory=list)
    additive: bool = True


def find_z0(spec: OddLevelSpec, ext: QuadExtData, omega: OmegaChar) -> Z0Report:
    """Scan z and report the unique class mod p^i on which rho and Omega intertwine."""
    spec.validate(ext.p)
    c_omega = omega_conductor(omega)
    m0, i = m0_and_i(spec.level_e, spec.e_a, c_omega, ext.va)
    resolution = max(spec.top - i, i, 1)
    rhs = _rho_side_angle(spec, ext.ctx, i)
    matches = [z for z in ext.ctx.enumerate_units(resolution)
               if (_omega_side_angle(spec, ext, omega, z, m0, i) - rhs) % 1 == 0]
    classes = sorted({z % ext.p ** i for z in matches})
    k = c_omega - math.floor(spec.level / 2) - 1
    additive = omega_additive(ext, omega, k)
    ok = len(classes) == 1 and additive
    if not ok:
        logger.warning("find_z0: %d classes mod p^%d matched (%s)", len(classes), i, classes)
    return Z0Report(ok, classes[0] if classes else 0, i, m0, resolution, matches, additive)


def intersection_depth(spec: OddLevelSpec, ext: QuadExtData, omega: OmegaChar, z: int) -> Tuple[bool, Dict[str, int]]:
    """
    For the chain order M: t = 1 + Y beta conjugated by g(m0, z) has lower
    left entry in p^i exactly when v(Y) >= c(Omega) - [l/2] - 1.
    """
    if spec.chain != CHAIN_M:
        raise NotCoveredError("intersection depth is stated for the chain order M")
    ctx = ext.ctx
    c_omega = omega_conductor(omega)
    m0, i = m0_and_i(spec.level_e, spec.e_a, c_omega, ext.va)
    k = c_omega - math.floor(spec.level / 2) - 1
    g = g_m0(ctx, m0, z)
    g_inv = g.inverse()
    depths = {}
    for name, v in (("at_k", k), ("below_k", k - 1)):
        t = ext.element(1, ctx.uniformizer(v))
        depths[name] = (g_inv * torus_matrix(t) * g).c.valuation()
    ok = depths["at_k"] >= i > depths["below_k"]
    return ok, {"k": k, "i": i, **depths}


def unipotent_restriction(spec: DepthZeroSpec) -> Dict[int, int]:
    """
    Multiplicity of each character x -> e(u x / p) of Nbar(F_p) in the
    cuspidal representation; every nontrivial one occurs once.
    """
    p = spec.p
    values = [cuspidal_char_value(spec, (1, 0, x, 1)) for x in range(p)]
    out = {}
    for u in range(p):
        raw = sum(values[x] * e(Fraction(-u * x, p)) for x in range(p)) / p
        mult = round(raw.real)
        if abs(raw - mult) > INNER_PRODUCT_TOL:
            raise InternalError(f"multiplicity {raw} of u={u} is not an integer")
        out[u] = int(mult)
    return out


def gl2o_double_coset(ext: QuadExtData, m: int, z: int) -> Tuple[int, int]:
    """
    The r with g(m, z) in T(F) diag(varpi^r, 1) Z GL2(o), read off the order
    of g(m, z) o^2, next to max(0, m, -m - v(a)).
    """
    return order_depth(g_m0(ext.ctx, m, z), ext), max(0, m, -m - ext.va)
