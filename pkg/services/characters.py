"""
Characters of F^x and L^x, the additive character psi, Gauss integrals
and epsilon factors.

Character values are exact rational angles (the value is e(angle) =
exp(2 pi i angle)); sums of values are formed in complex floating point.

Measure conventions:
    gauss_integral          vol(o^x) = 1 - 1/q
"""

import cmath
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from sympy import primitive_root

from config import Config
from models.errors import CapacityError, InvalidDataError, PrecisionError
from models.padic import LocalFieldCtx, PAdic
from models.quadratic import INERT, RAMIFIED, SPLIT, LElement, QuadExtData
from services.unit_groups import (
    FullUnitGroup,
    ProjectiveUnitGroup,
    full_group,
    projective_group,
    split_off_uniformizers,
)

logger = logging.getLogger(__name__)

GAUSS_MEASURE = "vol(o^x) = 1 - 1/q"


def e(angle) -> complex:
    return cmath.exp(2j * cmath.pi * float(angle))


@lru_cache(maxsize=None)
def unit_generator(p: int) -> int:
    """A primitive root mod p^2, hence a generator of (o/p^c)^x for every c."""
    return int(primitive_root(p * p))


@lru_cache(maxsize=64)
def dlog_table(p: int, c: int) -> Dict[int, int]:
    """Discrete logarithms base unit_generator(p) on (Z/p^c)^x."""
    order = (p - 1) * p ** (c - 1)
    if order > Config.CAPACITY_CAP:
        raise CapacityError(order, Config.CAPACITY_CAP)
    g, mod = unit_generator(p), p ** c
    table, cur = {}, 1
    for k in range(order):
        table[cur] = k
        cur = cur * g % mod
    return table


# -- additive character -------------------------------------------------------

def psi_angle(x: PAdic) -> Fraction:
    """Angle of psi(x) for the standard psi of conductor o."""
    return x.fractional_part()


def psi_eval(x: PAdic) -> complex:
    return e(psi_angle(x))


# -- characters of F^x --------------------------------------------------------

@dataclass(frozen=True)
class MultChar:
    """
    chi(varpi^v u) = e(gen_angle * dlog(u) + pi_angle * v) * q^(-shift * v).

    The angle on the generator is read modulo p^cond, so gen_angle must
    have denominator dividing (p-1)p^(cond-1).
    """

    p: int
    cond: int
    gen_angle: Fraction
    pi_angle: Fraction = Fraction(0)
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "gen_angle", Fraction(self.gen_angle) % 1)
        object.__setattr__(self, "pi_angle", Fraction(self.pi_angle) % 1)
        object.__setattr__(self, "shift", Fraction(self.shift))

    @property
    def q(self) -> int:
        return self.p

    def is_unramified(self) -> bool:
        return self.cond == 0

    def is_unitary(self) -> bool:
        return self.shift == 0

    def is_trivial(self) -> bool:
        return self.cond == 0 and self.pi_angle == 0 and self.shift == 0

    def unit_angle(self, u: int) -> Fraction:
        """Angle of chi on the unit with residue u (mod p^cond)."""
        if self.cond == 0:
            return Fraction(0)
        u %= self.p ** self.cond
        return (self.gen_angle * dlog_table(self.p, self.cond)[u]) % 1

    def angle(self, x: PAdic) -> Fraction:
        """Angle of chi(x); the shift factor is excluded."""
        x.require_nonzero()
        v = x.valuation()
        ang = self.pi_angle * v
        if self.cond:
            unit = x.unit_part()
            if unit.prec < self.cond:
                raise PrecisionError(f"character of conductor {self.cond} needs more unit digits")
            ang += self.unit_angle(unit.unit)
        return ang % 1

    def modulus(self, v: int) -> float:
        return float(self.q) ** (-float(self.shift) * v)

    def __call__(self, x: PAdic) -> complex:
        return e(self.angle(x)) * self.modulus(x.valuation())

    def at_pi(self, k: int = 1) -> complex:
        return e(self.pi_angle * k) * self.modulus(k)

    def __mul__(self, other: "MultChar") -> "MultChar":
        c = max(self.cond, other.cond)
        ang = self.gen_angle + other.gen_angle
        return _with_exact_conductor(self.p, c, ang, self.pi_angle + other.pi_angle, self.shift + other.shift)

    def inverse(self) -> "MultChar":
        return MultChar(self.p, self.cond, -self.gen_angle, -self.pi_angle, -self.shift)

    def twist(self, t) -> "MultChar":
        """chi * |.|^t."""
        return MultChar(self.p, self.cond, self.gen_angle, self.pi_angle, self.shift + Fraction(t))

    def unitary_part(self) -> "MultChar":
        return MultChar(self.p, self.cond, self.gen_angle, self.pi_angle)


def _conductor_of_angle(p: int, gen_angle: Fraction) -> int:
    if gen_angle % 1 == 0:
        return 0
    k = 1
    while (gen_angle * (p - 1) * p ** (k - 1)).denominator != 1:
        k += 1
    return k


def _with_exact_conductor(p, c, gen_angle, pi_angle, shift) -> MultChar:
    return MultChar(p, _conductor_of_angle(p, Fraction(gen_angle) % 1), gen_angle, pi_angle, shift)


def conductor(chi: MultChar) -> int:
    """Smallest k with chi trivial on 1 + p^k (0 when trivial on o^x)."""
    return _conductor_of_angle(chi.p, chi.gen_angle)


def build_mult_char(ctx: LocalFieldCtx, c: int, gen_angle, pi_angle=0, shift=0) -> MultChar:
    if c < 0:
        raise InvalidDataError(f"negative conductor {c}")
    if c > ctx.N:
        raise PrecisionError(f"conductor {c} above working precision {ctx.N}", needed=c)
    gen_angle = Fraction(gen_angle) % 1
    order = (ctx.p - 1) * ctx.p ** (c - 1) if c else 1
    if (gen_angle * order).denominator != 1:
        raise InvalidDataError(f"angle {gen_angle} is not a character of (o/p^{c})^x")
    chi = MultChar(ctx.p, c, gen_angle, pi_angle, shift)
    if conductor(chi) != c:
        raise InvalidDataError(f"angle {gen_angle} has conductor {conductor(chi)}, not {c}")
    return chi


def trivial_char(p: int) -> MultChar:
    return MultChar(p, 0, Fraction(0))


def unramified_char(p: int, pi_angle, shift=0) -> MultChar:
    return MultChar(p, 0, Fraction(0), pi_angle, shift)


def enumerate_mult_chars(ctx: LocalFieldCtx, c: int, pi_angle=0) -> List[MultChar]:
    """All characters of exact conductor c with the given value on varpi."""
    if c == 0:
        return [unramified_char(ctx.p, pi_angle)]
    order = (ctx.p - 1) * ctx.p ** (c - 1)
    out = []
    for k in range(order):
        ang = Fraction(k, order)
        if _conductor_of_angle(ctx.p, ang) == c:
            out.append(MultChar(ctx.p, c, ang, pi_angle))
    return out


def gauss_integral(mu: MultChar, m: int) -> complex:
    """
    Integral over o^x of psi(a varpi^m) mu^-1(a) d^x a with vol(o^x) = 1 - 1/q,
    computed as an exact finite sum over (o/p^n)^x, n = max(c(mu), -m, 1).
    """
    p, c = mu.p, mu.cond
    n = max(c, -m, 1)
    mod = p ** n
    units = np.array([a for a in range(mod) if a % p], dtype=np.int64)
    if m < 0:
        psi_angles = (units % p ** (-m)) / float(p ** (-m))
    else:
        psi_angles = np.zeros(len(units))
    if c:
        chi_angles = np.array([float(mu.unit_angle(int(a))) for a in units])
    else:
        chi_angles = np.zeros(len(units))
    total = np.exp(2j * np.pi * (psi_angles - chi_angles)).sum()
    return complex(total) / mod


def epsilon_factor(mu: MultChar) -> complex:
    """epsilon(1/2, mu, psi) from the Gauss integral at m = -c(mu)."""
    c = mu.cond
    if c == 0:
        return 1 + 0j
    g = gauss_integral(mu, -c)
    return g * float(mu.q) ** (c / 2) / mu.at_pi(-c)


# -- characters of L^x --------------------------------------------------------

@dataclass(frozen=True)
class OmegaChar:
    """
    A character of L^x given on a finite quotient.

    ``projective`` characters live on L^x / F^x (1 + p^M o_L); otherwise
    ``angles`` describe the restriction to o_L^x / (1 + p^M o_L) and
    ``pi_angle`` / ``pil_angle`` the values on varpi and varpi_L. An optional
    unramified ``twist`` chi contributes chi(N(t)).
    """

    ext: QuadExtData
    M: int
    angles: Tuple[Fraction, ...]
    projective: bool = True
    pi_angle: Fraction = Fraction(0)
    pil_angle: Fraction = Fraction(0)
    twist: Optional[MultChar] = None
    index: int = field(default=0, compare=False)

    @property
    def group(self) -> Union[ProjectiveUnitGroup, FullUnitGroup]:
        return projective_group(self.ext, self.M) if self.projective else full_group(self.ext, self.M)

    def angle(self, t: LElement) -> Fraction:
        if self.projective:
            grp = self.group
            ang = grp.group.angle(self.angles, grp.key_of(t))
        else:
            k, par, u = split_off_uniformizers(t)
            grp = self.group
            ang = k * self.pi_angle + par * self.pil_angle + grp.group.angle(self.angles, grp.key_of_unit(u))
        if self.twist is not None:
            ang += self.twist.angle(t.norm())
        return ang % 1

    def __call__(self, t: LElement) -> complex:
        return e(self.angle(t))

    def twisted_by(self, chi: MultChar) -> "OmegaChar":
        if not chi.is_unramified():
            raise InvalidDataError("only unramified twists chi o N are supported")
        return OmegaChar(self.ext, self.M, self.angles, self.projective, self.pi_angle,
                         self.pil_angle, chi, self.index)

    def restriction_angle(self, z: PAdic) -> Fraction:
        return self.angle(self.ext.element(z))


def build_omega(ext: QuadExtData, M: int, data: Dict) -> OmegaChar:
    """
    Build Omega from explicit data: ``angles`` on the generators of the
    chosen quotient, plus ``pi_angle``/``pil_angle`` for non-projective data.
    """
    projective = data.get("projective", True)
    grp = projective_group(ext, M) if projective else full_group(ext, M)
    angles = tuple(Fraction(a) % 1 for a in data.get("angles", ()))
    if len(angles) != len(grp.group.generators):
        raise InvalidDataError(f"expected {len(grp.group.generators)} generator angles, got {len(angles)}")
    for j, (k, rel) in enumerate(zip(grp.group.rel_orders, grp.group.relations)):
        lhs = k * angles[j]
        rhs = sum((r * a for r, a in zip(rel, angles)), Fraction(0))
        if (lhs - rhs) % 1 != 0:
            raise InvalidDataError(f"angles violate the relation of generator {j}")
    return OmegaChar(ext, M, angles, projective, Fraction(data.get("pi_angle", 0)),
                     Fraction(data.get("pil_angle", 0)))


def omega_conductor(omega: OmegaChar) -> int:
    """min m >= 0 with Omega trivial on (1 + p^m o_L) cap o_L^x."""
    ext = omega.ext
    grp = omega.group
    ring = grp.ring
    if omega.projective:
        units = grp.unit_keys()
        if all(grp.group.angle(omega.angles, k) == 0 for k in units):
            return 0
        for m in range(1, omega.M + 1):
            step = ext.p ** m
            if all(grp.group.angle(omega.angles, (0, "x", s)) == 0 for s in range(0, ring.mod, step)):
                return m
        return omega.M
    if all(a == 0 for a in omega.angles):
        return 0
    for m in range(1, omega.M + 1):
        pm = ext.p ** m % ring.mod
        gens = [((1 + pm) % ring.mod, 0), (1, pm)]
        if all(grp.group.angle(omega.angles, g) == 0 for g in gens):
            return m
    return omega.M


def enumerate_omegas(ext: QuadExtData, target_cond: int, omega_pi: Optional[MultChar] = None) -> List[OmegaChar]:
    """Every Omega with Omega|F^x = omega_pi and c(Omega) = target_cond."""
    if ext.case == SPLIT:
        raise InvalidDataError("split tori are handled through pairs of characters of F^x")
    omega_pi = omega_pi or trivial_char(ext.p)
    if not omega_pi.is_unitary():
        raise InvalidDataError("central character must be unitary")
    if omega_pi.cond == 0 and omega_pi.pi_angle == 0:
        return _enumerate_projective(ext, target_cond)
    return _enumerate_full(ext, target_cond, omega_pi)


def _enumerate_projective(ext: QuadExtData, target: int) -> List[OmegaChar]:
    M = max(target, 1)
    grp = projective_group(ext, M)
    out = []
    for theta in grp.group.characters():
        omega = OmegaChar(ext, M, theta, True, index=len(out))
        if omega_conductor(omega) == target:
            out.append(omega)
    logger.debug("%d characters of conductor %d on a %s torus (M=%d)", len(out), target, ext.case, M)
    return out


def _enumerate_full(ext: QuadExtData, target: int, omega_pi: MultChar) -> List[OmegaChar]:
    if omega_pi.cond > target:
        return []
    M = max(target, 1)
    grp = full_group(ext, M)
    g0 = unit_generator(ext.p) % grp.ring.mod
    g0_key = (g0, 0)
    eps_angle_key = grp.ring.of(ext.eps_ramified()) if ext.case == RAMIFIED else None
    out = []
    for theta in grp.group.characters():
        if grp.group.angle(theta, g0_key) != omega_pi.gen_angle % 1:
            continue
        candidate = OmegaChar(ext, M, theta, False)
        if omega_conductor(candidate) != target:
            continue
        if ext.case == INERT:
            choices = [omega_pi.pi_angle]
        else:
            # Omega(varpi_L)^2 = omega(varpi) Omega(eps)
            half = (omega_pi.pi_angle + grp.group.angle(theta, eps_angle_key)) / 2
            choices = [half % 1, (half + Fraction(1, 2)) % 1]
        for pil in choices:
            out.append(OmegaChar(ext, M, theta, False, omega_pi.pi_angle, pil, index=len(out)))
    return out


def omega_restriction_ok(omega: OmegaChar, omega_pi: MultChar, samples: List[PAdic]) -> bool:
    """Omega(z) = omega_pi(z) on the sample points of F^x."""
    return all((omega.angle(omega.ext.element(z)) - omega_pi.angle(z)) % 1 == 0 for z in samples)
