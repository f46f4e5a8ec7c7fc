"""
Local spectral distribution J~_pi(f) for f = 1_K' / vol(K').

With e' = sum over t in T / (T cap Z K') of Omega^-1(t) pi(t) phi and
phi = pi(h) phi0 the K'-fixed test vector,

    J~_pi(f) = (e', phi) / ( |T / (T cap Z K')| (phi, phi) ),

and every inner product is taken in the Kirillov model,
(phi1, phi2) = integral over F^x of phi1(a) conj(phi2(a)) d^x a with
vol(o^x) = 1. Torus elements are written x + y*xi0, which T(F) sends to
[[x, c y], [-a y, x - b y]].
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy as sp

from config import Config
from models.errors import (
    InvalidDataError,
    NotCoveredError,
    PrecisionError,
    UnsupportedKindError,
    UnsupportedTranslateError,
)
from models.matrices import Mat2
from models.padic import PAdic
from models.quadratic import INERT, RAMIFIED, LElement, QuadExtData
from services.characters import MultChar, OmegaChar, e, enumerate_omegas, omega_conductor
from services.gl2 import kprime_h, kprime_member, torus_matrix
from services.representations import STEINBERG, TRIVIAL_L, UNRAM_PS, ReprSpec, principal_series
from services.unit_groups import projective_group
from services.whittaker import (
    KIRILLOV_MEASURE,
    kirillov_w,
    psi_unit_integral,
    whittaker_lower_integral,
    whittaker_w_value,
)

logger = logging.getLogger(__name__)

KIRILLOV_KINDS = (UNRAM_PS, STEINBERG, TRIVIAL_L)
JTILDE_KINDS = (STEINBERG, TRIVIAL_L)

PAIRWISE_CAP = 4096


def _has_trivial_central(pi: ReprSpec) -> bool:
    omega = pi.central
    return omega.cond == 0 and omega.pi_angle % 1 == 0 and omega.shift == 0


# -- SpectralConfig ---------------------------------------------------------------

@dataclass(frozen=True)
class SpectralConfig:
    """
    pi with trivial central character and c(pi) >= 1, Omega on the
    non-split torus of ``omega.ext`` with c(Omega) >= c(pi).
    """

    pi: ReprSpec
    omega: OmegaChar

    def __post_init__(self):
        if self.ext.case not in (INERT, RAMIFIED):
            raise InvalidDataError("J~ is computed on inert or ramified tori only")
        if not _has_trivial_central(self.pi):
            raise InvalidDataError("pi must have trivial central character")
        if self.pi.cond < 1:
            raise InvalidDataError("c(pi) must be at least 1")
        if self.c_omega < self.pi.cond:
            raise NotCoveredError(f"c(Omega) = {self.c_omega} < c(pi) = {self.pi.cond}")

    @property
    def ext(self) -> QuadExtData:
        return self.omega.ext

    @property
    def c_pi(self) -> int:
        return self.pi.cond

    @property
    def c_omega(self) -> int:
        return omega_conductor(self.omega)

    @property
    def s(self) -> int:
        return self.c_omega - self.c_pi

    @property
    def h(self) -> Mat2:
        return kprime_h(self.ext, self.c_pi, self.c_omega)


def kprime_displayed(g: Mat2, c_pi: int, c_omega: int) -> bool:
    """g in [[1 + p^c(pi), p^c(Omega)], [p^(c(pi) - c(Omega)), o^x]]."""
    return ((g.a - 1).in_ideal(c_pi) and g.b.in_ideal(c_omega)
            and g.c.in_ideal(c_pi - c_omega) and g.d.in_ideal(0) and g.d.is_unit())


def kprime_shape_check(cfg: SpectralConfig) -> Dict[str, bool]:
    """Compare h K1(p^c(pi)) h^-1 membership with the displayed shape on boundary samples."""
    ctx = cfg.ext.ctx
    cp, co = cfg.c_pi, cfg.c_omega
    pi_ = ctx.uniformizer
    results = {}
    for A in (1 + pi_(cp), 1 + pi_(cp - 1)):
        for B in (pi_(co), pi_(co - 1)):
            for C in (pi_(cp - co), pi_(cp - co - 1)):
                g = Mat2(ctx, A, B, C, 1)
                name = f"A=1+p^{(A - 1).valuation()} B=p^{B.valuation()} C=p^{C.valuation()}"
                results[name] = kprime_member(g, cfg.ext, cp, co) == kprime_displayed(g, cp, co)
    t_in = ctx.element(1) + cfg.ext.xi0 * pi_(co)
    t_out = ctx.element(1) + cfg.ext.xi0 * pi_(co - 1)
    results["1 + p^c(Omega) xi0 in K'"] = kprime_member(torus_matrix(t_in), cfg.ext, cp, co)
    results["1 + p^(c(Omega)-1) xi0 not in K'"] = not kprime_member(torus_matrix(t_out), cfg.ext, cp, co)
    return results


# -- T / (T cap Z K') ---------------------------------------------------------------

def torus_point(ext: QuadExtData, x, y) -> LElement:
    """x + y*xi0."""
    ctx = ext.ctx
    x = x if isinstance(x, PAdic) else ctx.element(x)
    y = y if isinstance(y, PAdic) else ctx.element(y)
    return ext.element(x) + ext.xi0 * y


def xi0_coords(t: LElement) -> Tuple[PAdic, PAdic]:
    """(x, y) with t = x + y*xi0."""
    ext = t.ext
    y = t.y / ext.c
    return t.x + ext.b * y, y


def u0_prime(ext: QuadExtData) -> PAdic:
    """u0' = -u0/a, the y with N(1 + y xi0) in p (ramified, v(a) = 0)."""
    return -(ext.ctx.element(ext.u0) / ext.a)


def repcount_expected(ext: QuadExtData, c_omega: int) -> int:
    q = ext.q
    if ext.case == INERT:
        return q ** c_omega + q ** (c_omega - 1)
    return 2 * q ** c_omega


def coset_reps(ext: QuadExtData, c_omega: int) -> List[LElement]:
    """Representatives of T / (T cap Z K'); they only depend on c(Omega) once c(Omega) >= c(pi)."""
    if c_omega < 1:
        raise InvalidDataError("representatives are listed for c(Omega) >= 1")
    if ext.case not in (INERT, RAMIFIED):
        raise InvalidDataError(f"no representative list for a {ext.case} torus")
    p = ext.p
    va = ext.va
    reps: List[LElement] = []
    if ext.case == INERT or va == 1:
        reps += [torus_point(ext, 1, y) for y in range(p ** c_omega)]
        reps += [torus_point(ext, p * r, 1) for r in range(p ** (c_omega + va - 1))]
        return reps
    u0p = u0_prime(ext)
    u0_res = u0p.residue(1)
    reps += [torus_point(ext, 1, y) for y in range(p ** c_omega) if (y - u0_res) % p]
    reps += [torus_point(ext, 1, u0p + p * r) for r in range(p ** c_omega)]
    reps += [torus_point(ext, p * r, 1) for r in range(p ** (c_omega - 1))]
    return reps


def in_zkprime(r: LElement, c_pi: int, c_omega: int) -> bool:
    """r in T cap Z K', tested as r/x in K' for r = x + y xi0."""
    x, y = xi0_coords(r)
    if x.is_zero():
        return False
    if not y.is_zero() and y.valuation() < x.valuation():
        return False
    return kprime_member(torus_matrix(r / x), r.ext, c_pi, c_omega)


@dataclass
class CosetReport:
    count: int
    expected: int
    distinct: bool
    complete: bool
    collisions: List[Tuple[int, int]] = field(default_factory=list)
    pairwise: bool = True

    @property
    def ok(self) -> bool:
        return self.count == self.expected and self.distinct and self.complete and not self.collisions


def verify_coset_reps(ext: QuadExtData, c_omega: int, c_pi: int = 1,
                      pairwise_cap: int = PAIRWISE_CAP) -> CosetReport:
    """
    Reduce the representatives into L^x / F^x (1 + p^c(Omega) o_L) = T / (T cap Z K')
    and, below ``pairwise_cap`` pairs, also compare every pair through K' membership.
    Count, distinctness and completeness come from the keys alone.
    """
    reps = coset_reps(ext, c_omega)
    n = len(reps)
    grp = projective_group(ext, c_omega)
    keys = {grp.key_of(t) for t in reps}
    distinct = len(keys) == n
    complete = len(keys) == grp.group.order
    pairwise = n * n <= pairwise_cap
    collisions = []
    if pairwise:
        for i in range(n):
            for j in range(i + 1, n):
                if in_zkprime(reps[i] / reps[j], c_pi, c_omega):
                    collisions.append((i, j))
    else:
        logger.info("Coset reps %s c(Omega)=%d: %d reps, pairwise K' check above the cap", ext.case, c_omega, n)
    report = CosetReport(n, repcount_expected(ext, c_omega), distinct, complete, collisions, pairwise)
    logger.debug("Coset reps %s c(Omega)=%d: %d reps, ok=%s", ext.case, c_omega, n, report.ok)
    return report


def x_shift_equivalent(ext: QuadExtData, c_omega: int, k: int, c_pi: int = 1) -> bool:
    """Whether varpi^k + xi0 ~ xi0; expected exactly for k >= c(Omega) + v(a)."""
    t = torus_point(ext, ext.ctx.uniformizer(k), 1)
    return in_zkprime(t / torus_point(ext, 0, 1), c_pi, c_omega)


# -- Kirillov inner products -------------------------------------------------------

def _psi_factor(q: int, j: int, x: PAdic) -> float:
    if x.is_zero():
        return 1.0
    return psi_unit_integral(q, j + x.valuation())


def unit_average(pi: ReprSpec, j: int, g: Mat2) -> complex:
    """
    Integral over o^x of W0(diag(varpi^j u, 1) g) d^x u, read off one of
        g = n(B/D) D diag(det/D^2, 1) nbar(C/D)        v(C) > v(D)
        g = n(A/C) (-C) diag(det/C^2, 1) w n(D/C)     otherwise
    """
    A, B, C, D = g.a, g.b, g.c, g.d
    q = pi.q
    omega = pi.central
    det = g.det
    if C.is_zero() and D.is_zero():
        raise PrecisionError("bottom row indistinguishable from 0")
    if C.is_zero():
        m = j + A.valuation() - D.valuation()
        return omega(D) * _psi_factor(q, j, B / D) * kirillov_w(pi, m)
    if D.is_zero() or C.valuation() <= D.valuation():
        w_part = whittaker_w_value(pi, j + det.valuation() - 2 * C.valuation())
        if w_part == 0:
            return 0j
        return omega(-C) * _psi_factor(q, j, A / C) * w_part
    m = j + det.valuation() - 2 * D.valuation()
    k = C.valuation() - D.valuation()
    if B.is_zero() or j + (B / D).valuation() >= 0:
        return omega(D) * whittaker_lower_integral(pi, m, k)
    if k >= pi.cond:
        return omega(D) * psi_unit_integral(q, j + (B / D).valuation()) * kirillov_w(pi, m)
    raise UnsupportedTranslateError(f"n(varpi^{(B / D).valuation()}) nbar(varpi^{k}) below the conductor")


def kirillov_inner(pi: ReprSpec, g: Mat2, terms: Optional[int] = None) -> complex:
    """
    (pi(g) phi0, phi0) in the Kirillov model, phi0(a) = W0(diag(a, 1)).
    The sum over v(a) is cut after ``terms`` shells; the tail is O(j^2 q^-j).
    """
    if pi.kind not in KIRILLOV_KINDS:
        raise UnsupportedKindError(pi.kind, "Kirillov inner products")
    if not pi.central.is_unramified():
        raise NotCoveredError("Kirillov inner products need an unramified central character")
    terms = terms or Config.SERIES_TERMS
    total = 0j
    for j in range(terms):
        weight = kirillov_w(pi, j)
        if weight == 0:
            continue
        total += weight.conjugate() * unit_average(pi, j, g)
    return total


def normalised_translate_inner(pi: ReprSpec, g: Mat2) -> complex:
    """(pi(g) phi0, phi0) / (phi0, phi0)."""
    return kirillov_inner(pi, g) / kirillov_inner(pi, Mat2.identity(g.ctx))


def phi0_norm_expected(pi: ReprSpec) -> Fraction:
    """(phi0, phi0): L(2, 1_F) for unramified twists of Steinberg, 1 when L(s, pi) = 1."""
    if pi.kind == STEINBERG:
        return 1 / (1 - Fraction(1, pi.q ** 2))
    if pi.kind == TRIVIAL_L:
        return Fraction(1)
    raise UnsupportedKindError(pi.kind, "closed-form newform norm")


def unramified_translate_expected(pi: ReprSpec) -> complex:
    """(phi0, pi(diag(varpi, 1)) phi0) / (phi0, phi0) = q^(-1/2) (chi + chi^-1)(varpi) / (1 + q^-1)."""
    if pi.kind != UNRAM_PS:
        raise UnsupportedKindError(pi.kind, "unramified translate inner product")
    q = pi.q
    return q ** -0.5 * (pi.chi1.at_pi(1) + pi.chi2.at_pi(1)) / (1 + 1 / q)


# -- J~ -----------------------------------------------------------------------------

def projection(cfg: SpectralConfig, reps: Optional[List[LElement]] = None) -> complex:
    """(e', phi) = sum over t of Omega^-1(t) (pi(h^-1 t h) phi0, phi0)."""
    if cfg.pi.kind not in JTILDE_KINDS:
        raise UnsupportedKindError(cfg.pi.kind, "spectral distribution")
    h = cfg.h
    h_inv = h.inverse()
    reps = reps if reps is not None else coset_reps(cfg.ext, cfg.c_omega)
    total = 0j
    for t in reps:
        inner = kirillov_inner(cfg.pi, h_inv * torus_matrix(t) * h)
        if inner != 0:
            total += e(-cfg.omega.angle(t)) * inner
    return total


def jtilde(cfg: SpectralConfig) -> complex:
    reps = coset_reps(cfg.ext, cfg.c_omega)
    norm = kirillov_inner(cfg.pi, Mat2.identity(cfg.ext.ctx))
    value = projection(cfg, reps) / (len(reps) * norm)
    logger.debug("J~ for %s, c(Omega)=%d: %s", cfg.pi.describe(), cfg.c_omega, value)
    return value


def l_one(q: int) -> Fraction:
    """L(1, 1_F)."""
    return 1 / (1 - Fraction(1, q))


def l_two(q: int) -> Fraction:
    """L(2, 1_F)."""
    return 1 / (1 - Fraction(1, q * q))


def jtilde_expected(cfg: SpectralConfig) -> Fraction:
    """q^-c(Omega) L(1, 1_F) L(1, eta) / e(L/F), divided by L(2, 1_F) when c(pi) = 1."""
    ext = cfg.ext
    q = ext.q
    value = Fraction(1, q ** cfg.c_omega) * l_one(q) * ext.l_eta(1) / ext.e
    if cfg.c_pi == 1:
        value /= l_two(q)
    return value


def character_sum_by_valuation(omega: OmegaChar, k: int) -> complex:
    """sum over y in o / p^c(Omega) with v(y) = k of Omega^-1(1 + y xi0); v(0) counts as c(Omega)."""
    ext = omega.ext
    c = omega_conductor(omega)
    p = ext.p
    total = 0j
    for y in range(p ** c):
        v = c if y == 0 else _int_valuation(y, p)
        if v == k:
            total += e(-omega.angle(torus_point(ext, 1, y)))
    return total


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def character_sum_expected(c: int, k: int) -> int:
    """0 for 0 < k < c - 1, -1 at k = c - 1 > 0, 1 at k = c."""
    if k == c:
        return 1
    if k == c - 1 and c > 1:
        return -1
    if 0 < k < c - 1:
        return 0
    raise InvalidDataError(f"k = {k} is outside 0 < k <= c(Omega) = {c}")


def rerandomised_reps(cfg: SpectralConfig, rng: random.Random) -> List[LElement]:
    """Each representative times a random element of T cap Z K'."""
    ext = cfg.ext
    ctx = ext.ctx
    p, c = ext.p, cfg.c_omega
    out = []
    for t in coset_reps(ext, c):
        unit = rng.randrange(1, p ** 2)
        while unit % p == 0:
            unit = rng.randrange(1, p ** 2)
        scale = ctx.element(unit) * ctx.uniformizer(rng.choice((-1, 0, 1)))
        k = torus_point(ext, 1 + p ** cfg.c_pi * rng.randrange(p), p ** c * rng.randrange(p ** 2))
        out.append(t * k * scale)
    return out


def representative_independence(cfg: SpectralConfig, seed: int = Config.SEED) -> float:
    """|(e', phi) on the listed representatives - (e', phi) on re-randomised ones|."""
    rng = random.Random(seed)
    base = projection(cfg)
    moved = projection(cfg, rerandomised_reps(cfg, rng))
    return abs(base - moved)


# -- the unramified oldform place -------------------------------------------------

@dataclass
class OldformReport:
    value: sp.Expr
    expected: Fraction
    phi0_e: sp.Expr
    phi1_e: sp.Expr
    translate_inner: sp.Expr
    reps: int
    spherical_residual: float
    inputs: Dict[str, object] = field(default_factory=dict)

    @property
    def exact_value(self) -> Optional[Fraction]:
        """The value as a Fraction, or None when it is not provably rational."""
        if self.value.is_Rational:
            return Fraction(int(self.value.p), int(self.value.q))
        if _is_zero(self.value - sp.Rational(self.expected.numerator, self.expected.denominator)):
            return self.expected
        return None

    @property
    def phi0_vanishes(self) -> bool:
        return _is_zero(self.phi0_e)


ALPHA = sp.Symbol("alpha", nonzero=True)


def spherical_value(n: int, q: int, alpha: sp.Expr = ALPHA) -> sp.Expr:
    """
    (pi(g) phi0, phi0) / (phi0, phi0) on GL2(o) diag(varpi^n, 1) GL2(o) for the
    unramified pi = chi x chi^-1 with alpha = chi(varpi).
    """
    x = sp.Rational(1, q)
    beta = 1 / alpha
    return (sp.sqrt(x) ** n / (1 + x)) * (alpha ** n * (1 - x * beta / alpha) / (1 - beta / alpha)
                                          + beta ** n * (1 - x * alpha / beta) / (1 - alpha / beta))


def cartan_level(g: Mat2) -> int:
    """n with g in Z GL2(o) diag(varpi^n, 1) GL2(o)."""
    low = min(x.valuation() for x in g.entries() if not x.is_zero())
    return g.det.valuation() - 2 * low


def cyclotomic_sum(angles: List[Fraction]) -> sp.Expr:
    """sum of e(-angle), reduced modulo the cyclotomic polynomial of the common denominator."""
    if not angles:
        return sp.Integer(0)
    N = 1
    for angle in angles:
        N = N * Fraction(angle).denominator // gcd(N, Fraction(angle).denominator)
    z = sp.Symbol("z")
    poly = sp.Poly(sp.Add(*(z ** int((-Fraction(angle) * N) % N) for angle in angles)), z)
    rem = poly.rem(sp.Poly(sp.cyclotomic_poly(N, z), z))
    return rem.as_expr().subs(z, sp.exp(2 * sp.pi * sp.I / N))


def _conj(expr: sp.Expr) -> sp.Expr:
    # |alpha| = 1
    return sp.conjugate(expr).subs(sp.conjugate(ALPHA), 1 / ALPHA)


def _is_zero(expr: sp.Expr) -> bool:
    numer, _ = sp.fraction(sp.together(sp.expand(expr)))
    return sp.expand(numer) == 0 or sp.simplify(expr) == 0


def oldform_translate_bound(q: int) -> float:
    """|(phi0, phi0')| <= 2 q^(-1/2) / (1 + q^-1) for unitary chi."""
    return 2 * q ** -0.5 / (1 + 1 / q)


def jtilde_oldform(chi: MultChar, ext: QuadExtData, depth: int = 1,
                   omega: Optional[OmegaChar] = None) -> OldformReport:
    """
    J~ at an inert place where pi = chi x chi^-1 is unramified and the
    order has level p^depth, K = [[o^x, p], [o, o^x]], h = diag(varpi, 1):
    the K-fixed space is spanned by phi1 = pi(h) phi0 and phi0, which is
    orthonormalised against phi1 before projecting e'.

    Exact in alpha = chi(varpi): every matrix coefficient is a spherical
    value and every Omega-sum an element of a cyclotomic field. The Kirillov
    series are evaluated alongside and must agree with the spherical values.
    """
    if depth != 1:
        raise NotCoveredError(f"oldform value is only computed for level p^1, got p^{depth}")
    if ext.case != INERT:
        raise NotCoveredError("oldform value is computed at inert places")
    if not (ext.b.is_zero() and ext.a.is_unit()):
        raise InvalidDataError("normalise the torus to b = 0 and a unit before the oldform computation")
    if not chi.is_unramified() or not chi.is_unitary():
        raise InvalidDataError("chi must be unitary and unramified")
    if omega is None:
        omegas = enumerate_omegas(ext, 1)
        if not omegas:
            raise InvalidDataError("no Omega of conductor 1 on this torus")
        omega = omegas[0]
    if omega_conductor(omega) != 1:
        raise InvalidDataError("Omega must have conductor 1 at an oldform place")
    pi = principal_series(chi, chi.inverse())
    ctx = ext.ctx
    q = ext.q
    h = Mat2.diag_pi(ctx, 1)
    h_inv = h.inverse()
    norm = kirillov_inner(pi, Mat2.identity(ctx))
    alpha = e(chi.pi_angle)
    reps = coset_reps(ext, 1)
    levels0: Dict[int, List[Fraction]] = {}
    levels1: Dict[int, List[Fraction]] = {}
    spherical_residual = 0.0
    for t in reps:
        angle = omega.angle(t)
        tm = torus_matrix(t)
        for g, levels in ((h_inv * tm, levels0), (h_inv * tm * h, levels1)):
            n = cartan_level(g)
            levels.setdefault(n, []).append(angle)
            exact = complex(spherical_value(n, q).subs(ALPHA, sp.exp(2 * sp.pi * sp.I * chi.pi_angle)).evalf(30))
            spherical_residual = max(spherical_residual, abs(kirillov_inner(pi, g) / norm - exact))
    phi0_e = sp.Add(*(spherical_value(n, q) * cyclotomic_sum(angles) for n, angles in levels0.items()))
    phi1_e = sp.Add(*(spherical_value(n, q) * cyclotomic_sum(angles) for n, angles in levels1.items()))
    translate = spherical_value(1, q)                       # (pi(h) phi0, phi0)
    phi0_phi1 = _conj(translate)
    gram = 1 - translate * _conj(translate)
    phi2_sq = (phi0_e - phi0_phi1 * phi1_e) * _conj(phi0_e - phi0_phi1 * phi1_e) / gram
    value = sp.simplify((phi1_e * _conj(phi1_e) + phi2_sq) / (len(reps) * phi1_e))
    logger.debug("Oldform J~ at q=%d: %s with (phi0, e') = %s, alpha = %s", q, value, phi0_e, alpha)
    return OldformReport(value, Fraction(1, q), phi0_e, phi1_e, translate, len(reps), spherical_residual, {
        "chi_pi_angle": str(chi.pi_angle), "omega_index": omega.index, "measure": KIRILLOV_MEASURE,
    })


def oldform_gram_identity() -> bool:
    """
    1 - |(phi0, phi0')|^2 = L(2, 1_F) / (L(1, pi, Ad) (1 + q^-1)) as rational
    functions of alpha = chi(varpi) and x = q^-1.
    """
    alpha, x = sp.symbols("alpha x", positive=True)
    inner_sq = x * (alpha + 1 / alpha) ** 2 / (1 + x) ** 2
    l_ad = 1 / ((1 - alpha ** 2 * x) * (1 - x) * (1 - x / alpha ** 2))
    l_2 = 1 / (1 - x ** 2)
    return sp.simplify(1 - inner_sq - l_2 / (l_ad * (1 + x))) == 0


# -- sweeps over Omega ---------------------------------------------------------------

def jtilde_batch(pi: ReprSpec, ext: QuadExtData, omegas: List[OmegaChar]) -> np.ndarray:
    """
    J~ for every Omega of one conductor at once: the Kirillov inner products
    do not depend on Omega, so only the character matrix changes.
    """
    if not omegas:
        return np.zeros(0, dtype=complex)
    cfgs = [SpectralConfig(pi, omega) for omega in omegas]
    c = cfgs[0].c_omega
    if any(cfg.c_omega != c for cfg in cfgs):
        raise InvalidDataError("jtilde_batch needs characters of a single conductor")
    h = cfgs[0].h
    h_inv = h.inverse()
    reps = coset_reps(ext, c)
    inners = np.array([kirillov_inner(pi, h_inv * torus_matrix(t) * h) for t in reps], dtype=complex)
    angles = np.array([[float(omega.angle(t)) for t in reps] for omega in omegas])
    norm = kirillov_inner(pi, Mat2.identity(ext.ctx))
    values = np.exp(-2j * np.pi * angles) @ inners / (len(reps) * norm)
    logger.debug("J~ batch over %d characters of conductor %d", len(omegas), c)
    return values
