"""
Induced model chi1 x chi2 and the toric intertwiner

    A(f)(g) = integral over Z(F)\\T(F) of f(t g) Omega^-1(t) dt,

realised as an exact average over L^x / F^x (1 + p^M o_L).

Measure conventions:
    toric_functional_A     vol(o_L^x) = 1, vol(o^x) = 1, so vol(Z(o)\\T(o)) = 1
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from models.errors import InvalidDataError, NotCoveredError
from models.matrices import Mat2
from models.padic import PAdic
from models.quadratic import INERT, RAMIFIED, QuadExtData
from services.characters import (
    MultChar,
    OmegaChar,
    e,
    epsilon_factor,
    omega_conductor,
    omega_restriction_ok,
    unit_generator,
)
from services.gl2 import iwasawa, torus_matrix
from services.representations import (
    PS_RAM,
    RAMIFIED_PS,
    STEINBERG,
    STEINBERG_RAM,
    ReprSpec,
)
from services.unit_groups import projective_group

logger = logging.getLogger(__name__)

TORIC_MEASURE = "vol(Z(o)\\T(o)) = 1"

F0 = "newform-f0"
FHAT = "fhat"
STEINBERG_UNRAM = "steinberg-unram"

INDUCED_KINDS = (PS_RAM, RAMIFIED_PS, STEINBERG_RAM)


@dataclass(frozen=True)
class InducedVector:
    """
    A vector of chi1 x chi2 given by its values on GL2(o).

    Args:
        tag: F0 (the newform), FHAT (supported on B K2(p^r)) or STEINBERG_UNRAM.
        pi:  the representation.
        r:   support depth of FHAT.
    """

    tag: str
    pi: ReprSpec
    r: Optional[int] = None

    @property
    def chars(self):
        return self.pi.induced_pair()


def newform_vector(pi: ReprSpec) -> InducedVector:
    if pi.kind == STEINBERG:
        return InducedVector(STEINBERG_UNRAM, pi)
    if pi.kind not in INDUCED_KINDS:
        raise InvalidDataError(f"no induced newform for {pi.kind}")
    return InducedVector(F0, pi)


def fhat_vector(pi: ReprSpec, omega: OmegaChar) -> InducedVector:
    """f-hat with r = max(c(Omega), c(pi)) + 1 + v(a)."""
    if pi.kind not in INDUCED_KINDS:
        raise InvalidDataError(f"no induced model for {pi.kind}")
    r = max(omega_conductor(omega), pi.cond) + 1 + omega.ext.va
    return InducedVector(FHAT, pi, r)


def _value_on_k(fvec: InducedVector, k: Mat2) -> complex:
    chi1, chi2 = fvec.chars
    C, D = k.c, k.d
    if fvec.tag == STEINBERG_UNRAM:
        return float(fvec.pi.q) if C.in_ideal(1) else -1.0
    if fvec.tag == FHAT:
        if not C.in_ideal(fvec.r):
            return 0j
        return chi1(k.det / D) * chi2(D)
    c1, c2 = chi1.cond, chi2.cond
    if c1 == 0:
        if not C.in_ideal(c2):
            return 0j
        return chi2(D)
    if C.is_zero() or C.valuation() != c2:
        return 0j
    return chi1(k.det) * chi1.inverse()(C.shift(-c2)) * chi2(D)


def eval_induced(fvec: InducedVector, g: Mat2) -> complex:
    """f(g) through g = b k: chi1(a) chi2(d) |a/d|^(1/2) f(k)."""
    b, k = iwasawa(g)
    fk = _value_on_k(fvec, k)
    if fk == 0:
        return 0j
    a, d = b.a, b.d
    if fvec.tag == STEINBERG_UNRAM:
        chi = fvec.pi.chi1
        return chi(a) * chi(d) * float(fvec.pi.q) ** (d.valuation() - a.valuation()) * fk
    chi1, chi2 = fvec.chars
    half = float(fvec.pi.q) ** ((d.valuation() - a.valuation()) / 2)
    return chi1(a) * chi2(d) * half * fk


def default_depth(pi: ReprSpec, omega: OmegaChar) -> int:
    return max(omega_conductor(omega), pi.cond) + omega.ext.va + 2


def _check_central(pi: ReprSpec, omega: OmegaChar):
    ctx = omega.ext.ctx
    test_points = [ctx.element(unit_generator(ctx.p)), ctx.uniformizer()]
    if not omega_restriction_ok(omega, pi.central, test_points):
        raise InvalidDataError("Omega restricted to F^x differs from the central character")


def toric_functional_A(fvec: InducedVector, g: Mat2, omega: OmegaChar, M: Optional[int] = None) -> complex:
    """
    Average of f(t g) Omega^-1(t) over classes t of L^x / F^x (1 + p^M o_L),
    normalised so that Z(o)\\T(o) has volume 1.
    """
    ext = omega.ext
    _check_central(fvec.pi, omega)
    M = M if M is not None else default_depth(fvec.pi, omega)
    grp = projective_group(ext, M)
    pil = ext.uniformizer_L()
    total = 0j
    for key in grp.group.elements:
        x, y = grp.representative(key)
        t = ext.element(x, y)
        if key[0]:
            t = t * pil
        value = eval_induced(fvec, torus_matrix(t) * g)
        if value != 0:
            total += value * e(-omega.angle(t))
    units = len(grp.unit_keys())
    return total / units


def ell(fvec: InducedVector, omega: OmegaChar, M: Optional[int] = None) -> complex:
    """l(f) = A(f)(1)."""
    return toric_functional_A(fvec, Mat2.identity(omega.ext.ctx), omega, M)


# -- translated newform closed form ------------------------------------------------

@dataclass
class TranslateReport:
    computed: complex
    expected: complex
    residual: float
    s: int
    kappa_prime: int
    inputs: Dict[str, object] = field(default_factory=dict)


def _volume_ratio(ext: QuadExtData) -> float:
    """
    vol{1 + y beta : y in p^k} = ratio q^-k in Z(o)\\T(o) under TORIC_MEASURE:
    the index of o^x (1 + p^k o_L) in o_L^x is (q + 1) q^(k-1) for inert L and q^k for ramified L.
    """
    if ext.case == INERT:
        return 1 / (1 + 1 / ext.q)
    return 1.0


def psi_hat_scale(omega: OmegaChar, c1: int) -> int:
    """
    kappa' with Omega^-1(1 + c varpi^(c(Omega) - c1) y beta) = psi(kappa' varpi^-c1 y) on o.
    """
    ext = omega.ext
    if c1 == 0:
        return 0
    ctx = ext.ctx
    c_omega = omega_conductor(omega)
    step = ext.c * ctx.uniformizer(c_omega - c1)
    angle = (-omega.angle(ext.element(1) + ext.beta * step)) % 1
    scaled = angle * ext.p ** c1
    if scaled.denominator != 1:
        raise InvalidDataError(f"y -> Omega^-1(1 + ...) has conductor above {c1}")
    return int(scaled) % ext.p ** c1


def epsilon_hat(chi1: MultChar, kappa_prime: int) -> complex:
    """epsilon(1/2, chi1, psi-hat) for psi-hat(y) = psi(kappa' varpi^-c1 y)."""
    c1 = chi1.cond
    if c1 == 0:
        return 1 + 0j
    if kappa_prime % chi1.p == 0:
        raise InvalidDataError(f"psi-hat has conductor below c(chi1) = {c1}")
    shift = PAdic.from_rational(Fraction(kappa_prime, chi1.p ** c1), chi1.p, c1 + 4)
    return chi1(shift) * epsilon_factor(chi1)


def verify_translate_closed_form(pi: ReprSpec, omega: OmegaChar, M: Optional[int] = None) -> TranslateReport:
    """
    A(f0)(diag(varpi^s, 1)), s = c(pi) - c(Omega) - v(a), against

        ratio q^((c1 - c2 - c(Omega) + v(a))/2) chi1(-varpi^(c(pi) - c(Omega)) / a) q^(-c1/2) epsilon(1/2, chi1, psi-hat)

    with ratio from ``_volume_ratio``. For c1 > 0 only y in varpi^(c(Omega) - c1) o^x
    contributes and the y-integral is q^(-c1/2) epsilon(1/2, chi1, psi-hat); for c1 = 0
    f0 is supported on all of p^c(Omega) and the integral is its volume.
    """
    ext = omega.ext
    ctx = ext.ctx
    fvec = newform_vector(pi)
    if fvec.tag != F0:
        raise NotCoveredError("closed form is stated for ramified induced data")
    chi1, chi2 = fvec.chars
    c1, c2 = chi1.cond, chi2.cond
    c_omega = omega_conductor(omega)
    if c_omega < 2 * c1 or c_omega == 0:
        raise NotCoveredError(f"c(Omega) = {c_omega} < 2 c(chi1) = {2 * c1}")
    va = ext.va
    s = pi.cond - c_omega - va
    computed = toric_functional_A(fvec, Mat2.diag_pi(ctx, s), omega, M)
    kappa_prime = psi_hat_scale(omega, c1)
    arg = -(ctx.uniformizer(pi.cond - c_omega) / ext.a)
    expected = (_volume_ratio(ext) * float(ext.q) ** ((c1 - c2 - c_omega + va) / 2)
                * chi1(arg) * float(ext.q) ** (-c1 / 2) * epsilon_hat(chi1, kappa_prime))
    residual = abs(computed - expected)
    logger.debug("Translate closed form %s: computed %s expected %s", pi.describe(), computed, expected)
    return TranslateReport(computed, expected, residual, s, kappa_prime, {
        "c1": c1, "c2": c2, "c_omega": c_omega, "va": va, "case": ext.case,
    })


def stability(fvec: InducedVector, g: Mat2, omega: OmegaChar, M: int) -> float:
    """|A at depth M - A at depth M + 1|."""
    return abs(toric_functional_A(fvec, g, omega, M) - toric_functional_A(fvec, g, omega, M + 1))


def ramified_coset_part(fvec: InducedVector, g: Mat2, omega: OmegaChar, M: Optional[int] = None) -> complex:
    """The varpi_L (Z(o)\\T(o)) part of A alone (ramified L only)."""
    ext = omega.ext
    if ext.case != RAMIFIED:
        raise InvalidDataError("the varpi_L coset only exists for ramified L")
    M = M if M is not None else default_depth(fvec.pi, omega)
    grp = projective_group(ext, M)
    pil = ext.uniformizer_L()
    total = 0j
    for key in grp.group.elements:
        if not key[0]:
            continue
        x, y = grp.representative(key)
        t = ext.element(x, y) * pil
        total += eval_induced(fvec, torus_matrix(t) * g) * e(-omega.angle(t))
    return total / len(grp.unit_keys())
