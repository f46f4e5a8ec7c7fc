"""
Whittaker newforms, zeta integrals and the local functional equation.

Every zeta integral is returned as an exact RatFunc in X = q^(-s): the
Kirillov values q^(j/2) W0(diag(varpi^j, 1)) of the supported kinds are
exponential sequences, so their generating functions are L-factor shaped
and only finitely many correction terms are ever written out.

Measure conventions:
    zeta_integral                 vol(o^x) = 1 - 1/q
    whittaker_lower_integral      vol(o^x) = 1
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from models.errors import (
    InvalidDataError,
    NotCoveredError,
    UnsupportedKindError,
    UnsupportedTranslateError,
)
from models.matrices import Mat2
from models.padic import LocalFieldCtx, PAdic
from models.ratfunc import RatFunc, Root
from services.characters import MultChar, e, epsilon_factor, gauss_integral
from services.representations import (
    PS_RAM,
    STEINBERG,
    TRIVIAL_L,
    UNRAM_PS,
    ReprSpec,
    char_root,
    contragredient,
    epsilon,
    l_factor,
)

logger = logging.getLogger(__name__)

ZETA_MEASURE = "vol(o^x) = 1 - 1/q"
KIRILLOV_MEASURE = "vol(o^x) = 1"

TABLE_KINDS = (UNRAM_PS, PS_RAM, STEINBERG, TRIVIAL_L)
BIG_CELL_KINDS = (UNRAM_PS, STEINBERG, TRIVIAL_L)


def _require(pi: ReprSpec, kinds, operation: str):
    if pi.kind not in kinds:
        raise UnsupportedKindError(pi.kind, operation)


def _alpha(chi: MultChar) -> complex:
    return chi.at_pi(1)


# -- Kirillov values ------------------------------------------------------------

def kirillov_coeff(pi: ReprSpec, j: int) -> complex:
    """q^(j/2) W0(diag(varpi^j, 1))."""
    _require(pi, TABLE_KINDS, "Whittaker newform values")
    if j < 0:
        return 0j
    q = pi.q
    if pi.kind == UNRAM_PS:
        a1, a2 = _alpha(pi.chi1), _alpha(pi.chi2)
        return complex(sum(a1 ** i * a2 ** (j - i) for i in range(j + 1)))
    if pi.kind == PS_RAM:
        return complex(_alpha(pi.chi1) ** j)
    if pi.kind == STEINBERG:
        return complex((_alpha(pi.chi1) * float(q) ** -0.5) ** j)
    return 1 + 0j if j == 0 else 0j


def newform_value(pi: ReprSpec, x: PAdic) -> complex:
    """W0(diag(x, 1)) for the normalised newform, W0(1) = 1."""
    _require(pi, TABLE_KINDS, "Whittaker newform values")
    if x.is_zero():
        return 0j
    v = x.valuation()
    if v < 0:
        return 0j
    return kirillov_coeff(pi, v) * float(pi.q) ** (-v / 2)


def kirillov_w(pi: ReprSpec, j: int) -> complex:
    """W0(diag(varpi^j, 1))."""
    return kirillov_coeff(pi, j) * float(pi.q) ** (-j / 2) if j >= 0 else 0j


def _kirillov_generating(pi: ReprSpec, nu: Root) -> RatFunc:
    """sum_j q^(j/2) W0(varpi^j) nu^j X^j."""
    q = pi.q
    if pi.kind == UNRAM_PS:
        return RatFunc.l_factor(q, [char_root(pi.chi1) * nu, char_root(pi.chi2) * nu])
    if pi.kind == PS_RAM:
        return RatFunc.l_factor(q, [char_root(pi.chi1) * nu])
    if pi.kind == STEINBERG:
        return RatFunc.l_factor(q, [char_root(pi.chi1) * Root(0, Fraction(-1, 2)) * nu])
    return RatFunc.constant(q, 1)


def whittaker_w_value(pi: ReprSpec, j: int) -> complex:
    """W0(diag(varpi^j, 1) w)."""
    _require(pi, BIG_CELL_KINDS, "big-cell Whittaker values")
    q = pi.q
    if pi.kind == STEINBERG:
        if j < -1:
            return 0j
        return -complex(_alpha(pi.chi1) ** j) * float(q) ** (-j - 1)
    if pi.kind == TRIVIAL_L:
        return e(pi.eps_angle) if j == -pi.c else 0j
    return kirillov_w(pi, j)


def _big_generating(pi: ReprSpec, nu: Root) -> RatFunc:
    """sum_j q^(j/2) W0(diag(varpi^j, 1) w) nu^j X^j."""
    q = pi.q
    if pi.kind == STEINBERG:
        rho = char_root(pi.chi1) * Root(0, Fraction(-1, 2)) * nu
        return RatFunc(q, {-1: -1 / (q * rho.value(q))}, {rho: 1})
    if pi.kind == TRIVIAL_L:
        c = pi.c
        return RatFunc.monomial(q, e(pi.eps_angle) * float(q) ** (-c / 2) * nu.value(q) ** (-c), -c)
    return _kirillov_generating(pi, nu)


def bruhat_lower_integral(pi: ReprSpec, j: int, k: int) -> complex:
    """
    The lower-unipotent integral re-derived from
        diag(a, 1) nbar(x) = (-x) n(a/x) diag(a/x^2, 1) w n(1/x),   v(x) = k <= 0,
    as I(j - k) * W0(diag(varpi^(j - 2k), 1) w) with I the normalised psi-integral over o^x.
    """
    if k > 0:
        raise InvalidDataError("the Bruhat form needs v(x) <= 0")
    omega = pi.central
    central = omega.at_pi(k) * e(omega.unit_angle(-1 % pi.p ** max(omega.cond, 1)))
    return central * psi_unit_integral(pi.q, j - k) * whittaker_w_value(pi, j - 2 * k)


def psi_unit_integral(q: int, m: int) -> float:
    """Integral of psi(varpi^m u) over o^x with vol(o^x) = 1."""
    if m >= 0:
        return 1.0
    if m == -1:
        return -1.0 / (q - 1)
    return 0.0


def whittaker_lower_integral(pi: ReprSpec, j: int, k: int) -> complex:
    """Integral over o^x of W0(diag(varpi^j u, 1) nbar(varpi^k)) d^x u, vol(o^x) = 1."""
    _require(pi, BIG_CELL_KINDS, "lower-unipotent integrals")
    q, c = pi.q, pi.cond
    if pi.kind == TRIVIAL_L:
        if j != 0:
            return 0j
        if k >= c:
            return 1 + 0j
        if k == c - 1:
            return complex(1 / (1 - q))
        return 0j
    if k >= c:
        return kirillov_w(pi, j)
    if pi.kind == STEINBERG:
        if j < 0:
            raise NotCoveredError("the Steinberg lower integral is tabulated for j >= 0 >= k")
        return -complex((_alpha(pi.chi1) / q) ** (j - 2 * k)) / q
    return _unramified_lower_integral(pi, j, k)


def _schur(a1: complex, a2: complex, n: int) -> complex:
    """sum_{i=0}^{n} a1^i a2^(n-i)."""
    if n < 0:
        return 0j
    if abs(a1 - a2) < 1e-12:
        return (n + 1) * a1 ** n
    return (a1 ** (n + 1) - a2 ** (n + 1)) / (a1 - a2)


def _unramified_lower_integral(pi: ReprSpec, j: int, k: int) -> complex:
    """
    K-spherical W0 and v(x) = k < 0 through the Iwasawa form
        diag(a, 1) nbar(x) = x n(a/x) diag(a/x^2, 1) kappa,   kappa in GL2(o),
    so the integrand is omega(x) psi(varpi^(j-k) u) W0(diag(varpi^(j-2k), 1)).
    """
    q = float(pi.q)
    m, n = j - k, j - 2 * k
    if m < -1:
        return 0j
    gauss = 1.0 if m >= 0 else -1.0 / (q - 1)
    a1, a2 = _alpha(pi.chi1), _alpha(pi.chi2)
    return complex((a1 * a2) ** k * gauss * q ** (-n / 2) * _schur(a1, a2, n))


# -- zeta integrals -------------------------------------------------------------

def _tail(gen: RatFunc, coeff, J: int) -> RatFunc:
    """sum_{j >= J} of a series supported on j >= 0 with generating function gen."""
    if J <= 0:
        return gen
    head = {j: coeff(j) for j in range(J)}
    return gen - RatFunc(gen.q, head)


def _upper_zeta(pi: ReprSpec, y: Optional[PAdic], mu: MultChar) -> RatFunc:
    """Z(s, pi(n(y)) W0, mu^-1); y = None is the identity."""
    q = pi.q
    nu = Root(-mu.pi_angle, mu.shift)
    nu_val = nu.value(q)

    def coeff(j: int) -> complex:
        return kirillov_coeff(pi, j) * nu_val ** j

    if y is None:
        if mu.is_unramified():
            return _kirillov_generating(pi, nu) * (1 - 1 / q)
        return RatFunc.zero(q)
    m = y.valuation()
    unit = mu(y.unit_part())
    if mu.is_unramified():
        out = _tail(_kirillov_generating(pi, nu), coeff, -m) * (1 - 1 / q)
        if -m - 1 >= 0:
            out = out + RatFunc.monomial(q, -coeff(-m - 1) / q, -m - 1)
        return out
    j = -mu.cond - m
    if j < 0:
        return RatFunc.zero(q)
    return RatFunc.monomial(q, coeff(j) * unit * gauss_integral(mu, -mu.cond), j)


def zeta_integral(pi: ReprSpec, translate: Mat2, mu: MultChar) -> RatFunc:
    """
    Z(s, pi(translate) W0, mu^-1) for translate an upper unipotent n(y), a
    diagonal matrix, or w n(y).
    """
    _require(pi, TABLE_KINDS, "zeta integrals")
    a, b, c, d = translate.entries()
    if c.is_zero() and b.is_zero():
        return _diagonal_zeta(pi, a, d, mu)
    if c.is_zero() and a == 1 and d == 1:
        return _upper_zeta(pi, b, mu)
    if a.is_zero() and b == 1 and c == -1:
        return _weyl_upper_zeta(pi, -d, mu)
    raise UnsupportedTranslateError(f"[[{a}, {b}], [{c}, {d}]]")


def _diagonal_zeta(pi: ReprSpec, x: PAdic, y: PAdic, mu: MultChar) -> RatFunc:
    q = pi.q
    t = x / y
    v = t.valuation()
    factor = pi.central(y) * mu(t) * float(q) ** (-v / 2)
    return _upper_zeta(pi, None, mu).shift(-v) * factor


def _weyl_upper_zeta(pi: ReprSpec, y: PAdic, mu: MultChar) -> RatFunc:
    """
    Z(s, pi(w n(y)) W0, mu^-1) through the functional equation:
        eps(1-s, mu omega^-1 x pi) L(s, mu^-1 x pi) [Z(., n(y) W0, mu omega^-1) / L(., mu omega^-1 x pi)](1-s).
    """
    lam = mu.inverse() * pi.central
    dual_char = lam.inverse()
    inner = _upper_zeta(pi, None if y.is_zero() else y, lam).divide_by_l_factor(l_factor(pi, dual_char))
    eps = epsilon(pi, dual_char)
    return inner.substitute_dual() * eps.substitute_dual() * l_factor(pi, mu.inverse())


def normalised_zeta(pi: ReprSpec, translate: Mat2, mu: MultChar) -> RatFunc:
    """Z(s, pi(translate) W0, mu^-1) / L(s, mu^-1 x pi), reduced."""
    return zeta_integral(pi, translate, mu).divide_by_l_factor(l_factor(pi, mu.inverse()))


# -- functional equation --------------------------------------------------------

@dataclass
class FunctionalEquationResult:
    holds: bool
    lhs: Optional[RatFunc] = None
    rhs: Optional[RatFunc] = None
    residual: Dict[int, complex] = field(default_factory=dict)
    vanishing: bool = False


def functional_equation_check(pi: ReprSpec, mu: MultChar, tol: float = 1e-9) -> FunctionalEquationResult:
    """
    Z(1-s, pi(w) W0, mu omega^-1) / L(1-s, mu x pi~)
        = eps(s, mu^-1 x pi) Z(s, W0, mu^-1) / L(s, mu^-1 x pi).

    Both integrals carry the o^x mass of their character as a finite
    character sum, so a ramified mu must make both sides vanish.
    """
    _require(pi, BIG_CELL_KINDS, "functional equation")
    q = pi.q
    omega = pi.central
    if not omega.is_unramified():
        raise UnsupportedKindError(pi.kind, "functional equation with ramified central character")
    chi = mu * omega.inverse()
    # gauss_integral(lam, 0) is the integral of lam^-1 over o^x
    lhs_dual = _big_generating(pi, Root(chi.pi_angle, -chi.shift)) * gauss_integral(chi.inverse(), 0)
    lhs = lhs_dual.divide_by_l_factor(l_factor(contragredient(pi), mu)).substitute_dual()
    zeta = _kirillov_generating(pi, Root(-mu.pi_angle, mu.shift)) * gauss_integral(mu, 0)
    rhs = zeta.divide_by_l_factor(l_factor(pi, mu.inverse()))
    zero = RatFunc.zero(q)
    vanishing = lhs.equals(zero, tol) and rhs.equals(zero, tol)
    if vanishing:
        ok = True
        rhs = zero
    else:
        rhs = epsilon(pi, mu.inverse()) * rhs
        ok = mu.is_unramified() and lhs.equals(rhs, tol)
    residual = {} if ok else lhs.residual(rhs)
    if not ok:
        logger.warning("Functional equation residual for %s: %s", pi.describe(), residual)
    return FunctionalEquationResult(ok, lhs, rhs, residual, vanishing)


# -- split torus test vectors -----------------------------------------------------

@dataclass
class SplitTestVector:
    branch: int
    h: Mat2
    value: complex
    nonzero: bool
    s0: Fraction
    s0_angle: Fraction
    swapped: bool = False


def split_test_vector(pi: ReprSpec, omega1: MultChar, omega2: MultChar,
                      ctx: LocalFieldCtx, tol: float = 1e-9) -> SplitTestVector:
    """
    Test vector pi(h) W0 for the diagonal torus character
    Omega(diag(x, y)) = Omega1(x) Omega2(y), with the value
    l(pi(h) W0) = [Z(s, pi(h) W0, mu^-1) / L(s, mu^-1 x pi)] at s = s0.
    """
    _require(pi, TABLE_KINDS, "split test vectors")
    omega = pi.central
    prod = omega1 * omega2
    if (prod.gen_angle, prod.pi_angle, prod.shift) != (omega.gen_angle, omega.pi_angle, omega.shift):
        raise InvalidDataError("Omega1 Omega2 must equal the central character")
    swapped = omega1.cond < omega2.cond
    if swapped:
        omega1, omega2 = omega2, omega1
    # Omega1 = |.|^(1/2 - s0) mu with mu unitary, mu(varpi) = 1
    mu = MultChar(omega1.p, omega1.cond, omega1.gen_angle)
    s0 = Fraction(1, 2) - omega1.shift
    s0_angle = -omega1.pi_angle
    X0 = e(s0_angle) * float(pi.q) ** (-float(s0))
    c = mu.cond
    n = Mat2.upper(ctx, ctx.uniformizer(-c))
    L = l_factor(pi, mu.inverse())
    first = c == 0 or not L.has_pole_at(s0, s0_angle)
    if first:
        h = n
        value = normalised_zeta(pi, n, mu)(X0)
        branch = 1
    else:
        dual_pole = l_factor(contragredient(pi), mu).has_pole_at(1 - s0, -s0_angle)
        if dual_pole:
            raise NotCoveredError("both L(s, pi x mu^-1) and L(1-s, pi~ x mu) have a pole at s0")
        h = Mat2.weyl(ctx) * n
        value = normalised_zeta(pi, h, mu)(X0)
        branch = 2
    nonzero = abs(value) > tol
    logger.debug("Split test vector branch %d for %s: %s", branch, pi.describe(), value)
    return SplitTestVector(branch, h, value, nonzero, s0, s0_angle, swapped)


def zeta_prop_expected(pi: ReprSpec, mu: MultChar) -> RatFunc:
    """The closed form of Z(s, pi(n(varpi^-c(mu))) W0, mu^-1)."""
    q = pi.q
    if mu.is_unramified():
        return l_factor(pi, mu.inverse()) * (1 - 1 / q)
    c = mu.cond
    return RatFunc.constant(q, float(q) ** (-c / 2) * mu.at_pi(-c) * epsilon_factor(mu))


def lower_integral_consistency(pi: ReprSpec, j: int, k: int) -> Tuple[complex, complex]:
    """The tabulated lower-unipotent integral next to its Bruhat re-derivation (k <= 0)."""
    return whittaker_lower_integral(pi, j, k), bruhat_lower_integral(pi, j, k)
