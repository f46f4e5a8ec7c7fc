"""
Explicit constants of the toric period formula and its corollaries.

Finite Euler blocks are exact rationals in q, archimedean constants are
exact sympy expressions (rationals times powers of pi, with Beta values
reduced through Gamma). Infinite Euler products such as zeta_F(2) or the
full L(1, eta) are never computed here: the caller supplies them in
RamProfile.numerics and the report records where each one came from.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import mpmath
import sympy as sp

from models.errors import (
    IncompleteInputError,
    InvalidDataError,
    NotCoveredError,
    UnsupportedKindError,
)
from models.quadratic import INERT, RAMIFIED, SPLIT

logger = logging.getLogger(__name__)

R_SPLIT = "R-split"
R_COMPLEX = "R-complexL"
COMPLEX = "C"
PLACE_TYPES = (R_SPLIT, R_COMPLEX, COMPLEX)

PS = "PS"
DS = "DS"

ZETA_2 = "zeta_F(2)"
L_ETA = "L(1,eta)"

Number = Union[int, Fraction, str]


def _rat(x: Number) -> sp.Rational:
    if isinstance(x, Fraction):
        return sp.Rational(x.numerator, x.denominator)
    return sp.Rational(x)


# -- archimedean constants ----------------------------------------------------------

@dataclass(frozen=True)
class ArchSpec:
    """
    One archimedean place.

    Args:
        place_type: R-split, R-complexL (F_v = R, L_v = C) or C.
        rep_type:   PS (principal series) or DS (discrete series).
        k:          weight of the discrete series, or the K-type at a complex place.
        m:          the parameter of Omega_v, a half-integer.
        lam:        Laplace eigenvalue of a principal series; r gives lam = 1/4 - r^2.
        eps:        the sign exponent of a real split principal series.
    """

    place_type: str
    rep_type: str
    k: int = 0
    m: Fraction = Fraction(0)
    lam: Optional[Fraction] = None
    r: Optional[Fraction] = None
    eps: int = 0
    t: Fraction = Fraction(0)

    def __post_init__(self):
        if self.place_type not in PLACE_TYPES:
            raise UnsupportedKindError(self.place_type, "archimedean constant")
        if self.rep_type not in (PS, DS):
            raise UnsupportedKindError(self.rep_type, "archimedean constant")
        if (2 * Fraction(self.m)).denominator != 1:
            raise InvalidDataError(f"m = {self.m} is not a half-integer")
        if self.eps not in (0, 1):
            raise InvalidDataError(f"eps must be 0 or 1, got {self.eps}")

    @property
    def kind(self) -> str:
        return f"{self.place_type}/{self.rep_type}"

    def laplace(self) -> sp.Expr:
        if self.lam is not None:
            return _rat(self.lam)
        if self.r is not None:
            return sp.Rational(1, 4) - _rat(self.r) ** 2
        raise InvalidDataError(f"{self.kind} needs lam or r")


def _beta(a: sp.Expr, b: sp.Expr) -> sp.Expr:
    return sp.gamma(a) * sp.gamma(b) / sp.gamma(a + b)


def arch_constant(spec: ArchSpec) -> sp.Expr:
    """C_v(L, pi, Omega) as an exact expression."""
    pi = sp.pi
    k = sp.Integer(spec.k)
    m = abs(_rat(Fraction(spec.m)))
    if spec.place_type == R_SPLIT:
        if spec.rep_type == DS:
            return sp.Integer(2) ** k
        if spec.eps == 0:
            return sp.Integer(1)
        lam = spec.laplace()
        if lam <= 0:
            raise InvalidDataError(f"Laplace eigenvalue {lam} must be positive")
        return 8 * pi ** 2 / lam

    if spec.place_type == R_COMPLEX:
        if spec.rep_type == PS:
            if not m.is_integer:
                raise UnsupportedKindError(spec.kind, f"archimedean constant at half-integral m = {m}")
            lam = spec.laplace()
            value = (2 * pi) ** (2 * m)
            for j in range(int(m)):
                denom = lam + j * (j + 1)
                if denom == 0:
                    raise InvalidDataError(f"lam + {j}({j} + 1) vanishes")
                value /= denom
            return sp.simplify(value)
        if spec.k < 1:
            raise InvalidDataError(f"discrete series weight {spec.k} < 1")
        if m < (k - 1) / 2:
            return sp.simplify(1 / (pi * _beta(k / 2 + m, k / 2 - m)))
        return sp.simplify((2 * pi) ** (2 * m - k) * sp.factorial(k)
                           / (sp.gamma(m + 1) * _beta(k / 2 + m, 1 - k / 2 + m)))

    if spec.rep_type != PS:
        raise UnsupportedKindError(spec.kind, "archimedean constant")
    ell = max(k, m)
    if not (ell - k).is_integer:
        raise UnsupportedKindError(spec.kind, f"archimedean constant with k - m = {k - m}")
    lam = spec.laplace()
    value = (sp.Rational(1, 2) + ell) * sp.binomial(2 * ell, abs(k - m))
    for j in range(int(k) + 1, int(ell) + 1):
        value *= 4 * pi ** 2 / (4 * lam + j * j - 1)
    return sp.simplify(value)


def arch_constant_numeric(spec: ArchSpec, dps: int = 30) -> mpmath.mpf:
    """The same constants evaluated independently with mpmath Beta and binomial."""
    with mpmath.workdps(dps):
        k = mpmath.mpf(spec.k)
        m = abs(mpmath.mpf(Fraction(spec.m).numerator) / Fraction(spec.m).denominator)
        if spec.lam is not None:
            lam = mpmath.mpf(Fraction(spec.lam).numerator) / Fraction(spec.lam).denominator
        elif spec.r is not None:
            r = mpmath.mpf(Fraction(spec.r).numerator) / Fraction(spec.r).denominator
            lam = mpmath.mpf(1) / 4 - r * r
        else:
            lam = None
        if spec.place_type == R_SPLIT:
            if spec.rep_type == DS:
                return mpmath.power(2, k)
            return mpmath.power(8 * mpmath.pi ** 2 / lam, spec.eps) if spec.eps else mpmath.mpf(1)
        if spec.place_type == R_COMPLEX:
            if spec.rep_type == PS:
                value = mpmath.power(2 * mpmath.pi, 2 * m)
                for j in range(int(m)):
                    value /= lam + j * (j + 1)
                return value
            if m < (k - 1) / 2:
                return 1 / (mpmath.pi * mpmath.beta(k / 2 + m, k / 2 - m))
            return (mpmath.power(2 * mpmath.pi, 2 * m - k) * mpmath.factorial(k)
                    / (mpmath.factorial(m) * mpmath.beta(k / 2 + m, 1 - k / 2 + m)))
        ell = max(k, m)
        value = (mpmath.mpf(1) / 2 + ell) * mpmath.binomial(2 * ell, abs(k - m))
        for j in range(int(k) + 1, int(ell) + 1):
            value *= 4 * mpmath.pi ** 2 / (4 * lam + j * j - 1)
        return value


def arch_cross_check(spec: ArchSpec) -> float:
    """|exact - mpmath| for one archimedean constant."""
    exact = arch_constant(spec)
    numeric = arch_constant_numeric(spec)
    return float(abs(sp.N(exact, 30) - sp.Float(mpmath.nstr(numeric, 30), 30)))


def arch_l_factor(k: int, m: Fraction = Fraction(0)) -> sp.Expr:
    """L_v(1/2, pi_L x Omega) = (2 pi)^(-2k) 4 Gamma(k + m) Gamma(k - m) for a weight k discrete series."""
    m = _rat(Fraction(m))
    if abs(m) >= k:
        raise InvalidDataError(f"|m| = {abs(m)} must be below the weight {k}")
    return (2 * sp.pi) ** (-2 * k) * 4 * sp.gamma(k + m) * sp.gamma(k - m)


def average_weight(k: int, m: Fraction) -> int:
    """binom(2k - 2, k - m - 1), the weight of an archimedean place in the average."""
    km = Fraction(k) - Fraction(m) - 1
    if abs(Fraction(m)) >= k or km.denominator != 1:
        raise InvalidDataError(f"(k, m) = ({k}, {m}) is outside k > |m|, k - m integral")
    return int(sp.binomial(2 * k - 2, int(km)))


# -- finite places ------------------------------------------------------------------

@dataclass(frozen=True)
class FinitePlace:
    """A finite place with residue field size q, its type in L and the local conductors."""

    q: int
    case: str
    c_pi: int = 0
    c_omega: int = 0

    def __post_init__(self):
        if self.q < 2:
            raise InvalidDataError(f"residue field size {self.q} < 2")
        if self.case not in (SPLIT, INERT, RAMIFIED):
            raise InvalidDataError(f"unknown splitting type '{self.case}'")
        if self.c_pi < 0 or self.c_omega < 0:
            raise InvalidDataError("conductor exponents must be non-negative")

    @property
    def eta(self) -> int:
        return {SPLIT: 1, INERT: -1, RAMIFIED: 0}[self.case]

    @property
    def e(self) -> int:
        return 2 if self.case == RAMIFIED else 1

    def l_eta(self, s: int = 1) -> Fraction:
        return 1 / (1 - Fraction(self.eta, self.q ** s))

    def l_one(self, s: int = 1) -> Fraction:
        return 1 / (1 - Fraction(1, self.q ** s))


def _product(values: Iterable[Fraction]) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


@dataclass
class RamProfile:
    """
    The ramification of (pi, Omega) together with the global invariants of F and L.

    Args:
        places:       finite places where pi or Omega ramifies (others may be listed too).
        arch:         one ArchSpec per real or complex place of F.
        delta:        |disc F|.
        delta_l:      |disc L|.
        h_f:          class number of F.
        d:            [F : Q].
        c_omega_norm: absolute norm of c(Omega); defaults to the product of q^c(Omega_v).
        epsilon_ok:   the caller asserts the local root number condition.
        numerics:     caller-supplied global values such as zeta_F(2) or L(1, eta).
        provenance:   where each caller numeric came from.
    """

    places: Tuple[FinitePlace, ...] = ()
    arch: Tuple[ArchSpec, ...] = ()
    delta: int = 1
    delta_l: int = 1
    h_f: int = 1
    d: int = 1
    c_omega_norm: Optional[int] = None
    epsilon_ok: bool = True
    numerics: Dict[str, float] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)

    def s_pi(self) -> List[FinitePlace]:
        return [v for v in self.places if v.c_pi > 0]

    def s_omega(self) -> List[FinitePlace]:
        return [v for v in self.places if v.c_omega > 0]

    def conductor_norm(self) -> int:
        if self.c_omega_norm is not None:
            return self.c_omega_norm
        return int(_product(Fraction(v.q ** v.c_omega) for v in self.places))

    def validate(self):
        for v in self.places:
            if v.case == INERT and v.c_pi > 0 and v.c_omega > 0 and v.c_omega < v.c_pi:
                raise InvalidDataError(
                    f"c(Omega_v) = {v.c_omega} < c(pi_v) = {v.c_pi} at the inert place q = {v.q}")
        if self.arch and len(self.arch) != self.d:
            raise InvalidDataError(f"{len(self.arch)} archimedean places listed for [F:Q] = {self.d}")
        if self.delta < 1 or self.delta_l < 1 or self.h_f < 1:
            raise InvalidDataError("discriminants and class numbers are positive")


@dataclass
class ConstantReport:
    name: str
    exact: sp.Expr
    factors: Dict[str, sp.Expr] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)

    @property
    def value(self) -> float:
        return float(sp.N(self.exact, 30))

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "exact": str(self.exact),
            "value": self.value,
            "factors": {k: str(v) for k, v in self.factors.items()},
            "provenance": dict(self.provenance),
        }


def _caller_value(prof: RamProfile, key: str, provenance: Dict[str, str]) -> sp.Expr:
    if key in prof.numerics:
        provenance[key] = prof.provenance.get(key, "caller-supplied")
        return sp.Float(prof.numerics[key], 30)
    if key == ZETA_2 and prof.d == 1:
        provenance[key] = "zeta(2) = pi^2/6 (F = Q)"
        return sp.pi ** 2 / 6
    raise IncompleteInputError(key)


def _arch_product(prof: RamProfile) -> sp.Expr:
    if len(prof.arch) != prof.d:
        raise IncompleteInputError(f"archimedean data for {prof.d} place(s)")
    out = sp.Integer(1)
    for spec in prof.arch:
        out *= arch_constant(spec)
    return out


def _sqrt_discriminants(prof: RamProfile) -> sp.Expr:
    return sp.sqrt(sp.Rational(prof.delta, prof.conductor_norm() * prof.delta_l))


def central_value_constant(prof: RamProfile) -> ConstantReport:
    """
    1/2 sqrt(Delta / (c(Omega) Delta_L)) L_S(Omega)(1, eta) L_S(pi) u S(Omega)(1, eta)
    L_S(pi) n S(Omega)(1, 1_F) L^S(pi)(2, 1_F) prod over S(pi) \\ S(Omega) of e(L_v/F_v)
    prod over v | infinity of C_v.
    """
    if not prof.epsilon_ok:
        raise NotCoveredError("the local root number condition does not hold")
    prof.validate()
    provenance: Dict[str, str] = {}
    s_pi = {v.q: v for v in prof.s_pi()}
    s_omega = {v.q: v for v in prof.s_omega()}
    union = {**s_pi, **s_omega}
    both = [v for q, v in s_pi.items() if q in s_omega]
    only_pi = [v for q, v in s_pi.items() if q not in s_omega]
    zeta2 = _caller_value(prof, ZETA_2, provenance)
    factors = {
        "1/2": sp.Rational(1, 2),
        "sqrt(Delta/(c(Omega) Delta_L))": _sqrt_discriminants(prof),
        "L_S(Omega)(1,eta)": _rat(_product(v.l_eta() for v in s_omega.values())),
        "L_S(pi)uS(Omega)(1,eta)": _rat(_product(v.l_eta() for v in union.values())),
        "L_S(pi)nS(Omega)(1,1)": _rat(_product(v.l_one() for v in both)),
        "L^S(pi)(2,1)": zeta2 * _rat(_product(1 / v.l_one(2) for v in s_pi.values())),
        "prod e(L_v/F_v)": sp.Integer(int(_product(Fraction(v.e) for v in only_pi))),
        "prod C_v": _arch_product(prof),
    }
    exact = sp.Mul(*factors.values())
    logger.debug("Central value constant over %d finite places: %s", len(prof.places), exact)
    return ConstantReport("central-value", exact, factors, provenance)


def mw_disjoint_constant(prof: RamProfile) -> ConstantReport:
    """
    The disjoint-ramification constant
    1/2 sqrt(Delta / (c(Omega) Delta_L)) L_S(Omega)(1, eta)^2 L_S(pi)(1, eta)
    zeta^S(pi)(2) prod over S(pi) of e(L_v/F_v) prod C_v.
    """
    prof.validate()
    s_pi = prof.s_pi()
    s_omega = prof.s_omega()
    if {v.q for v in s_pi} & {v.q for v in s_omega}:
        raise NotCoveredError("pi and Omega ramify at a common place")
    provenance: Dict[str, str] = {}
    zeta2 = _caller_value(prof, ZETA_2, provenance)
    factors = {
        "1/2": sp.Rational(1, 2),
        "sqrt(Delta/(c(Omega) Delta_L))": _sqrt_discriminants(prof),
        "L_S(Omega)(1,eta)^2": _rat(_product(v.l_eta() for v in s_omega)) ** 2,
        "L_S(pi)(1,eta)": _rat(_product(v.l_eta() for v in s_pi)),
        "zeta^S(pi)(2)": zeta2 * _rat(_product(1 / v.l_one(2) for v in s_pi)),
        "prod e(L_v/F_v)": sp.Integer(int(_product(Fraction(v.e) for v in s_pi))),
        "prod C_v": _arch_product(prof),
    }
    return ConstantReport("mw_disjoint", sp.Mul(*factors.values()), factors, provenance)


def _check_squarefree(level: Sequence[FinitePlace]):
    qs = [v.q for v in level]
    if len(set(qs)) != len(qs):
        raise InvalidDataError(f"level {qs} is not squarefree")
    for q in qs:
        if not sp.isprime(q):
            raise InvalidDataError(f"{q} is not a rational prime")


def corollary12_constant(k: int, level: Sequence[FinitePlace], omega_places: Sequence[FinitePlace],
                         delta_l: int, m: Fraction = Fraction(0),
                         c_omega_norm: Optional[int] = None) -> ConstantReport:
    """
    F = Q, f holomorphic of weight k and squarefree level N dividing c(Omega):
    C_infinity / (2^(k+1) sqrt(c(Omega) Delta_L)) L_S(Omega)(1, eta)^2
    prod over p | N of (1 + 1/p)^(eps_p), eps_p = 1 for split p and -1 otherwise.
    """
    _check_squarefree(level)
    conductor = {v.q for v in omega_places if v.c_omega > 0}
    missing = [v.q for v in level if v.q not in conductor]
    if missing:
        raise InvalidDataError(f"level primes {missing} do not divide c(Omega)")
    norm = c_omega_norm if c_omega_norm is not None else int(
        _product(Fraction(v.q ** v.c_omega) for v in omega_places))
    c_inf = arch_constant(ArchSpec(R_COMPLEX, DS, k=k, m=Fraction(m)))
    level_block = _product((1 + Fraction(1, v.q)) ** (1 if v.case == SPLIT else -1) for v in level)
    factors = {
        "C_infinity": c_inf,
        "1/2^(k+1)": sp.Rational(1, 2 ** (k + 1)),
        "1/sqrt(c(Omega) Delta_L)": 1 / sp.sqrt(sp.Integer(norm * delta_l)),
        "L_S(Omega)(1,eta)^2": _rat(_product(v.l_eta() for v in omega_places if v.c_omega > 0)) ** 2,
        "prod (1+1/p)^eps_p": _rat(level_block),
    }
    return ConstantReport("corollary12", sp.Mul(*factors.values()), factors, {})


# -- averages and bounds ------------------------------------------------------------

def avg_rhs(prof: RamProfile, n0: Sequence[FinitePlace], n1: Sequence[FinitePlace],
            c0: Sequence[FinitePlace]) -> ConstantReport:
    """
    2^(2-d) Delta^(3/2) |N| L_S(N0)(2, 1_F) L_S(N1)(1, 1_F) L^S(C0)(1, eta)
    with N = N0 N1 squarefree and every prime of N inert in L.
    """
    level = list(n0) + list(n1)
    _check_squarefree(level)
    for v in level:
        if v.case != INERT:
            raise InvalidDataError(f"q = {v.q} divides the level but is not inert in L")
    provenance: Dict[str, str] = {}
    l_eta = _caller_value(prof, L_ETA, provenance)
    level_norm = int(_product(Fraction(v.q) for v in level))
    factors = {
        "2^(2-d)": sp.Integer(2) ** (2 - prof.d),
        "Delta^(3/2)": sp.Integer(prof.delta) ** sp.Rational(3, 2),
        "|N|": sp.Integer(level_norm),
        "L_S(N0)(2,1)": _rat(_product(v.l_one(2) for v in n0)),
        "L_S(N1)(1,1)": _rat(_product(v.l_one() for v in n1)),
        "L^S(C0)(1,eta)": l_eta * _rat(_product(1 / v.l_eta() for v in c0)),
    }
    return ConstantReport("avg_rhs", sp.Mul(*factors.values()), factors, provenance)


def sigma_bounds(p: int) -> Tuple[Fraction, Fraction, int]:
    """(lower, upper, limit) = (|p| - 1/(1 - 2/|p| + 1/|p|^2), |p| - 1/(1 + 2/|p| + 1/|p|^2), |p| - 1)."""
    if p < 2:
        raise InvalidDataError(f"norm {p} of a prime must be at least 2")
    x = Fraction(1, p)
    lower = p - 1 / (1 - 2 * x + x * x)
    upper = p - 1 / (1 + 2 * x + x * x)
    return lower, upper, p - 1


def nonvanishing_threshold() -> sp.Expr:
    """The largest root of the lower bound of Sigma, (3 + sqrt(5))/2."""
    P = sp.symbols("P", positive=True)
    lower = P - 1 / (1 - 2 / P + 1 / P ** 2)
    roots = sp.solve(sp.numer(sp.together(lower)), P)
    return sp.nsimplify(max(roots, key=lambda r: float(r)))


# -- Petersson and algebraic normalisations -----------------------------------------

def petersson_adjoint_factor(weights: Sequence[int], delta: int, h_f: int, level_norm: int) -> sp.Expr:
    """L(1, pi, Ad) / (f, f) = 2^(2|k| - 1) / (Delta^2 h_F |N|)."""
    total = sum(weights)
    return sp.Integer(2) ** (2 * total - 1) / (sp.Integer(delta) ** 2 * h_f * level_norm)


def lvalalg_factor(weights: Sequence[int], delta: int) -> sp.Expr:
    """L^alg = L_fin(1/2) / (L(1, eta) (f, f)) times this factor, 1 / (sqrt(Delta) pi^(2|k|))."""
    return 1 / (sp.sqrt(delta) * sp.pi ** (2 * sum(weights)))


def lvalalg(l_fin, l_eta, petersson, weights: Sequence[int], delta: int) -> sp.Expr:
    return sp.sympify(l_fin) * lvalalg_factor(weights, delta) / (sp.sympify(l_eta) * sp.sympify(petersson))


def adjoint_ratio_identity(weights: Sequence[int], ms: Sequence[Fraction], delta: int, h_f: int,
                           level_norm: int) -> bool:
    """
    L(1/2) / L(1, Ad) computed from the completed L-value and the Petersson
    relation agrees with 2^(2d+1-4|k|) Delta^(5/2) h_F |N| L(1, eta) L^alg prod Gamma(k+m) Gamma(k-m),
    symbolically in L_fin, (f, f) and L(1, eta).
    """
    if len(weights) != len(ms):
        raise InvalidDataError("one m per archimedean place")
    l_fin, ff, l_eta = sp.symbols("L_fin ff L_eta", positive=True)
    d = len(weights)
    total = sum(weights)
    gammas = sp.Mul(*(sp.gamma(k + _rat(Fraction(m))) * sp.gamma(k - _rat(Fraction(m)))
                      for k, m in zip(weights, ms)))
    completed = l_fin * sp.Mul(*(arch_l_factor(k, Fraction(m)) for k, m in zip(weights, ms)))
    adjoint = petersson_adjoint_factor(weights, delta, h_f, level_norm) * ff
    direct = completed / adjoint
    via_alg = (sp.Integer(2) ** (2 * d + 1 - 4 * total) * sp.Integer(delta) ** sp.Rational(5, 2)
               * h_f * level_norm * l_eta * lvalalg(l_fin, l_eta, ff, weights, delta) * gammas)
    return sp.simplify(direct - via_alg) == 0


def average_algebraic_rhs(omega_places: Sequence[FinitePlace], weights: Sequence[int],
                          delta: int, h_f: int) -> sp.Expr:
    """
    The value of sum over f of L^alg(f) forced by
    2^(3d - 4|k| - 1) Delta h_F prod (2k_v - 2)! sum L^alg = 1 / L_S(Omega)(1, eta).
    """
    d = len(weights)
    scale = (sp.Integer(2) ** (3 * d - 4 * sum(weights) - 1) * delta * h_f
             * sp.Mul(*(sp.factorial(2 * k - 2) for k in weights)))
    target = 1 / _rat(_product(v.l_eta() for v in omega_places if v.c_omega > 0))
    return target / scale


# -- local spectral values ----------------------------------------------------------

@dataclass(frozen=True)
class LocalJTilde:
    """coefficient times the L-value quotient named in carries ("" when none remains)."""

    coefficient: Fraction
    carries: str


def local_jtilde(v: FinitePlace) -> LocalJTilde:
    """J~_v at a finite place, up to vol(K'_v) normalisation."""
    q = v.q
    c = v.c_omega
    scale = Fraction(1, q ** c)
    if v.case == SPLIT:
        if v.c_pi == 0:
            wnorm, carries = v.l_one(2) / v.l_one(), "1/L(1,Ad)"
        elif v.c_pi == 1:
            wnorm, carries = 1 / v.l_one(2), ""
        else:
            wnorm, carries = Fraction(1), ""
        if c == 0:
            return LocalJTilde(scale * wnorm, "L(1/2)" + carries)
        return LocalJTilde(scale * v.l_one() ** 2 * wnorm, carries)
    if v.c_pi == 0:
        eta_power = -1 if c == 0 else 1
        return LocalJTilde(scale / v.e * v.l_one(2) * v.l_eta() ** eta_power, "L(1/2)/L(1,Ad)")
    if c == 0:
        return LocalJTilde(Fraction(1), "")
    value = scale * v.l_one() * v.l_eta() / v.e
    if v.c_pi == 1:
        value /= v.l_one(2)
    return LocalJTilde(value, "")
