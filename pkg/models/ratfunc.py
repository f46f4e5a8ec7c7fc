"""
Rational functions of X = q^(-s).

The denominator is kept factored as a product of (1 - r*X)^m over exact
roots r = e(angle) * q^qexp, so pole questions are answered exactly; the
numerator is a Laurent polynomial with complex coefficients.
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

# coefficients below this (relative) size are treated as zero
_EPS = 1e-11


@dataclass(frozen=True)
class Root:
    """The complex number e(angle) * q^qexp, kept exactly."""

    angle: Fraction
    qexp: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "angle", Fraction(self.angle) % 1)
        object.__setattr__(self, "qexp", Fraction(self.qexp))

    def value(self, q: int) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.angle)) * float(q) ** float(self.qexp)

    def __mul__(self, other: "Root") -> "Root":
        return Root(self.angle + other.angle, self.qexp + other.qexp)

    def __pow__(self, n: int) -> "Root":
        return Root(self.angle * n, self.qexp * n)

    def inverse(self) -> "Root":
        return Root(-self.angle, -self.qexp)


ONE = Root(Fraction(0), Fraction(0))


def _clean(num: Dict[int, complex], scale: float = 1.0) -> Dict[int, complex]:
    tol = _EPS * max(scale, 1.0)
    return {k: c for k, c in num.items() if abs(c) > tol}


class RatFunc:
    __slots__ = ("q", "num", "den")

    def __init__(self, q: int, num: Optional[Dict[int, complex]] = None,
                 den: Optional[Dict[Root, int]] = None):
        self.q = q
        self.num = {k: complex(c) for k, c in (num or {}).items() if c != 0}
        self.den = {r: m for r, m in (den or {}).items() if m > 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "RatFunc":
        return cls(q)

    @classmethod
    def constant(cls, q: int, c: complex) -> "RatFunc":
        return cls(q, {0: c})

    @classmethod
    def monomial(cls, q: int, c: complex, k: int) -> "RatFunc":
        return cls(q, {k: c})

    @classmethod
    def geometric(cls, q: int, r: Root, power: int = 1) -> "RatFunc":
        """1 / (1 - r*X)^power."""
        return cls(q, {0: 1}, {r: power})

    @classmethod
    def l_factor(cls, q: int, roots: Iterable[Root]) -> "RatFunc":
        den: Dict[Root, int] = {}
        for r in roots:
            den[r] = den.get(r, 0) + 1
        return cls(q, {0: 1}, den)

    # -- polynomial helpers ----------------------------------------------

    @staticmethod
    def _poly_mul(a: Dict[int, complex], b: Dict[int, complex]) -> Dict[int, complex]:
        out: Dict[int, complex] = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return out

    def _factor_poly(self, r: Root, m: int) -> Dict[int, complex]:
        """(1 - r X)^m as a polynomial."""
        poly = {0: 1 + 0j}
        rv = r.value(self.q)
        for _ in range(m):
            poly = self._poly_mul(poly, {0: 1, 1: -rv})
        return poly

    def _scale(self) -> float:
        return max((abs(c) for c in self.num.values()), default=0.0)

    # -- arithmetic -----------------------------------------------------

    def _lift_to(self, den: Dict[Root, int]) -> Dict[int, complex]:
        num = dict(self.num)
        for r, m in den.items():
            extra = m - self.den.get(r, 0)
            if extra > 0:
                num = self._poly_mul(num, self._factor_poly(r, extra))
        return num

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = RatFunc.constant(self.q, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        den = dict(self.den)
        for r, m in other.den.items():
            den[r] = max(den.get(r, 0), m)
        a = self._lift_to(den)
        b = other._lift_to(den)
        num = {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)}
        scale = max(self._scale(), other._scale())
        return RatFunc(self.q, _clean(num, scale), den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.q, {k: -c for k, c in self.num.items()}, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return RatFunc(self.q, {k: c * other for k, c in self.num.items()}, self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        den = dict(self.den)
        for r, m in other.den.items():
            den[r] = den.get(r, 0) + m
        return RatFunc(self.q, self._poly_mul(self.num, other.num), den).reduce()

    __rmul__ = __mul__

    def shift(self, k: int) -> "RatFunc":
        """Multiply by X^k."""
        return RatFunc(self.q, {e + k: c for e, c in self.num.items()}, self.den)

    def divide_by_l_factor(self, l_factor: "RatFunc") -> "RatFunc":
        """self / L where L = 1 / prod(1 - rX)."""
        num = dict(self.num)
        for r, m in l_factor.den.items():
            num = self._poly_mul(num, self._factor_poly(r, m))
        inv_num = l_factor.num
        if set(inv_num) != {0}:
            raise ValueError("L-factor numerator must be constant")
        c = inv_num[0]
        return RatFunc(self.q, {k: v / c for k, v in num.items()}, self.den).reduce()

    # -- evaluation and poles ---------------------------------------------

    def num_at(self, X: complex) -> complex:
        return sum(c * X ** k for k, c in self.num.items())

    def __call__(self, X: complex) -> complex:
        den = 1 + 0j
        for r, m in self.den.items():
            den *= (1 - r.value(self.q) * X) ** m
        return self.num_at(X) / den

    def at_s(self, s) -> complex:
        """Evaluate at X = q^(-s) for a real s."""
        return self(float(self.q) ** (-float(s)))

    def reduce(self) -> "RatFunc":
        """Cancel every denominator factor at whose root the numerator vanishes."""
        num = dict(self.num)
        den = dict(self.den)
        changed = True
        while changed and num:
            changed = False
            for r in list(den):
                rv = r.value(self.q)
                X0 = 1 / rv
                scale = sum(abs(c) * abs(X0) ** k for k, c in num.items())
                if abs(sum(c * X0 ** k for k, c in num.items())) <= 1e-9 * max(scale, 1e-300):
                    num = self._divide_linear(num, rv)
                    den[r] -= 1
                    if den[r] == 0:
                        del den[r]
                    changed = True
                    break
        if not num:
            den = {}
        return RatFunc(self.q, num, den)

    @staticmethod
    def _divide_linear(num: Dict[int, complex], rv: complex) -> Dict[int, complex]:
        """Quotient of num by (1 - rv X), remainder assumed zero."""
        lo, hi = min(num), max(num)
        quotient: Dict[int, complex] = {}
        prev = 0j
        for k in range(lo, hi):
            cur = num.get(k, 0) + rv * prev
            quotient[k] = cur
            prev = cur
        return _clean(quotient, max(abs(c) for c in num.values()))

    def is_laurent(self) -> bool:
        return not self.reduce().den

    def is_zero(self) -> bool:
        return not _clean(self.num, 1.0)

    def has_pole_at(self, s0: Fraction, angle: Fraction = Fraction(0)) -> bool:
        """Pole at X0 = e(angle) q^(-s0), decided on the exact roots."""
        target = Root(-Fraction(angle), Fraction(s0))
        return target in self.reduce().den

    def poles(self) -> Tuple[Root, ...]:
        return tuple(sorted(self.reduce().den, key=lambda r: (r.qexp, r.angle)))

    def substitute_dual(self) -> "RatFunc":
        """The function X -> self(1/(qX)), i.e. s -> 1 - s."""
        q = self.q
        num = {-k: c * float(q) ** (-k) for k, c in self.num.items()}
        den: Dict[Root, int] = {}
        shift = 0
        factor = 1 + 0j
        for r, m in self.den.items():
            # 1 - r/(qX) = (-r/q) X^-1 (1 - (q/r) X)
            dual = Root(-r.angle, 1 - r.qexp)
            den[dual] = den.get(dual, 0) + m
            factor *= (-r.value(q) / q) ** m
            shift += m
        out = RatFunc(q, {k + shift: c / factor for k, c in num.items()}, den)
        return out

    def equals(self, other: "RatFunc", tol: float = 1e-9) -> bool:
        diff = (self - other).reduce()
        scale = max(self._scale(), other._scale(), 1.0)
        return all(abs(c) <= tol * scale for c in diff.num.values())

    def residual(self, other: "RatFunc") -> Dict[int, complex]:
        return (self - other).reduce().num

    def __repr__(self):
        terms = " + ".join(f"({c:.6g})X^{k}" for k, c in sorted(self.num.items())) or "0"
        dens = "".join(f"(1-[{r.angle},{r.qexp}]X)^{m}" for r, m in self.den.items())
        return f"RatFunc[{terms}]/[{dens or 1}]"
