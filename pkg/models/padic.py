"""
Truncated p-adic numbers in F = Q_p.

An element is stored as p^val * unit with the unit known modulo p^prec
(capped relative precision). Zero carries its absolute precision instead:
``PAdic.zero(p, A)`` means "0 + O(p^A)" and A may be ``math.inf`` for an
exact zero. All arithmetic tracks precision and every decision that the
stored digits cannot settle raises ``PrecisionError``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from sympy import isprime

from models.errors import InvalidDataError, PrecisionError

Number = Union[int, Fraction]

# relative precision used when an exact zero meets an exact rational
_EXACT_PREC = 64


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("vp(0) is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


class PAdic:
    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val, unit: int, prec):
        self.p = p
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, abs_prec=math.inf) -> "PAdic":
        return cls(p, math.inf, 0, abs_prec)

    @classmethod
    def from_rational(cls, x: Number, p: int, prec: int) -> "PAdic":
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        num, den = x.numerator, x.denominator
        v = vp(num, p) - vp(den, p)
        num //= p ** vp(num, p)
        den //= p ** vp(den, p)
        mod = p ** prec
        return cls(p, v, (num * pow(den, -1, mod)) % mod, prec)

    @classmethod
    def from_int(cls, n: int, p: int, prec: int) -> "PAdic":
        return cls.from_rational(n, p, prec)

    # -- basic predicates ---------------------------------------------

    def is_zero(self) -> bool:
        return self.val == math.inf

    def is_unit(self) -> bool:
        return self.val == 0

    @property
    def abs_prec(self):
        if self.is_zero():
            return self.prec
        return self.val + self.prec

    def valuation(self):
        return self.val

    def in_ideal(self, r: int) -> bool:
        """Decide x in p^r."""
        if not self.is_zero():
            return self.val >= r
        if self.prec >= r:
            return True
        raise PrecisionError(f"zero known only modulo p^{self.prec}, cannot test p^{r}")

    def require_nonzero(self) -> "PAdic":
        if self.is_zero():
            raise PrecisionError("element indistinguishable from 0")
        return self

    # -- conversions ----------------------------------------------------

    def lift(self) -> Fraction:
        """Canonical rational lift p^val * unit."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def residue(self, n: int) -> int:
        """The class of an integral element modulo p^n, as 0..p^n-1."""
        if n <= 0:
            return 0
        if self.is_zero():
            if self.prec < n:
                raise PrecisionError(f"zero known only modulo p^{self.prec}", needed=n)
            return 0
        if self.val < 0:
            raise InvalidDataError(f"residue of a non-integral element (valuation {self.val})")
        if self.abs_prec < n:
            raise PrecisionError(f"residue mod p^{n} needs absolute precision {n}", needed=n)
        if self.val >= n:
            return 0
        return (self.unit * self.p ** self.val) % self.p ** n

    def fractional_part(self) -> Fraction:
        """Fractional part of the canonical lift, in [0, 1)."""
        if self.is_zero() or self.val >= 0:
            if self.is_zero() and self.prec < 0:
                raise PrecisionError("fractional part of O(p^k) with k < 0")
            return Fraction(0)
        k = -self.val
        if self.prec < k:
            raise PrecisionError(f"fractional part needs relative precision {k}", needed=k)
        return Fraction(self.unit % self.p ** k, self.p ** k)

    def unit_part(self) -> "PAdic":
        self.require_nonzero()
        return PAdic(self.p, 0, self.unit, self.prec)

    def shift(self, k: int) -> "PAdic":
        """Multiply by p^k."""
        if self.is_zero():
            return PAdic.zero(self.p, self.prec + k)
        return PAdic(self.p, self.val + k, self.unit, self.prec)

    def with_abs_cap(self, A) -> "PAdic":
        """Add O(p^A)."""
        if A == math.inf:
            return self
        if self.is_zero():
            return PAdic.zero(self.p, min(self.prec, A))
        if self.val >= A:
            return PAdic.zero(self.p, A)
        prec = min(self.prec, A - self.val)
        return PAdic(self.p, self.val, self.unit % self.p ** prec, prec)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "PAdic":
        if isinstance(other, PAdic):
            if other.p != self.p:
                raise InvalidDataError(f"mixing Q_{self.p} and Q_{other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            prec = self.prec if self.prec != math.inf else _EXACT_PREC
            prec = max(prec, 1)
            return PAdic.from_rational(other, self.p, prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other.with_abs_cap(self.prec)
        if other.is_zero():
            return self.with_abs_cap(other.prec)
        p = self.p
        m = min(self.val, other.val)
        A = min(self.abs_prec, other.abs_prec)
        mod = p ** (A - m)
        s = (self.unit * p ** (self.val - m) + other.unit * p ** (other.val - m)) % mod
        if s == 0:
            return PAdic.zero(p, A)
        k = vp(s, p)
        v = m + k
        prec = A - v
        return PAdic(p, v, (s // p ** k) % p ** prec, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return PAdic(self.p, self.val, (-self.unit) % self.p ** self.prec, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() and other.is_zero():
            return PAdic.zero(self.p, self.prec + other.prec)
        if self.is_zero():
            return PAdic.zero(self.p, self.prec + other.val)
        if other.is_zero():
            return PAdic.zero(self.p, other.prec + self.val)
        prec = min(self.prec, other.prec)
        return PAdic(self.p, self.val + other.val, (self.unit * other.unit) % self.p ** prec, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PAdic":
        if self.is_zero():
            raise PrecisionError("inverse of an element indistinguishable from 0")
        mod = self.p ** self.prec
        return PAdic(self.p, -self.val, pow(self.unit, -1, mod), self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = PAdic.from_int(1, self.p, self.prec if self.prec != math.inf else _EXACT_PREC)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except InvalidDataError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        if self.is_zero():
            return hash((self.p, "zero"))
        return hash((self.p, self.val, self.unit % self.p))

    def __repr__(self):
        if self.is_zero():
            return f"O({self.p}^{self.prec})" if self.prec != math.inf else "0"
        return f"{self.unit}*{self.p}^{self.val} + O({self.p}^{self.abs_prec})"


@dataclass(frozen=True)
class LocalFieldCtx:
    """Q_p together with the working precision N (exponent of p^N)."""

    p: int
    N: int

    def __post_init__(self):
        if self.p < 3 or not isprime(self.p):
            raise InvalidDataError(f"p must be an odd prime, got {self.p}")
        if self.N < 1:
            raise InvalidDataError(f"working precision must be >= 1, got {self.N}")

    @property
    def q(self) -> int:
        return self.p

    def element(self, x: Number) -> PAdic:
        return PAdic.from_rational(x, self.p, self.N)

    def zero(self) -> PAdic:
        return PAdic.zero(self.p)

    def one(self) -> PAdic:
        return self.element(1)

    def uniformizer(self, k: int = 1) -> PAdic:
        return PAdic(self.p, k, 1, self.N)

    def enumerate_residues(self, n: int) -> List[int]:
        """Canonical lifts 0..p^n-1 of o/p^n."""
        if n < 0:
            raise InvalidDataError(f"negative residue exponent {n}")
        if n > self.N:
            raise PrecisionError(f"residues mod p^{n} exceed working precision", needed=n)
        return list(range(self.p ** n))

    def enumerate_units(self, n: int) -> List[int]:
        return [r for r in self.enumerate_residues(n) if n == 0 or r % self.p != 0]
