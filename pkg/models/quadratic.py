"""
Quadratic algebra L = F[beta] attached to a triple (a, b, c).

beta = (b + sqrt(d)) / (2c) is a root of c*X^2 - b*X + a, so elements are
stored as x + y*beta with beta^2 = (b/c)*beta - a/c and o_L = o + o*beta.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from sympy.ntheory import sqrt_mod

from models.errors import InvalidDataError, PrecisionError
from models.padic import LocalFieldCtx, PAdic

logger = logging.getLogger(__name__)

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"

Scalar = Union[int, Fraction, PAdic]


@dataclass(frozen=True)
class QuadExtData:
    ctx: LocalFieldCtx
    a: PAdic
    b: PAdic
    c: PAdic
    d: PAdic
    case: str
    u0: Optional[int] = None
    # coefficients of the multiplication law, cached
    b_over_c: PAdic = field(default=None, repr=False)
    a_over_c: PAdic = field(default=None, repr=False)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def q(self) -> int:
        return self.ctx.p

    @property
    def e(self) -> int:
        """Ramification degree e(L/F)."""
        return 2 if self.case == RAMIFIED else 1

    @property
    def va(self) -> int:
        return self.a.valuation() if not self.a.is_zero() else math.inf

    def legendre(self) -> int:
        return {SPLIT: 1, INERT: -1, RAMIFIED: 0}[self.case]

    def element(self, x: Scalar, y: Scalar = 0) -> "LElement":
        return LElement(self, _scalar(self.ctx, x), _scalar(self.ctx, y))

    @property
    def beta(self) -> "LElement":
        return self.element(0, 1)

    @property
    def xi0(self) -> "LElement":
        """xi_0 = c*beta - b = (sqrt(d) - b)/2."""
        return LElement(self, -self.b, self.c)

    @property
    def xi(self) -> "LElement":
        """xi = sqrt(d)/2 = c*beta - b/2."""
        return LElement(self, -self.b / 2, self.c)

    def uniformizer_L(self) -> "LElement":
        """varpi_L: varpi itself unless L/F is ramified, then u0 + beta."""
        if self.case == RAMIFIED:
            return self.element(self.u0, 1)
        return self.element(self.ctx.uniformizer())

    def eps_ramified(self) -> "LElement":
        """The unit varpi_L^2 / varpi in the ramified case."""
        pil = self.uniformizer_L()
        return (pil * pil) / self.ctx.uniformizer()

    def l_eta(self, s: int = 1) -> Fraction:
        """L(s, eta) for the quadratic character of L/F."""
        return 1 / (1 - Fraction(self.legendre(), self.q ** s))

    def root_count(self) -> int:
        """Number of roots of c*u^2 + b*u + a in o/p."""
        p = self.p
        a, b, c = (x.residue(1) for x in (self.a, self.b, self.c))
        return sum(1 for u in range(p) if (c * u * u + b * u + a) % p == 0)

    def beta_roots(self) -> Tuple[PAdic, PAdic]:
        """The two F-rational roots of c*X^2 - b*X + a (split case only)."""
        if self.case != SPLIT:
            raise InvalidDataError(f"{self.case} extension has no F-rational roots")
        N = self.ctx.N
        mod = self.p ** N
        r = sqrt_mod(self.d.residue(N), mod)
        if r is None:
            raise PrecisionError("square root of d not found modulo p^N")
        root = PAdic.from_int(r, self.p, N)
        two_c = self.c * 2
        return (self.b + root) / two_c, (self.b - root) / two_c


def _scalar(ctx: LocalFieldCtx, x: Scalar) -> PAdic:
    if isinstance(x, PAdic):
        return x
    return ctx.element(x)


def build_quadratic_data(ctx: LocalFieldCtx, a: Scalar, b: Scalar, c: Scalar) -> QuadExtData:
    """Classify L = F[X]/(cX^2 - bX + a) and fix u0 in the ramified case."""
    a, b, c = (_scalar(ctx, x) for x in (a, b, c))
    if not a.in_ideal(0) or not b.in_ideal(0):
        raise InvalidDataError("a and b must be integral")
    if c.is_zero() or not c.is_unit():
        raise InvalidDataError("c must be a unit")
    d = b * b - a * c * 4
    if d.is_zero():
        raise PrecisionError("discriminant indistinguishable from 0")
    vd = d.valuation()
    p = ctx.p
    u0 = None
    if vd == 0:
        residue = d.residue(1)
        case = SPLIT if pow(residue, (p - 1) // 2, p) == 1 else INERT
    elif vd == 1:
        case = RAMIFIED
    else:
        raise InvalidDataError(f"v(d) = {vd}: d must be a unit or have valuation 1")

    ext = QuadExtData(ctx, a, b, c, d, case, None, b / c, a / c)
    if case == RAMIFIED:
        ar, br, cr = a.residue(1), b.residue(1), c.residue(1)
        roots = [u for u in range(p) if (cr * u * u + br * u + ar) % p == 0]
        if len(roots) != 1:
            raise InvalidDataError(f"ramified data with {len(roots)} roots mod p")
        u0 = roots[0]
        if (br + 2 * cr * u0) % p != 0:
            raise InvalidDataError("b + 2c*u0 must lie in p")
        ext = QuadExtData(ctx, a, b, c, d, case, u0, b / c, a / c)
    logger.debug("Built %s extension (a, b, c) = (%s, %s, %s) over Q_%d", case, a, b, c, p)
    return ext


def legendre_symbol(ext: QuadExtData) -> int:
    return ext.legendre()


class LElement:
    """x + y*beta in L."""

    __slots__ = ("ext", "x", "y")

    def __init__(self, ext: QuadExtData, x: PAdic, y: PAdic):
        self.ext = ext
        self.x = x
        self.y = y

    def _coerce(self, other) -> "LElement":
        if isinstance(other, LElement):
            return other
        if isinstance(other, (int, Fraction, PAdic)):
            return LElement(self.ext, _scalar(self.ext.ctx, other), self.ext.ctx.zero())
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LElement(self.ext, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self):
        return LElement(self.ext, -self.x, -self.y)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ext = self.ext
        yy = self.y * other.y
        x = self.x * other.x - ext.a_over_c * yy
        y = self.x * other.y + other.x * self.y + ext.b_over_c * yy
        return LElement(ext, x, y)

    __rmul__ = __mul__

    def conj(self) -> "LElement":
        return LElement(self.ext, self.x + self.y * self.ext.b_over_c, -self.y)

    def norm(self) -> PAdic:
        ext = self.ext
        return self.x * self.x + ext.b_over_c * self.x * self.y + ext.a_over_c * self.y * self.y

    def trace(self) -> PAdic:
        return self.x * 2 + self.ext.b_over_c * self.y

    def inverse(self) -> "LElement":
        n = self.norm()
        if n.is_zero():
            raise PrecisionError("inverse of a norm-zero element of L")
        inv = n.inverse()
        c = self.conj()
        return LElement(self.ext, c.x * inv, c.y * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ext.element(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def components(self) -> Tuple[PAdic, PAdic]:
        """Images under the two embeddings L -> F (split case)."""
        r1, r2 = self.ext.beta_roots()
        return self.x + self.y * r1, self.x + self.y * r2

    def v_L(self):
        """Normalised valuation of L, with v_L(varpi) = e(L/F)."""
        if self.ext.case == SPLIT:
            z1, z2 = self.components()
            return min(z1.valuation(), z2.valuation())
        n = self.norm()
        if n.is_zero():
            return math.inf
        return self.ext.e * n.valuation() // 2

    def in_PL(self, n: int) -> bool:
        """Membership in P_L^n = p^n o_L."""
        return self.x.in_ideal(n) and self.y.in_ideal(n)

    def is_integral(self) -> bool:
        return self.in_PL(0)

    def is_unit(self) -> bool:
        return self.is_integral() and self.norm().is_unit()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"({self.x!r}) + ({self.y!r})*beta"


def enumerate_integral(ext: QuadExtData, n: int) -> List[LElement]:
    """All x + y*beta with x, y running over canonical residues mod p^n."""
    res = ext.ctx.enumerate_residues(n)
    return [ext.element(x, y) for x in res for y in res]
