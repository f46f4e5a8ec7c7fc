"""2x2 matrices over Q_p."""

from fractions import Fraction
from typing import Union

from models.errors import PrecisionError
from models.padic import LocalFieldCtx, PAdic

Scalar = Union[int, Fraction, PAdic]


class Mat2:
    __slots__ = ("ctx", "a", "b", "c", "d", "_det")

    def __init__(self, ctx: LocalFieldCtx, a: Scalar, b: Scalar, c: Scalar, d: Scalar):
        self.ctx = ctx
        self.a, self.b, self.c, self.d = (x if isinstance(x, PAdic) else ctx.element(x) for x in (a, b, c, d))
        self._det = None

    # -- named matrices -------------------------------------------------

    @classmethod
    def identity(cls, ctx: LocalFieldCtx) -> "Mat2":
        return cls(ctx, 1, 0, 0, 1)

    @classmethod
    def diag(cls, ctx: LocalFieldCtx, x: Scalar, y: Scalar = 1) -> "Mat2":
        return cls(ctx, x, 0, 0, y)

    @classmethod
    def diag_pi(cls, ctx: LocalFieldCtx, r: int) -> "Mat2":
        """diag(varpi^r, 1)."""
        return cls(ctx, ctx.uniformizer(r), 0, 0, 1)

    @classmethod
    def weyl(cls, ctx: LocalFieldCtx) -> "Mat2":
        """w = [[0, 1], [-1, 0]]."""
        return cls(ctx, 0, 1, -1, 0)

    @classmethod
    def upper(cls, ctx: LocalFieldCtx, x: Scalar) -> "Mat2":
        """n(x) = [[1, x], [0, 1]]."""
        return cls(ctx, 1, x, 0, 1)

    @classmethod
    def lower(cls, ctx: LocalFieldCtx, x: Scalar) -> "Mat2":
        """nbar(x) = [[1, 0], [x, 1]]."""
        return cls(ctx, 1, 0, x, 1)

    @classmethod
    def atkin_lehner(cls, ctx: LocalFieldCtx) -> "Mat2":
        """[[0, 1], [varpi, 0]]."""
        return cls(ctx, 0, 1, ctx.uniformizer(), 0)

    # -- arithmetic -----------------------------------------------------

    @property
    def det(self) -> PAdic:
        if self._det is None:
            self._det = self.a * self.d - self.b * self.c
        return self._det

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.ctx,
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, (int, Fraction, PAdic)):
            return Mat2(self.ctx, self.a * other, self.b * other, self.c * other, self.d * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, PAdic)):
            return self * other
        return NotImplemented

    def inverse(self) -> "Mat2":
        det = self.det
        if det.is_zero():
            raise PrecisionError("matrix is not invertible at working precision")
        inv = det.inverse()
        return Mat2(self.ctx, self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def transpose(self) -> "Mat2":
        return Mat2(self.ctx, self.a, self.c, self.b, self.d)

    def entries(self):
        return self.a, self.b, self.c, self.d

    # -- valuations -----------------------------------------------------

    def min_valuation(self):
        return min(x.valuation() for x in self.entries())

    def is_integral(self) -> bool:
        return all(x.in_ideal(0) for x in self.entries())

    def in_GL2o(self) -> bool:
        return self.is_integral() and not self.det.is_zero() and self.det.is_unit()

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def __repr__(self):
        return f"Mat2([[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]])"


def is_upper_triangular(g: Mat2) -> bool:
    return g.c.is_zero()
