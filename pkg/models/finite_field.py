"""
F_p and F_{p^2} = F_p[sqrt(D)] for odd p, with discrete logarithms on
F_{p^2}^x and the conjugacy-class type of a matrix in GL2(F_p).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from sympy import isprime, sqrt_mod
from sympy.ntheory import is_quad_residue

from models.errors import InvalidDataError

logger = logging.getLogger(__name__)

Elt = Tuple[int, int]
FMat = Tuple[int, int, int, int]

SCALAR = "central"
UNIPOTENT = "central-times-unipotent"
ELLIPTIC = "elliptic"
SPLIT_REGULAR = "split"


@dataclass(frozen=True)
class QuadraticResidueField:
    """F_{p^2} as pairs (u, v) = u + v*sqrt(D) with D a fixed non-square."""

    p: int
    D: int

    @property
    def order(self) -> int:
        return self.p * self.p

    def mul(self, x: Elt, y: Elt) -> Elt:
        p = self.p
        return (x[0] * y[0] + self.D * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p

    def pow(self, x: Elt, n: int) -> Elt:
        result, base = (1, 0), x
        n %= self.order - 1
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frobenius(self, x: Elt) -> Elt:
        return x[0] % self.p, (-x[1]) % self.p

    def norm(self, x: Elt) -> int:
        return (x[0] * x[0] - self.D * x[1] * x[1]) % self.p

    def units(self) -> Iterator[Elt]:
        p = self.p
        for u in range(p):
            for v in range(p):
                if (u, v) != (0, 0):
                    yield u, v

    def embed(self, a: int) -> Elt:
        return a % self.p, 0


@lru_cache(maxsize=16)
def residue_field_ext(p: int) -> QuadraticResidueField:
    if p == 2 or not isprime(p):
        raise InvalidDataError(f"F_{{p^2}} is only built for odd primes, got {p}")
    D = next(n for n in range(2, p) if not is_quad_residue(n, p))
    return QuadraticResidueField(p, D)


@lru_cache(maxsize=16)
def generator_and_logs(p: int) -> Tuple[Elt, Dict[Elt, int]]:
    """A generator of F_{p^2}^x and the discrete logarithm table."""
    field = residue_field_ext(p)
    order = field.order - 1
    for g in field.units():
        logs: Dict[Elt, int] = {}
        cur = (1, 0)
        for k in range(order):
            if cur in logs:
                break
            logs[cur] = k
            cur = field.mul(cur, g)
        if len(logs) == order:
            logger.debug("F_%d^2 generated by %s", p, g)
            return g, logs
    raise InvalidDataError(f"no generator of F_{p}^2 found")


def dlog(p: int, x: Elt) -> int:
    return generator_and_logs(p)[1][(x[0] % p, x[1] % p)]


# -- GL2(F_p) ------------------------------------------------------------------------

def fmat_det(m: FMat, p: int) -> int:
    a, b, c, d = m
    return (a * d - b * c) % p


def class_type(m: FMat, p: int) -> Tuple[str, Optional[Elt]]:
    """
    Conjugacy-class type of m in GL2(F_p) with an eigenvalue in F_{p^2}:
    scalar z, z times a nontrivial unipotent, elliptic y, or split regular.
    """
    a, b, c, d = (x % p for x in m)
    if fmat_det((a, b, c, d), p) == 0:
        raise InvalidDataError("matrix is singular over F_p")
    tr = (a + d) % p
    det = (a * d - b * c) % p
    half = tr * pow(2, -1, p) % p
    disc = (half * half - det) % p
    if disc == 0:
        if b == 0 and c == 0 and a == d:
            return SCALAR, (a, 0)
        return UNIPOTENT, (half, 0)
    if is_quad_residue(disc, p):
        return SPLIT_REGULAR, None
    field = residue_field_ext(p)
    s2 = disc * pow(field.D, -1, p) % p
    roots = sqrt_mod(s2, p, all_roots=True)
    return ELLIPTIC, (half, int(min(roots)))
