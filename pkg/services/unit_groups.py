"""
Finite abelian quotients of L^x and their character groups.

Two quotients are used:

* ``ProjectiveUnitGroup``: L^x / F^x (1 + p^M o_L), the home of characters
  Omega that are trivial on F^x.
* ``FullUnitGroup``: o_L^x / (1 + p^M o_L), used when Omega restricts to a
  nontrivial central character.

Group structure is found generically: a generator search builds exponent
vectors for every element, and characters are enumerated by solving the
(triangular) relations between the generators.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Generic, Hashable, List, Sequence, Tuple, TypeVar

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from config import Config
from models.errors import CapacityError, InvalidDataError, PrecisionError
from models.quadratic import INERT, RAMIFIED, SPLIT, LElement, QuadExtData

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
Angles = Tuple[Fraction, ...]


class FiniteAbelianGroup(Generic[K]):
    """
    A finite abelian group given by its elements and its law.

    Args:
        elements: every element, in canonical order.
        op:       the group law.
        identity: neutral element.
        cap:      refuse groups larger than this.
    """

    def __init__(self, elements: Sequence[K], op: Callable[[K, K], K], identity: K,
                 cap: int = Config.CAPACITY_CAP):
        if len(elements) > cap:
            raise CapacityError(len(elements), cap)
        self.elements = list(elements)
        self.op = op
        self.identity = identity
        self.generators: List[K] = []
        self.rel_orders: List[int] = []
        # g_j^{k_j} = product of earlier generators with these exponents
        self.relations: List[Tuple[int, ...]] = []
        self.exponents: Dict[K, Tuple[int, ...]] = {identity: ()}
        self._decompose()

    def _decompose(self):
        target = len(self.elements)
        for g in self.elements:
            if len(self.exponents) == target:
                break
            if g in self.exponents:
                continue
            n = len(self.generators)
            k, power = 1, g
            while power not in self.exponents:
                power = self.op(power, g)
                k += 1
            relation = self.exponents[power] + (0,) * (n - len(self.exponents[power]))
            extended: Dict[K, Tuple[int, ...]] = {}
            for h, vec in self.exponents.items():
                vec = vec + (0,) * (n - len(vec))
                cur = h
                extended[cur] = vec + (0,)
                for i in range(1, k):
                    cur = self.op(cur, g)
                    extended[cur] = vec + (i,)
            self.exponents = extended
            self.generators.append(g)
            self.rel_orders.append(k)
            self.relations.append(relation)
        if len(self.exponents) != target:
            raise InvalidDataError(
                f"element list is not closed under the law ({len(self.exponents)} vs {target})"
            )
        width = len(self.generators)
        self.exponents = {h: v + (0,) * (width - len(v)) for h, v in self.exponents.items()}
        logger.debug("Decomposed group of order %d with relative orders %s", target, self.rel_orders)

    @property
    def order(self) -> int:
        return len(self.elements)

    def invariants(self) -> List[int]:
        """Invariant factors from the Smith normal form of the relation matrix."""
        n = len(self.generators)
        if n == 0:
            return []
        rows = []
        for j, (k, rel) in enumerate(zip(self.rel_orders, self.relations)):
            row = [-e for e in rel] + [0] * (n - len(rel))
            row[j] += k
            rows.append(row)
        snf = smith_normal_form(Matrix(rows), domain=ZZ)
        return [abs(int(snf[i, i])) for i in range(n) if abs(int(snf[i, i])) != 1]

    def characters(self) -> List[Angles]:
        """All characters, as angles on the generators, in canonical order."""
        chars: List[Angles] = [()]
        for k, rel in zip(self.rel_orders, self.relations):
            nxt = []
            for theta in chars:
                base = sum((e * t for e, t in zip(rel, theta)), Fraction(0))
                for t in range(k):
                    nxt.append(theta + (((base + t) / k) % 1,))
            chars = nxt
        return chars

    def angle(self, theta: Angles, element: K) -> Fraction:
        vec = self.exponents[element]
        return sum((e * t for e, t in zip(vec, theta)), Fraction(0)) % 1


class ResidueL:
    """Arithmetic of o_L / p^M o_L on integer coordinate pairs (x, y) = x + y*beta."""

    def __init__(self, ext: QuadExtData, M: int):
        if M > ext.ctx.N - 1:
            raise PrecisionError(f"depth {M} needs working precision above {M}", needed=M + 1)
        self.ext = ext
        self.M = M
        self.p = ext.p
        self.mod = ext.p ** M
        self.A = ext.a_over_c.residue(M)
        self.B = ext.b_over_c.residue(M)

    def mul(self, u: Tuple[int, int], v: Tuple[int, int]) -> Tuple[int, int]:
        x1, y1 = u
        x2, y2 = v
        yy = y1 * y2
        return (x1 * x2 - self.A * yy) % self.mod, (x1 * y2 + x2 * y1 + self.B * yy) % self.mod

    def norm_residue(self, u: Tuple[int, int]) -> int:
        x, y = u
        return (x * x + self.B * x * y + self.A * y * y) % self.p

    def is_unit(self, u: Tuple[int, int]) -> bool:
        return self.norm_residue(u) != 0

    def of(self, t: LElement) -> Tuple[int, int]:
        return t.x.residue(self.M), t.y.residue(self.M)


def split_off_uniformizers(t: LElement) -> Tuple[int, int, LElement]:
    """Write t = varpi^k * varpi_L^e * u with u in o_L^x and e in {0, 1}."""
    ext = t.ext
    if ext.case == SPLIT:
        raise InvalidDataError("split tori are handled through pairs of characters of F^x")
    if t.x.is_zero() and t.y.is_zero():
        raise PrecisionError("torus element indistinguishable from 0")
    k = min(t.x.valuation(), t.y.valuation())
    prim = LElement(ext, t.x.shift(-k), t.y.shift(-k))
    e = 0
    if ext.case == RAMIFIED and not prim.norm().is_unit():
        prim = prim / ext.uniformizer_L()
        e = 1
    return k, e, prim


class ProjectiveUnitGroup:
    """L^x / F^x (1 + p^M o_L) with elements keyed by (parity, kind, s)."""

    def __init__(self, ext: QuadExtData, M: int, cap: int = Config.CAPACITY_CAP):
        if ext.case == SPLIT:
            raise InvalidDataError("split tori are handled through pairs of characters of F^x")
        self.ext = ext
        self.M = M
        self.ring = ResidueL(ext, M)
        size = (2 if ext.case == RAMIFIED else 1) * (ext.q ** M + (ext.q ** (M - 1) if ext.case == INERT else 0))
        if size > cap:
            raise CapacityError(size, cap)
        self.eps = self.ring.of(ext.eps_ramified()) if ext.case == RAMIFIED else None
        self.group = FiniteAbelianGroup(self._enumerate(), self.mul, (0, "x", 0), cap)

    def _enumerate(self) -> List[Tuple[int, str, int]]:
        ring, p, mod = self.ring, self.ext.p, self.ring.mod
        keys = [(0, "x", s) for s in range(mod) if ring.is_unit((1, s))]
        keys += [(0, "y", s) for s in range(0, mod, p) if ring.is_unit((s, 1))]
        if self.ext.case == RAMIFIED:
            keys += [(1, kind, s) for _, kind, s in list(keys)]
        return keys

    def key_of_unit(self, u: Tuple[int, int], parity: int = 0) -> Tuple[int, str, int]:
        x, y = u
        p, mod = self.ext.p, self.ring.mod
        if x % p:
            return parity, "x", (y * pow(x, -1, mod)) % mod
        return parity, "y", (x * pow(y, -1, mod)) % mod

    @staticmethod
    def representative(key: Tuple[int, str, int]) -> Tuple[int, int]:
        _, kind, s = key
        return (1, s) if kind == "x" else (s, 1)

    def mul(self, k1, k2):
        u = self.ring.mul(self.representative(k1), self.representative(k2))
        parity = k1[0] + k2[0]
        if parity >= 2:
            u = self.ring.mul(u, self.eps)
            parity -= 2
        return self.key_of_unit(u, parity)

    def key_of(self, t: LElement) -> Tuple[int, str, int]:
        _, e, u = split_off_uniformizers(t)
        return self.key_of_unit(self.ring.of(u), e)

    def unit_keys(self) -> List[Tuple[int, str, int]]:
        return [k for k in self.group.elements if k[0] == 0]


class FullUnitGroup:
    """o_L^x / (1 + p^M o_L) with elements keyed by residue pairs."""

    def __init__(self, ext: QuadExtData, M: int, cap: int = Config.CAPACITY_CAP):
        if ext.case == SPLIT:
            raise InvalidDataError("split tori are handled through pairs of characters of F^x")
        self.ext = ext
        self.M = M
        self.ring = ResidueL(ext, M)
        mod = self.ring.mod
        if mod * mod > cap:
            raise CapacityError(mod * mod, cap)
        elements = [(x, y) for x in range(mod) for y in range(mod) if self.ring.is_unit((x, y))]
        identity = (1 % mod, 0)
        self.group = FiniteAbelianGroup(elements, self.ring.mul, identity, cap)

    def key_of_unit(self, u: LElement) -> Tuple[int, int]:
        return self.ring.of(u)


@lru_cache(maxsize=64)
def projective_group(ext: QuadExtData, M: int) -> ProjectiveUnitGroup:
    return ProjectiveUnitGroup(ext, M)


@lru_cache(maxsize=16)
def full_group(ext: QuadExtData, M: int) -> FullUnitGroup:
    return FullUnitGroup(ext, M)
