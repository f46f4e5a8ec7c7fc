"""
Irreducible admissible representations of GL(2, F) described by their
inducing data, with the L- and epsilon factors of their twists as exact
rational functions of X = q^(-s).
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional

from models.errors import InvalidDataError, UnsupportedKindError
from models.ratfunc import RatFunc, Root
from services.characters import MultChar, e, epsilon_factor, trivial_char

logger = logging.getLogger(__name__)

UNRAM_PS = "unramified-PS"
PS_RAM = "PS-ram"
STEINBERG = "steinberg"
TRIVIAL_L = "trivial-L"
RAMIFIED_PS = "ramified-PS"
STEINBERG_RAM = "steinberg-ram"

KINDS = (UNRAM_PS, PS_RAM, STEINBERG, TRIVIAL_L, RAMIFIED_PS, STEINBERG_RAM)
PS_KINDS = (UNRAM_PS, PS_RAM, RAMIFIED_PS)
STEINBERG_KINDS = (STEINBERG, STEINBERG_RAM)

HALF = Fraction(1, 2)


def char_root(chi: MultChar) -> Root:
    """chi(varpi) = e(pi_angle) q^(-shift) as an exact root, chi unramified."""
    if not chi.is_unramified():
        raise InvalidDataError("only an unramified character has a value on varpi alone")
    return Root(chi.pi_angle, -chi.shift)


@dataclass(frozen=True)
class ReprSpec:
    """
    A representation of GL(2, F).

    Args:
        kind:      one of KINDS.
        p:         residue characteristic.
        chi1:      first inducing character (the twisting character for Steinberg kinds).
        chi2:      second inducing character (principal series only).
        c:         conductor exponent, only stored for trivial-L.
        eps_angle: angle of epsilon(1/2, pi), only stored for trivial-L.
        omega:     central character, only stored for trivial-L.
    """

    kind: str
    p: int
    chi1: Optional[MultChar] = None
    chi2: Optional[MultChar] = None
    c: int = 0
    eps_angle: Fraction = Fraction(0)
    omega: Optional[MultChar] = None

    @property
    def q(self) -> int:
        return self.p

    @property
    def cond(self) -> int:
        if self.kind in PS_KINDS:
            return self.chi1.cond + self.chi2.cond
        if self.kind == STEINBERG:
            return 1
        if self.kind == STEINBERG_RAM:
            return 2 * self.chi1.cond
        return self.c

    @property
    def central(self) -> MultChar:
        if self.kind in PS_KINDS:
            return self.chi1 * self.chi2
        if self.kind in STEINBERG_KINDS:
            return self.chi1 * self.chi1
        return self.omega or trivial_char(self.p)

    def induced_pair(self):
        """(chi1, chi2) with pi a constituent of chi1 x chi2."""
        if self.kind in PS_KINDS:
            return self.chi1, self.chi2
        if self.kind in STEINBERG_KINDS:
            return self.chi1.twist(HALF), self.chi1.twist(-HALF)
        raise UnsupportedKindError(self.kind, "induced model")

    def describe(self) -> str:
        if self.kind == TRIVIAL_L:
            return f"{self.kind}(c={self.c}, eps={self.eps_angle})"
        parts = [f"{self.kind}"]
        for name, chi in (("chi1", self.chi1), ("chi2", self.chi2)):
            if chi is not None:
                parts.append(f"{name}=(c={chi.cond}, {chi.gen_angle}, {chi.pi_angle}, {chi.shift})")
        return " ".join(parts)


# -- constructors -------------------------------------------------------------

def _check_irreducible(chi1: MultChar, chi2: MultChar):
    ratio = chi1 * chi2.inverse()
    if ratio.is_unramified() and ratio.pi_angle == 0 and abs(ratio.shift) == 1:
        raise InvalidDataError("chi1 chi2^-1 = |.|^(+-1): the principal series is reducible")


def principal_series(chi1: MultChar, chi2: MultChar) -> ReprSpec:
    """chi1 x chi2, classified by the ramification of the two characters."""
    if chi1.p != chi2.p:
        raise InvalidDataError("characters over different fields")
    _check_irreducible(chi1, chi2)
    if chi1.cond > chi2.cond:
        chi1, chi2 = chi2, chi1
    if chi2.cond == 0:
        kind = UNRAM_PS
    elif chi1.cond == 0:
        kind = PS_RAM
    else:
        kind = RAMIFIED_PS
    return ReprSpec(kind, chi1.p, chi1, chi2)


def steinberg(chi: MultChar) -> ReprSpec:
    return ReprSpec(STEINBERG if chi.is_unramified() else STEINBERG_RAM, chi.p, chi)


def trivial_l(p: int, c: int, eps_angle=0, omega: Optional[MultChar] = None) -> ReprSpec:
    """A representation all of whose unramified twists have L(s) = 1 and conductor p^c."""
    if c < 2:
        raise InvalidDataError("L(s, pi) = 1 forces c(pi) >= 2")
    if omega is not None and not omega.is_unramified():
        raise InvalidDataError("trivial-L data needs an unramified central character")
    return ReprSpec(TRIVIAL_L, p, c=c, eps_angle=Fraction(eps_angle) % 1, omega=omega)


def contragredient(pi: ReprSpec) -> ReprSpec:
    if pi.kind in PS_KINDS:
        return replace(pi, chi1=pi.chi1.inverse(), chi2=pi.chi2.inverse())
    if pi.kind in STEINBERG_KINDS:
        return replace(pi, chi1=pi.chi1.inverse())
    # epsilon(1/2, pi) epsilon(1/2, pi~) = omega(-1) = 1 for unramified omega
    omega = pi.omega.inverse() if pi.omega is not None else None
    return replace(pi, eps_angle=(-pi.eps_angle) % 1, omega=omega)


# -- L- and epsilon factors ---------------------------------------------------------

def _twist(chi: MultChar, lam: Optional[MultChar]) -> MultChar:
    return chi if lam is None else chi * lam


def l_roots(pi: ReprSpec, lam: Optional[MultChar] = None) -> List[Root]:
    """The roots r with L(s, pi x lam) = prod 1/(1 - r X)."""
    roots: List[Root] = []
    if pi.kind in PS_KINDS:
        for chi in (pi.chi1, pi.chi2):
            t = _twist(chi, lam)
            if t.is_unramified():
                roots.append(char_root(t))
    elif pi.kind in STEINBERG_KINDS:
        t = _twist(pi.chi1, lam)
        if t.is_unramified():
            roots.append(char_root(t) * Root(0, -HALF))
    return roots


def l_factor(pi: ReprSpec, lam: Optional[MultChar] = None) -> RatFunc:
    """L(s, pi x lam)."""
    return RatFunc.l_factor(pi.q, l_roots(pi, lam))


def gl1_epsilon(chi: MultChar) -> RatFunc:
    """epsilon(s, chi, psi) = epsilon(1/2, chi_0) q^(c/2 - c t) X^c for chi = chi_0 |.|^t."""
    q = chi.q
    if chi.is_unramified():
        return RatFunc.constant(q, 1)
    c = chi.cond
    eps = epsilon_factor(chi.unitary_part())
    coeff = eps * float(q) ** (c / 2) * float(q) ** (-c * float(chi.shift))
    return RatFunc.monomial(q, coeff, c)


def epsilon(pi: ReprSpec, lam: Optional[MultChar] = None) -> RatFunc:
    """epsilon(s, pi x lam, psi) as a monomial in X."""
    q = pi.q
    if pi.kind in PS_KINDS:
        return gl1_epsilon(_twist(pi.chi1, lam)) * gl1_epsilon(_twist(pi.chi2, lam))
    if pi.kind in STEINBERG_KINDS:
        t = _twist(pi.chi1, lam)
        if t.is_unramified():
            return RatFunc.monomial(q, -t.at_pi(1) * float(q) ** 0.5, 1)
        return gl1_epsilon(t.twist(HALF)) * gl1_epsilon(t.twist(-HALF))
    if lam is not None and not lam.is_unramified():
        raise UnsupportedKindError(pi.kind, "epsilon factor of a ramified twist")
    lam_pi = lam.at_pi(pi.c) if lam is not None else 1
    return RatFunc.monomial(q, lam_pi * e(pi.eps_angle) * float(q) ** (pi.c / 2), pi.c)


def epsilon_half(pi: ReprSpec) -> complex:
    """epsilon(1/2, pi, psi)."""
    return epsilon(pi).at_s(HALF)
