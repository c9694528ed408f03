"""Chern class calculus and Euler characteristics for bundles on F.

Twists, duals and tensor products go through the Chern character, so
there is a single mechanism for all of them.  Euler characteristics are
available two ways: the closed Riemann-Roch expression in the Chern
classes (:func:`chi_rr`) and the Hirzebruch-Riemann-Roch integral of
``ch * td`` (:func:`chi_hrr`).  They are meant to agree on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .chow import (
    F,
    H,
    ONE,
    XI,
    XI2,
    ZERO,
    ChowClass,
    as_fraction,
    curve,
    degree,
    divisor,
    intersect,
)
from .cohomology import LineBundle

Pair = Tuple[int, int]
RationalPair = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes c1, c2, c3 of a bundle on F."""

    rank: int
    c1: ChowClass = ZERO
    c2: ChowClass = ZERO
    c3: ChowClass = ZERO

    def __post_init__(self):
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        for k, c in ((1, self.c1), (2, self.c2), (3, self.c3)):
            if not c.is_homogeneous(k):
                raise ValueError(f"c{k} must be homogeneous of degree {k}, got {c}")

    @property
    def alpha(self) -> Pair:
        return (self.c1.xi, self.c1.f)

    @property
    def beta(self) -> RationalPair:
        return (self.c2.xi2, self.c2.f2)


Rank2Data = ChernData


@dataclass(frozen=True)
class TangentData:
    c1_T: ChowClass
    c2_T: ChowClass


# c2 of the tangent bundle is 6*f*xi, stored as 6*xi^2
TANGENT = TangentData(c1_T=2 * H, c2_T=6 * XI2)


def rank2(alpha, beta, c3=0) -> ChernData:
    """Rank 2 data with c1 = a1*xi + a2*f and c2 = b1*xi^2 + b2*f^2."""
    return ChernData(
        2,
        divisor(*alpha),
        curve(as_fraction(beta[0]), as_fraction(beta[1])),
        ChowClass(pt=c3),
    )


def line_bundle_data(L: LineBundle) -> ChernData:
    return ChernData(1, L.chow)


def integral(value) -> int:
    """Return ``value`` as an int, refusing to round."""
    value = as_fraction(value)
    if value.denominator != 1:
        raise ValueError(f"expected an integer, got {value}")
    return value.numerator


# -- Riemann-Roch ---------------------------------------------------------

def chi_rr(B: ChernData) -> Fraction:
    """Euler characteristic from the closed Riemann-Roch formula on F."""
    c1, c2 = B.c1, B.c2
    h = H
    omega2 = TANGENT.c2_T
    return (
        B.rank
        + Fraction(1, 6) * (intersect(c1, c1, c1) - 3 * intersect(c1, c2) + 3 * degree(B.c3))
        + Fraction(1, 2) * (intersect(c1, c1, h) - 2 * intersect(c2, h))
        + Fraction(1, 12) * (4 * intersect(c1, h, h) + intersect(omega2, c1))
    )


def todd_class() -> ChowClass:
    c1, c2 = TANGENT.c1_T, TANGENT.c2_T
    return ONE + Fraction(1, 2) * c1 + Fraction(1, 12) * (c1 * c1 + c2) + Fraction(1, 24) * (c1 * c2)


def chern_character(B: ChernData) -> ChowClass:
    c1, c2, c3 = B.c1, B.c2, B.c3
    return (
        B.rank * ONE
        + c1
        + Fraction(1, 2) * (c1 * c1 - 2 * c2)
        + Fraction(1, 6) * (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3)
    )


def from_chern_character(ch: ChowClass) -> ChernData:
    """Invert :func:`chern_character` with Newton's identities."""
    rank = integral(ch.c0)
    p1 = ch.part(1)
    p2 = 2 * ch.part(2)
    p3 = 6 * ch.part(3)
    c1 = p1
    c2 = Fraction(1, 2) * (c1 * p1 - p2)
    c3 = Fraction(1, 3) * (c2 * p1 - c1 * p2 + p3)
    return ChernData(rank, c1, c2, c3)


def chi_hrr(B: ChernData) -> Fraction:
    """Euler characteristic as the degree of ch(B) * td(F)."""
    return degree(chern_character(B) * todd_class())


# -- operations on Chern data ---------------------------------------------

def _ch_dual(ch: ChowClass) -> ChowClass:
    return ch.part(0) - ch.part(1) + ch.part(2) - ch.part(3)


def dual(B: ChernData) -> ChernData:
    return from_chern_character(_ch_dual(chern_character(B)))


def tensor(A: ChernData, B: ChernData) -> ChernData:
    return from_chern_character(chern_character(A) * chern_character(B))


def twist(B: ChernData, L: LineBundle) -> ChernData:
    """B tensor L for rank 2 data."""
    if B.rank != 2:
        raise ValueError(f"twist is defined for rank 2 data, got rank {B.rank}")
    return tensor(B, line_bundle_data(L))


def zero_locus_class(alpha: Pair, beta, delta: Pair) -> ChowClass:
    """Class of the codimension 2 part E of a zero locus with divisorial part D.

    This is c2(E(-D)) for D = delta1*xi + delta2*f.
    """
    return twist(rank2(alpha, beta), LineBundle(-delta[0], -delta[1])).c2


def positivity_filters(class_E: ChowClass) -> Tuple[bool, bool, bool]:
    """(E.f >= 0, E.(xi - f) >= 0, E.xi >= 0) for a curve class E."""
    if not class_E.is_homogeneous(2):
        raise ValueError(f"expected a degree 2 class, got {class_E}")
    return (
        intersect(F, class_E) >= 0,
        intersect(XI - F, class_E) >= 0,
        intersect(XI, class_E) >= 0,
    )


def dual_twist(alpha: Pair, beta, t: int) -> Tuple[Pair, RationalPair]:
    """(alpha, beta) of E^dual(t*h) for rank 2 data E."""
    D = twist(dual(rank2(alpha, beta)), LineBundle(t, t))
    return (integral(D.c1.xi), integral(D.c1.f)), (D.c2.xi2, D.c2.f2)


def invariant_c1c2_hc2(alpha: Pair, beta) -> Tuple[Fraction, Fraction]:
    """The intersection numbers c1*c2 and h*c2."""
    a1, a2 = alpha
    b1, b2 = as_fraction(beta[0]), as_fraction(beta[1])
    return (a1 + a2) * b1 + a1 * b2, 2 * b1 + b2


def end_bundle_chi(alphaA: Pair, betaA, alphaB: Pair, betaB) -> Fraction:
    """chi(B tensor A^dual) for rank 2 bundles A and B."""
    A = rank2(alphaA, betaA)
    B = rank2(alphaB, betaB)
    return chi_hrr(tensor(B, dual(A)))


def h1_from_chi(chi, h0: int, h2: int, h3: int) -> int:
    """Solve chi = h0 - h1 + h2 - h3 for h1."""
    return integral(h0 + h2 - h3 - as_fraction(chi))
