"""The hyperplane section S = F ∩ H, a del Pezzo surface of degree 7.

Pic(S) is free on the pull-back ``l`` of a line of P^2 and the two exceptional
curves ``e1``, ``e2``.  Divisors are written ``a*l - b1*e1 - b2*e2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import F, F2, H, XI, XI2, ChowClass, curve, intersect
from .cohomology import LineBundle, binom2, cohomology_table


@dataclass(frozen=True)
class SurfaceDivisor:
    a: int
    b1: int = 0
    b2: int = 0

    def __add__(self, other):
        return SurfaceDivisor(self.a + other.a, self.b1 + other.b1, self.b2 + other.b2)

    def __sub__(self, other):
        return SurfaceDivisor(self.a - other.a, self.b1 - other.b1, self.b2 - other.b2)

    def __neg__(self):
        return SurfaceDivisor(-self.a, -self.b1, -self.b2)

    def __str__(self):
        # coefficients of l, e1, e2 in the signed form a*l - b1*e1 - b2*e2
        out = ""
        for c, name in ((self.a, "l"), (-self.b1, "e1"), (-self.b2, "e2")):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            out += sign + ("" if abs(c) == 1 else str(abs(c))) + name
        return out or "0"


LINE = SurfaceDivisor(1, 0, 0)
E1 = SurfaceDivisor(0, -1, 0)
E2 = SurfaceDivisor(0, 0, -1)
HYPERPLANE_S = SurfaceDivisor(3, 1, 1)
CANONICAL_S = SurfaceDivisor(-3, -1, -1)


def intersect_s(C: SurfaceDivisor, D: SurfaceDivisor) -> int:
    return C.a * D.a - C.b1 * D.b1 - C.b2 * D.b2


def chi_s(C: SurfaceDivisor) -> int:
    """Riemann-Roch on S: C.(C - K_S)/2 + 1."""
    twice = intersect_s(C, C - CANONICAL_S)
    if twice % 2:
        raise ArithmeticError(f"odd C.(C-K) for {C}; the intersection form is broken")
    return twice // 2 + 1


def push_to_chow(C: SurfaceDivisor) -> ChowClass:
    """Class in A(F) of a divisor on S; l -> xi^2+f^2 and e_i -> f^2."""
    return C.a * (XI2 + F2) - (C.b1 + C.b2) * F2


def restrict_line_bundle(L: LineBundle, u: int) -> SurfaceDivisor:
    """Divisor on S cut by L, for the caller-chosen split u of the e-coefficients.

    The class h*L in A(F) only fixes b1 + b2 = 2*l1, so ``u`` cannot be
    recovered from L alone.
    """
    return SurfaceDivisor(2 * L.l1 + L.l2, u, 2 * L.l1 - u)


def restriction_h0(L: LineBundle) -> int:
    """h^1(F, L(-h)) - h^1(F, L), which is h^0(S, L|S) when h^0(L) = h^1(S, L|S) = 0."""
    return cohomology_table(L.twist(-1)).h1 - cohomology_table(L).h1


def restriction_h0_closed_form(L: LineBundle) -> int:
    l1, l2 = L.l1, L.l2
    return binom2(l1 + l2 + 1) + binom2(l1 + l2 + 2) - binom2(l2 + 1)


def enumerate_line_classes(bound: int = 6) -> list[ChowClass]:
    """Degree-2 classes of degree 1 meeting xi and f non-negatively.

    Searches e1*xi^2 + e2*f^2 with |e1|, |e2| <= bound; the constraints
    already force 0 <= e1 <= 1, so any bound >= 1 gives the full answer.
    """
    found = []
    for e1 in range(-bound, bound + 1):
        for e2 in range(-bound, bound + 1):
            E = curve(e1, e2)
            if intersect(H, E) != 1:
                continue
            if intersect(F, E) >= 0 and intersect(XI, E) >= 0:
                found.append(E)
    return found


def degree_on_s(C: SurfaceDivisor) -> Fraction:
    """Degree with respect to h, computed in A(F)."""
    return intersect(H, push_to_chow(C))
