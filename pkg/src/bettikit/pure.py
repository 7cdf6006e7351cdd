"""Pure diagrams from degree sequences.

A strictly increasing degree sequence d = (d_0, ..., d_l) determines, up to
scale, the betti numbers of a pure resolution.  The normalized diagram pi(d)
puts 1 in column 0 (at row d_0) and

    kappa_p = prod over k >= 1, k != p of (d_k - d_0) / |d_k - d_p|

in column p at row d_p - p.  Its multiplicity is

    e(d) = (1 / l!) * prod over k >= 1 of (d_k - d_0).

Also provided: the extremal families behind the first-strand bounds and the
closed-form bound values they realize.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .tables import BettiTable, DegreeSequence


@dataclass(frozen=True)
class PureDiagram:
    """A degree sequence with its normalized betti table and multiplicity."""

    d: DegreeSequence
    table: BettiTable
    multiplicity: Fraction

    def integer_cleared(self) -> tuple[BettiTable, int]:
        """The diagram scaled by the lcm of its denominators, with the scale."""
        return self.table.cleared()


def multiplicity(d: DegreeSequence) -> Fraction:
    """e(d) = (1/l!) * prod(d_k - d_0) over k >= 1."""
    product = 1
    for k in range(1, len(d)):
        product *= d[k] - d[0]
    return Fraction(product, factorial(d.length))


def hk_diagram(d: DegreeSequence | tuple[int, ...]) -> PureDiagram:
    """Normalized pure diagram pi(d) with one entry per column at row d_p - p."""
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(tuple(d))
    if d[0] < 0:
        raise ValueError(
            f"degree sequence {d} would place column 0 in negative row {d[0]}")
    entries = {(0, d[0]): Fraction(1)}
    for p in range(1, len(d)):
        numerator = 1
        denominator = 1
        for k in range(1, len(d)):
            if k == p:
                continue
            numerator *= d[k] - d[0]
            denominator *= abs(d[k] - d[p])
        entries[(p, d[p] - p)] = Fraction(numerator, denominator)
    return PureDiagram(d=d, table=BettiTable(entries), multiplicity=multiplicity(d))


def family_deq(e: int, q: int) -> DegreeSequence:
    """The length-e sequence (0, q+1, q+2, ..., q+e) saturating the first-strand bounds."""
    if e < 1 or q < 1:
        raise ValueError(f"need e >= 1 and q >= 1, got e={e}, q={q}")
    return DegreeSequence((0,) + tuple(range(q + 1, q + e + 1)))


def family_tilde(e: int, q: int) -> DegreeSequence:
    """The length-e sequence (0, q+1, ..., q+e-1, 2q+e) behind the next-to-maximal bound."""
    if e < 2:
        raise ValueError(f"need e >= 2 for a split tail, got e={e}")
    if q < 1:
        raise ValueError(f"need q >= 1, got q={q}")
    return DegreeSequence((0,) + tuple(range(q + 1, q + e)) + (2 * q + e,))


def kappa_max(p: int, q: int, e: int) -> int:
    """Upper bound C(p+q-1, q) * C(e+q, p+q) for a first-strand entry at (p, q).

    Vanishes for p > e (the bound's vanishing range) and for p = 0 when q >= 1.
    """
    if e < 1 or q < 1 or p < 0:
        raise ValueError(f"need e >= 1, q >= 1, p >= 0, got p={p}, q={q}, e={e}")
    return comb(p + q - 1, q) * comb(e + q, p + q)


def kappa_next_max(p: int, e: int) -> int:
    """Next-to-maximal bound p * C(e+1, p+1) - C(e, p-1) for row 1; zero for p >= e."""
    if e < 2 or p < 1:
        raise ValueError(f"need e >= 2 and p >= 1, got p={p}, e={e}")
    if p >= e:
        return 0
    return p * comb(e + 1, p + 1) - comb(e, p - 1)
