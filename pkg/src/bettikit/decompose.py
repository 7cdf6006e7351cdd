"""Greedy decomposition of a betti table into pure diagrams.

Every table in the cone spanned by pure diagrams is a unique positive
rational combination of diagrams along a chain of degree sequences.  The
peeling loop below recovers it: read off the top strand (the minimal degree
sequence d with d_p = p + min row of column p), subtract the largest multiple
of pi(d) that keeps all cells nonnegative, repeat.  The subtracted multiple
is exactly the minimum over the strand cells of table / diagram, so each pass
zeroes at least one cell and the loop terminates.

Tables outside the cone surface as NotInConeError: either a column gap or a
non-increasing strand while reading the top strand, or a cell driven negative
during subtraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pure import hk_diagram, multiplicity
from .tables import BettiTable, DegreeSequence, NegativeEntryError


class NoColumnError(ValueError):
    """Column p is empty although a later column is not."""

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"column {p} has no entries but the table extends past it")


class StrandNotIncreasingError(ValueError):
    """The top strand fails to increase strictly at position p."""

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"top strand is not strictly increasing at position {p}")


class NotInConeError(ValueError):
    """The table is not a positive rational combination of pure diagrams."""


class IterationLimitExceeded(RuntimeError):
    """Defensive cap on peeling passes was hit."""


@dataclass(frozen=True)
class Decomposition:
    """Ordered terms (coefficient, degree sequence), in peeling order."""

    terms: tuple[tuple[Fraction, DegreeSequence], ...]

    def __post_init__(self):
        seen = set()
        for coefficient, d in self.terms:
            if coefficient <= 0:
                raise ValueError(f"coefficient {coefficient} for {d} is not positive")
            if d.degrees in seen:
                raise ValueError(f"duplicate degree sequence {d}")
            seen.add(d.degrees)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def sorted_terms(self) -> list[tuple[Fraction, DegreeSequence]]:
        """Display order: by length, then lexicographically by degrees."""
        return sorted(self.terms, key=lambda term: (term[1].length, term[1].degrees))

    def reconstruct(self) -> BettiTable:
        total = BettiTable()
        for coefficient, d in self.terms:
            total = total + hk_diagram(d).table.scale(coefficient)
        return total


def top_strand(table: BettiTable) -> DegreeSequence:
    """Minimal degree sequence of a table: d_p = p + min{q : (p, q) nonzero}."""
    if table.is_zero():
        raise ValueError("top strand of an empty table is undefined")
    width = table.projective_dimension()
    min_row: dict[int, int] = {}
    for p, q in table.entries:
        if p not in min_row or q < min_row[p]:
            min_row[p] = q
    degrees = []
    for p in range(width + 1):
        if p not in min_row:
            raise NoColumnError(p)
        degrees.append(p + min_row[p])
    for p in range(1, len(degrees)):
        if degrees[p] <= degrees[p - 1]:
            raise StrandNotIncreasingError(p)
    return DegreeSequence(tuple(degrees))


def bs_decompose(table: BettiTable, max_iterations: int | None = None) -> Decomposition:
    """Peel a table into its positive combination of pure diagrams.

    Raises NotInConeError when the table leaves the cone (gap in a column,
    non-increasing strand, or a negative cell during subtraction), and
    IterationLimitExceeded if the defensive pass cap is hit.
    """
    if table.is_zero():
        raise ValueError("cannot decompose an empty table")
    if max_iterations is None:
        max_iterations = 10 * (table.projective_dimension() + 1) * (table.regularity() + 1)
        max_iterations = max(max_iterations, 1)
    terms: list[tuple[Fraction, DegreeSequence]] = []
    work = table
    passes = 0
    while not work.is_zero():
        passes += 1
        if passes > max_iterations:
            raise IterationLimitExceeded(
                f"peeling did not terminate within {max_iterations} passes")
        try:
            d = top_strand(work)
        except (NoColumnError, StrandNotIncreasingError) as exc:
            raise NotInConeError(f"table is outside the cone: {exc}") from exc
        diagram = hk_diagram(d)
        coefficient = min(
            work.entry(p, d[p] - p) / diagram.table.entry(p, d[p] - p)
            for p in range(len(d)))
        try:
            work = work.subtract_checked(diagram.table.scale(coefficient))
        except NegativeEntryError as exc:
            raise NotInConeError(f"table left the cone while peeling {d}: {exc}") from exc
        terms.append((coefficient, d))
    return Decomposition(tuple(terms))


def multiplicity_from_decomposition(decomposition: Decomposition, codim_length: int) -> Fraction:
    """Sum of x_i * e(d^i) over the terms whose sequence has the minimal length.

    `codim_length` is that minimal permitted length (the codimension for a
    coordinate ring); terms of other lengths do not contribute.
    """
    if codim_length < 0:
        raise ValueError(f"codim length must be nonnegative, got {codim_length}")
    total = Fraction(0)
    for coefficient, d in decomposition:
        if d.length == codim_length:
            total += coefficient * multiplicity(d)
    return total


def chain_check(decomposition: Decomposition) -> bool:
    """True iff consecutive terms have non-increasing length and compare termwise."""
    terms = decomposition.terms
    for (_, a), (_, b) in zip(terms, terms[1:]):
        if a.length < b.length:
            return False
        if any(a[k] > b[k] for k in range(len(b))):
            return False
    return True
