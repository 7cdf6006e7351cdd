"""Graded betti numbers of S/I as Koszul cohomology, by exact linear algebra.

For the quotient M = S/I of the polynomial ring by a homogeneous ideal, the
betti number at (p, q) is the dimension of the middle cohomology of

    wedge^{p+1} V (x) M_{q-1}  -->  wedge^p V (x) M_q  -->  wedge^{p-1} V (x) M_{q+1}

with the differential

    delta(e_{i_1} ^ ... ^ e_{i_p} (x) f)
        = sum_j (-1)^{j+1} e_{i_1} ^ ... e-hat_{i_j} ... ^ e_{i_p} (x) (x_{i_j} * f mod I).

Each graded piece M_q is realized concretely: take all monomials of degree q,
row-reduce the span of {m * g : g a generator, deg(m g) = q}, and keep the
non-pivot ("standard") monomials as a basis.  Everything is exact; the field
is the rationals or GF(p) as recorded on the ideal, and no float appears
anywhere.

Wedge basis vectors are strictly increasing index tuples in lex order; the
M_q basis is the standard monomials in descending graded-lex order.  This
fixes every matrix reproducibly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .linalg import SparseMatrix, rref
from .polyring import (Ideal, Monomial, Poly, mono_mul, mono_times_var,
                       monomials_of_degree, poly_degree)
from .tables import BettiTable


@dataclass(frozen=True)
class GradedPiece:
    """The degree-q slice M_q = S_q / I_q with a reduction rule into it.

    `basis` is every monomial of S_q, `standard` the non-pivot ones that give
    a basis of M_q, and `rewrite` sends each pivot monomial to its normal form
    (a combination of standard monomials).  dim M_q = dim S_q - rank I_q.
    """

    q: int
    basis: tuple[Monomial, ...]
    standard: tuple[Monomial, ...]
    rewrite: dict[Monomial, dict[Monomial, Fraction | int]]

    @property
    def dim(self) -> int:
        return len(self.standard)

    @property
    def ideal_dim(self) -> int:
        return len(self.rewrite)

    def normal_form(self, poly: Poly, char_p: int | None) -> dict[Monomial, Fraction | int]:
        """Reduce a degree-q polynomial modulo I_q, in standard-monomial coordinates."""
        out: dict[Monomial, Fraction | int] = {}
        for mono, raw in poly.items():
            coeff = _to_field(Fraction(raw), char_p) if char_p is not None else raw
            rule = self.rewrite.get(mono)
            if rule is None:
                out[mono] = out.get(mono, 0) + coeff
            else:
                for target, factor in rule.items():
                    out[target] = out.get(target, 0) + coeff * factor
        if char_p is None:
            return {m: v for m, v in out.items() if v != 0}
        return {m: v % char_p for m, v in out.items() if v % char_p != 0}


def _to_field(value: Fraction, char_p: int | None) -> Fraction | int:
    if char_p is None:
        return value
    den = value.denominator % char_p
    if den == 0:
        raise ValueError(
            f"coefficient {value} has denominator divisible by the characteristic {char_p}")
    return (value.numerator % char_p) * pow(den, char_p - 2, char_p) % char_p


def graded_piece(ideal: Ideal, q: int) -> GradedPiece:
    """Row-reduce I_q inside S_q and package the quotient basis."""
    if q < 0:
        raise ValueError(f"degree must be nonnegative, got {q}")
    basis = monomials_of_degree(ideal.num_vars, q)
    index = {mono: i for i, mono in enumerate(basis)}
    rows = []
    for g in ideal.generators:
        dg = poly_degree(g)
        if dg > q:
            continue
        for multiplier in monomials_of_degree(ideal.num_vars, q - dg):
            row = {}
            for mono, coeff in g.items():
                row[index[mono_mul(multiplier, mono)]] = _to_field(coeff, ideal.char_p)
            rows.append(row)
    pivots = rref(rows, ideal.char_p)
    standard = tuple(m for i, m in enumerate(basis) if i not in pivots)
    rewrite: dict[Monomial, dict[Monomial, Fraction | int]] = {}
    for lead, row in pivots.items():
        rule = {}
        for col, value in row.items():
            if col == lead:
                continue
            rule[basis[col]] = (-value) if ideal.char_p is None else (-value) % ideal.char_p
        rewrite[basis[lead]] = rule
    return GradedPiece(q=q, basis=basis, standard=standard, rewrite=rewrite)


def _wedge_basis(num_vars: int, p: int) -> list[tuple[int, ...]]:
    return list(combinations(range(num_vars), p))


def koszul_differential(ideal: Ideal, p: int, q: int,
                        pieces: dict[int, GradedPiece] | None = None) -> SparseMatrix:
    """Matrix of wedge^p V (x) M_q -> wedge^{p-1} V (x) M_{q+1}, rows = domain basis."""
    if p < 0 or q < 0:
        raise ValueError(f"need p >= 0 and q >= 0, got p={p}, q={q}")
    n = ideal.num_vars
    if pieces is None:
        pieces = {}
    for degree in (q, q + 1):
        if degree not in pieces:
            pieces[degree] = graded_piece(ideal, degree)
    source, target = pieces[q], pieces[q + 1]
    domain_wedges = _wedge_basis(n, p)
    codomain_wedges = _wedge_basis(n, p - 1) if p >= 1 else []
    nrows = len(domain_wedges) * source.dim
    ncols = len(codomain_wedges) * target.dim
    if nrows == 0 or ncols == 0:
        return SparseMatrix(nrows, ncols)
    wedge_index = {w: i for i, w in enumerate(codomain_wedges)}
    target_index = {m: i for i, m in enumerate(target.standard)}
    # normal form of x_var * mono, shared across all wedges containing var
    shifted: dict[tuple[int, Monomial], dict[Monomial, Fraction | int]] = {}
    for var in range(n):
        for mono in source.standard:
            shifted[(var, mono)] = target.normal_form(
                {mono_times_var(mono, var): Fraction(1)}, ideal.char_p)
    rows = []
    for wedge in domain_wedges:
        for mono in source.standard:
            row: dict[int, Fraction | int] = {}
            for j, var in enumerate(wedge):
                sign = 1 if j % 2 == 0 else -1
                base = wedge_index[wedge[:j] + wedge[j + 1:]] * target.dim
                for m2, value in shifted[(var, mono)].items():
                    col = base + target_index[m2]
                    row[col] = row.get(col, 0) + sign * value
            if ideal.char_p is None:
                row = {c: v for c, v in row.items() if v != 0}
            else:
                row = {c: v % ideal.char_p for c, v in row.items() if v % ideal.char_p != 0}
            rows.append(row)
    return SparseMatrix(nrows, ncols, rows)


def betti_number(ideal: Ideal, p: int, q: int,
                 pieces: dict[int, GradedPiece] | None = None,
                 rank_cache: dict[tuple[int, int], int] | None = None) -> int:
    """kappa_{p,q} = dim ker(delta_{p,q}) - rank(delta_{p+1,q-1})."""
    if p < 0 or q < 0:
        raise ValueError(f"need p >= 0 and q >= 0, got p={p}, q={q}")
    n = ideal.num_vars
    if p > n:
        return 0
    if pieces is None:
        pieces = {}

    def rank_of(pp: int, qq: int) -> int:
        if pp > n or qq < 0:
            return 0
        if rank_cache is not None and (pp, qq) in rank_cache:
            return rank_cache[(pp, qq)]
        value = koszul_differential(ideal, pp, qq, pieces).rank(ideal.char_p)
        if rank_cache is not None:
            rank_cache[(pp, qq)] = value
        return value

    if q not in pieces:
        pieces[q] = graded_piece(ideal, q)
    domain_dim = comb(n, p) * pieces[q].dim
    kappa = domain_dim - rank_of(p, q) - rank_of(p + 1, q - 1)
    assert kappa >= 0, f"negative cohomology dimension at (p={p}, q={q})"
    return kappa


def betti_table(ideal: Ideal, q_max: int) -> tuple[BettiTable, bool]:
    """All kappa_{p,q} for p <= num_vars, q <= q_max, plus a completeness flag.

    The flag is advisory: it is True when rows q_max and q_max - 1 are both
    empty, a heuristic cutoff for having passed the regularity.  It never
    silently truncates; callers who need more rows raise q_max.
    """
    if q_max < 1:
        raise ValueError(f"need q_max >= 1, got {q_max}")
    pieces = {q: graded_piece(ideal, q) for q in range(q_max + 2)}
    rank_cache: dict[tuple[int, int], int] = {}
    entries = {}
    for q in range(q_max + 1):
        for p in range(ideal.num_vars + 1):
            kappa = betti_number(ideal, p, q, pieces, rank_cache)
            if kappa:
                entries[(p, q)] = Fraction(kappa)
    table = BettiTable(entries)
    complete = not any(q in (q_max, q_max - 1) for _, q in entries)
    return table, complete


def hilbert_consistency(ideal: Ideal, table: BettiTable, q_max: int) -> bool:
    """Euler-characteristic cross-check of a computed table.

    Compares the alternating sum over the table with the numerator series
    (1 - t)^{num_vars} * sum_q dim M_q t^q, coefficient by coefficient through
    degree q_max.
    """
    lhs = [0] * (q_max + 1)
    for (p, q), value in table.entries.items():
        if p + q <= q_max:
            if value.denominator != 1:
                raise ValueError(f"non-integer entry {value} at (p={p}, q={q})")
            lhs[p + q] += (-1 if p % 2 else 1) * value.numerator
    dims = [graded_piece(ideal, q).dim for q in range(q_max + 1)]
    n = ideal.num_vars
    rhs = []
    for j in range(q_max + 1):
        total = 0
        for i in range(min(j, n) + 1):
            total += (-1 if i % 2 else 1) * comb(n, i) * dims[j - i]
        rhs.append(total)
    return lhs == rhs
