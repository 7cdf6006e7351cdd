"""Bundled fixture corpus: inputs with their exactly-known outputs.

Table fixtures carry an expected decomposition; ideal fixtures carry the
expected betti table, are computed over both fields (any disagreement is
reported verbatim, never reconciled), and are fed through the decomposition
to confirm cone membership.  The FIXTURES_DIR environment variable points the
loader at an alternative directory of the same file names.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources

from .bounds import Assumptions, check_first_strand, check_next_to_max, first_nontrivial_strand
from .decompose import NotInConeError, bs_decompose, multiplicity_from_decomposition
from .koszul import betti_table, hilbert_consistency
from .polyring import parse_ideal
from .tables import BettiTable

ENV_DIR = "FIXTURES_DIR"

Term = tuple[Fraction, tuple[int, ...]]


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    filename: str
    qmax: int | None = None
    expected_table: tuple[tuple[tuple[int, int], Fraction], ...] | None = None
    expected_complete: bool | None = None
    expected_terms: tuple[Term, ...] | None = None
    codim: int | None = None
    expected_multiplicity: Fraction | None = None
    expected_verdict: str | None = None
    next_to_max: bool = False
    check_fields_agree: bool = False
    notes: str = ""

    def is_ideal(self) -> bool:
        return self.filename.endswith(".ideal")


def _table(cells: dict[tuple[int, int], int | Fraction]) -> tuple:
    return tuple(sorted((cell, Fraction(v)) for cell, v in cells.items()))


def _pure_first_strand(e: int, kappas: dict[int, int]) -> dict[tuple[int, int], int]:
    cells = {(0, 0): 1}
    for p, v in kappas.items():
        cells[(p, 1)] = v
    return cells


FIXTURES: tuple[FixtureEntry, ...] = (
    FixtureEntry(
        name="veronese-projection",
        filename="veronese_projection.table",
        expected_terms=(
            (Fraction(1, 10), (0, 3, 4, 5, 6)),
            (Fraction(7, 30), (0, 3, 4, 5)),
            (Fraction(2, 3), (0, 3, 4)),
        ),
        codim=2,
        expected_multiplicity=Fraction(4),
        expected_verdict="Violation",
        notes="second row exceeds the strand bound at every column",
    ),
    FixtureEntry(
        name="cubic-conic-union",
        filename="cubic_conic_union.table",
        expected_terms=(
            (Fraction(2, 3), (0, 2, 3, 4)),
            (Fraction(2, 15), (0, 2, 3, 5)),
            (Fraction(1, 10), (0, 2, 4, 5)),
            (Fraction(1, 10), (0, 3, 4, 5)),
        ),
        codim=3,
        expected_multiplicity=Fraction(5),
        expected_verdict="Violation",
        next_to_max=True,
        notes="next-to-maximal bound fails at p = 2 without general position",
    ),
    FixtureEntry(
        name="twisted-cubic",
        filename="twisted_cubic.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(2, {1: 3, 2: 2})),
        expected_complete=True,
        codim=2,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="veronese-p2",
        filename="veronese_p2.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(3, {1: 6, 2: 8, 3: 3})),
        expected_complete=True,
        codim=3,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="rnc-conic",
        filename="rnc_e1.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(1, {1: 1})),
        expected_complete=True,
        codim=1,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="rnc-quartic",
        filename="rnc_e3.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(3, {1: 6, 2: 8, 3: 3})),
        expected_complete=True,
        codim=3,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="rnc-quintic",
        filename="rnc_e4.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(4, {1: 10, 2: 20, 3: 15, 4: 4})),
        expected_complete=True,
        codim=4,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="rnc-sextic",
        filename="rnc_e5.ideal",
        qmax=3,
        expected_table=_table(_pure_first_strand(5, {1: 15, 2: 40, 3: 45, 4: 24, 5: 5})),
        expected_complete=True,
        codim=5,
        expected_verdict="AllMax",
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="ci-two-quadrics",
        filename="ci_two_quadrics.ideal",
        qmax=4,
        expected_table=_table({(0, 0): 1, (1, 1): 2, (2, 2): 1}),
        expected_complete=True,
        codim=2,
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="ci-quadric-cubic",
        filename="ci_quadric_cubic.ideal",
        qmax=5,
        expected_table=_table({(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1}),
        expected_complete=True,
        codim=2,
        check_fields_agree=True,
    ),
    FixtureEntry(
        name="hypersurface-cubic",
        filename="hypersurface_cubic.ideal",
        qmax=4,
        expected_table=_table({(0, 0): 1, (1, 2): 1}),
        expected_complete=True,
        codim=1,
        check_fields_agree=True,
    ),
)


def fixture_path(filename: str) -> str:
    override = os.environ.get(ENV_DIR)
    if override:
        return os.path.join(override, filename)
    return str(resources.files(__package__) / "fixtures" / filename)


def load_text(filename: str) -> str:
    with open(fixture_path(filename), "r", encoding="utf-8") as fh:
        return fh.read()


def run_fixture(entry: FixtureEntry) -> list[str]:
    """Run one fixture through the pipeline; returns discrepancy strings."""
    problems: list[str] = []
    if entry.is_ideal():
        ideal = parse_ideal(load_text(entry.filename))
        table, complete = betti_table(ideal, entry.qmax)
        expected = BettiTable(dict(entry.expected_table))
        if table != expected:
            problems.append(f"table mismatch: got {table!r}, expected {expected!r}")
        if entry.expected_complete is not None and complete != entry.expected_complete:
            problems.append(f"completeness flag {complete}, expected {entry.expected_complete}")
        if not hilbert_consistency(ideal, table, entry.qmax):
            problems.append("hilbert consistency failed")
        if entry.check_fields_agree:
            other = replace(ideal, char_p=None if ideal.char_p else 32003)
            other_table, _ = betti_table(other, entry.qmax)
            if other_table != table:
                problems.append(
                    f"field disagreement: {ideal.field_label()} gives {table!r}, "
                    f"{other.field_label()} gives {other_table!r}")
    else:
        table = BettiTable.from_text(load_text(entry.filename))
    try:
        decomposition = bs_decompose(table)
    except NotInConeError as exc:
        problems.append(f"table not in cone: {exc}")
        return problems
    if entry.expected_terms is not None:
        got = {d.degrees: c for c, d in decomposition.terms}
        expected_terms = {degrees: c for c, degrees in entry.expected_terms}
        if got != expected_terms:
            problems.append(f"decomposition mismatch: got {sorted(got.items())}")
    if decomposition.reconstruct() != table:
        problems.append("decomposition does not reconstruct the table")
    if entry.codim is not None and entry.expected_multiplicity is not None:
        got_mult = multiplicity_from_decomposition(decomposition, entry.codim)
        if got_mult != entry.expected_multiplicity:
            problems.append(f"multiplicity {got_mult}, expected {entry.expected_multiplicity}")
    if entry.expected_verdict is not None and entry.codim is not None:
        assumptions = Assumptions(codim_e=entry.codim)
        if entry.next_to_max:
            report = check_next_to_max(table, assumptions)
        else:
            strand = first_nontrivial_strand(table)
            report = check_first_strand(table, assumptions, strand)
        if report.verdict != entry.expected_verdict:
            problems.append(f"verdict {report.verdict}, expected {entry.expected_verdict}")
    return problems


def run_all() -> list[tuple[FixtureEntry, list[str]]]:
    return [(entry, run_fixture(entry)) for entry in FIXTURES]
