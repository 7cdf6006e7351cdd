"""Exact sparse betti tables and degree sequences.

A betti table is stored as a dictionary mapping a cell (p, q) to a positive
rational entry; absent cells are zero.  The column index p is the homological
step and the row index q is the weight, so the entry at (p, q) lives in
internal degree p + q.  Keeping the table sparse and zero-free makes equality
testing a plain dictionary comparison.

All arithmetic is exact: entries are `fractions.Fraction` values and nothing
in this package ever rounds.

Two serialization formats are supported:

  text    one line per nonzero row, ``q: v0 v1 v2 ...`` with "." for a zero
          cell and rationals written "a/b"
  json    ``{"entries": [{"p": 0, "q": 0, "num": "1", "den": "1"}, ...]}``
          sorted by (p, q), numerator/denominator as decimal strings
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Cell = tuple[int, int]
RationalLike = Union[Fraction, int]

_ENTRY_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class NegativeEntryError(ValueError):
    """A table cell that must stay nonnegative went negative."""

    def __init__(self, p: int, q: int, value: Fraction | None = None,
                 line: int | None = None, column: int | None = None):
        self.p = p
        self.q = q
        self.value = value
        self.line = line
        self.column = column
        detail = f" (value {value})" if value is not None else ""
        super().__init__(f"negative entry at cell (p={p}, q={q}){detail}")


class TableParseError(ValueError):
    """Malformed table text, with the position of the offending token."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _coerce(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"table entries must be rational, got {type(value).__name__}")


class BettiTable:
    """Immutable sparse table of nonnegative rationals indexed by (p, q)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Cell, RationalLike] | Iterable[tuple[Cell, RationalLike]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[Cell, Fraction] = {}
        for (p, q), raw in items:
            if not (isinstance(p, int) and isinstance(q, int)) or p < 0 or q < 0:
                raise ValueError(f"cell indices must be nonnegative integers, got ({p}, {q})")
            value = _coerce(raw)
            if value < 0:
                raise NegativeEntryError(p, q, value)
            if value != 0:
                store[(p, q)] = value
        object.__setattr__(self, "_entries", store)

    @property
    def entries(self) -> Mapping[Cell, Fraction]:
        return MappingProxyType(self._entries)

    def entry(self, p: int, q: int) -> Fraction:
        return self._entries.get((p, q), Fraction(0))

    def cells(self) -> list[Cell]:
        return sorted(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        cells = ", ".join(f"({p},{q}): {v}" for (p, q), v in sorted(self._entries.items()))
        return f"BettiTable({{{cells}}})"

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self._entries)
        for cell, value in other._entries.items():
            out[cell] = out.get(cell, Fraction(0)) + value
        return BettiTable(out)

    def add(self, other: "BettiTable") -> "BettiTable":
        return self + other

    def scale(self, factor: RationalLike) -> "BettiTable":
        c = _coerce(factor)
        if c < 0:
            raise ValueError(f"scale factor must be nonnegative, got {c}")
        if c == 0:
            return BettiTable()
        return BettiTable({cell: value * c for cell, value in self._entries.items()})

    def subtract_checked(self, other: "BettiTable") -> "BettiTable":
        """Entrywise difference, raising NegativeEntryError if any cell dips below zero."""
        out = dict(self._entries)
        for (p, q), value in other._entries.items():
            diff = out.get((p, q), Fraction(0)) - value
            if diff < 0:
                raise NegativeEntryError(p, q, diff)
            if diff == 0:
                out.pop((p, q), None)
            else:
                out[(p, q)] = diff
        return BettiTable(out)

    def projective_dimension(self) -> int:
        """Largest column index with a nonzero entry; -1 for the zero table."""
        return max((p for p, _ in self._entries), default=-1)

    def regularity(self) -> int:
        """Largest row index with a nonzero entry; -1 for the zero table."""
        return max((q for _, q in self._entries), default=-1)

    def rows(self) -> list[int]:
        return sorted({q for _, q in self._entries})

    def hilbert_numerator(self) -> list[int]:
        """Coefficients of sum over cells of (-1)^p * entry * t^(p+q).

        Requires every entry to be an integer.  Returns the dense coefficient
        list [c_0, c_1, ...] with trailing zeros trimmed; the zero table gives [].
        """
        coeffs: dict[int, int] = {}
        for (p, q), value in self._entries.items():
            if value.denominator != 1:
                raise ValueError(f"non-integer entry {value} at (p={p}, q={q})")
            sign = -1 if p % 2 else 1
            coeffs[p + q] = coeffs.get(p + q, 0) + sign * value.numerator
        if not coeffs:
            return []
        out = [0] * (max(coeffs) + 1)
        for degree, c in coeffs.items():
            out[degree] = c
        while out and out[-1] == 0:
            out.pop()
        return out

    def cleared(self) -> tuple["BettiTable", int]:
        """Integer-cleared view: (table * m, m) with m the lcm of denominators."""
        m = lcm(*(v.denominator for v in self._entries.values())) if self._entries else 1
        return self.scale(m), m

    # text format

    def to_text(self) -> str:
        lines = []
        for q in self.rows():
            width = max(p for p, qq in self._entries if qq == q)
            cells = []
            for p in range(width + 1):
                value = self._entries.get((p, q))
                cells.append("." if value is None else str(value))
            lines.append(f"{q}: " + " ".join(cells))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "BettiTable":
        entries: dict[Cell, Fraction] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, sep, rest = line.partition(":")
            if not sep:
                raise TableParseError(f"expected 'q: entries', got {line!r}", lineno)
            try:
                q = int(head.strip())
            except ValueError:
                raise TableParseError(f"bad row label {head.strip()!r}", lineno) from None
            if q < 0:
                raise TableParseError(f"negative row label {q}", lineno)
            cursor = raw.index(":") + 1
            for p, token in enumerate(rest.split()):
                cursor = raw.index(token, cursor)
                column = cursor + 1
                cursor += len(token)
                if token == ".":
                    continue
                if not _ENTRY_RE.match(token):
                    raise TableParseError(f"bad entry token {token!r}", lineno, column)
                value = Fraction(token)
                if value < 0:
                    raise NegativeEntryError(p, q, value, line=lineno, column=column)
                if (p, q) in entries:
                    raise TableParseError(f"duplicate cell (p={p}, q={q})", lineno, column)
                if value != 0:
                    entries[(p, q)] = value
        return cls(entries)

    # json format

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {"p": p, "q": q, "num": str(v.numerator), "den": str(v.denominator)}
                for (p, q), v in sorted(self._entries.items())
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, payload: dict) -> "BettiTable":
        if not isinstance(payload, dict) or "entries" not in payload:
            raise ValueError("table JSON must be an object with an 'entries' list")
        entries: dict[Cell, Fraction] = {}
        for item in payload["entries"]:
            p, q = int(item["p"]), int(item["q"])
            value = Fraction(int(item["num"]), int(item["den"]))
            if (p, q) in entries:
                raise ValueError(f"duplicate cell (p={p}, q={q}) in JSON table")
            if value < 0:
                raise NegativeEntryError(p, q, value)
            if value != 0:
                entries[(p, q)] = value
        return cls(entries)

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing integer tuple (d_0, ..., d_l) of a pure resolution.

    The length of the sequence is l, the number of entries minus one.  A
    single-entry sequence (length 0) is the degree sequence of a free module.
    """

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("degree sequence must be nonempty")
        if any(not isinstance(d, int) for d in self.degrees):
            raise ValueError("degrees must be integers")
        for i in range(1, len(self.degrees)):
            if self.degrees[i] <= self.degrees[i - 1]:
                raise ValueError(
                    f"degree sequence must be strictly increasing, got {self.degrees}")

    @property
    def length(self) -> int:
        return len(self.degrees) - 1

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, index: int) -> int:
        return self.degrees[index]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        if not tokens:
            raise ValueError("empty degree sequence")
        try:
            degrees = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"bad degree sequence {text!r}") from None
        return cls(degrees)
