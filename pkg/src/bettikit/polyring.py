"""Multivariate polynomials over the rationals and homogeneous ideals.

A monomial is an exponent tuple (one entry per variable x0, ..., xr) and a
polynomial is a sparse dict {monomial: Fraction}, zero coefficients never
stored.  Monomials of a fixed degree are ordered graded-lex with
x0 > x1 > ... > xr, which here means lexicographically descending exponent
tuples; this fixed order makes every serialized matrix reproducible.

An ideal records its generators with rational coefficients regardless of the
working field; the characteristic (None for exact rationals, a prime p for
GF(p)) tells the Koszul engine how to interpret them.

Ideal file format::

    vars 4
    field gf 32003        # optional; also "field rational"
    x0*x2 - x1^2
    x0*x3 - x1*x2
    x1*x3 - x2^2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]

DEFAULT_PRIME = 32003


class IdealParseError(ValueError):
    """Malformed ideal text, with the position of the offending token."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of the given total degree, lexicographically descending."""
    if num_vars < 1 or degree < 0:
        raise ValueError(f"need num_vars >= 1 and degree >= 0, got {num_vars}, {degree}")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


def mono_degree(mono: Monomial) -> int:
    return sum(mono)


def mono_times_var(mono: Monomial, var: int) -> Monomial:
    return mono[:var] + (mono[var] + 1,) + mono[var + 1:]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def poly_degree(poly: Poly) -> int:
    return max((mono_degree(m) for m in poly), default=-1)


def is_homogeneous(poly: Poly) -> bool:
    degrees = {mono_degree(m) for m in poly}
    return len(degrees) <= 1


@dataclass(frozen=True)
class Ideal:
    """Homogeneous ideal in k[x0, ..., x_{num_vars-1}].

    char_p is None for exact rational arithmetic or an odd prime for GF(p).
    Generators are kept with rational coefficients; reduction happens in the
    engine.  The ideal is used exactly as given: no saturation, no Groebner
    preprocessing.
    """

    num_vars: int
    generators: tuple[Poly, ...]
    char_p: int | None = None

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        if self.char_p is not None and self.char_p < 2:
            raise ValueError(f"characteristic must be a prime >= 2, got {self.char_p}")
        for g in self.generators:
            if not g:
                raise ValueError("zero polynomial cannot generate")
            if any(len(m) != self.num_vars for m in g):
                raise ValueError("generator arity does not match num_vars")
            if not is_homogeneous(g):
                raise ValueError(f"generator {poly_to_str(g)} is not homogeneous")
            if poly_degree(g) < 1:
                raise ValueError("generators must have degree >= 1")

    def field_label(self) -> str:
        return "rational" if self.char_p is None else f"gf {self.char_p}"


_TOKEN_RE = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<coeff>\d+(?:/\d+)?)|(?P<var>x\d+)"
                       r"|(?P<pow>\^)|(?P<mul>\*)|(?P<junk>\S))")


def parse_polynomial(text: str, num_vars: int, line: int = 1) -> Poly:
    """Parse one polynomial in ASCII form, e.g. ``x0*x2 - 2*x1^2 + 1/2*x3^2``."""
    poly: Poly = {}
    pos = 0
    sign = 1
    pending_sign = False  # a sign was read but no term body yet
    term_open = False     # a coefficient or variable has been read for this term
    coeff: Fraction | None = None
    exponents: list[int] | None = None
    last_var: int | None = None   # variable a following '^' applies to
    expect_exponent = False

    def flush(column: int):
        nonlocal sign, term_open, coeff, exponents, last_var
        if not term_open:
            raise IdealParseError("empty term", line, column)
        mono = tuple(exponents) if exponents is not None else (0,) * num_vars
        value = (coeff if coeff is not None else Fraction(1)) * sign
        new = poly.get(mono, Fraction(0)) + value
        if new == 0:
            poly.pop(mono, None)
        else:
            poly[mono] = new
        sign, term_open, coeff, exponents, last_var = 1, False, None, None, None

    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        pos = match.end()
        column = match.start(match.lastgroup) + 1
        token = match.group(match.lastgroup)
        if match.lastgroup == "junk":
            raise IdealParseError(f"unexpected token {token!r}", line, column)
        if expect_exponent:
            if match.lastgroup != "coeff" or "/" in token:
                raise IdealParseError(f"bad exponent {token!r}", line, column)
            value = int(token)
            if value < 1:
                raise IdealParseError(f"exponent must be positive, got {token!r}",
                                      line, column)
            exponents[last_var] += value - 1
            last_var = None
            expect_exponent = False
            continue
        if match.lastgroup == "sign":
            if term_open:
                flush(column)
            if token == "-":
                sign = -sign
            pending_sign = True
            continue
        if match.lastgroup == "mul":
            if not term_open:
                raise IdealParseError("misplaced '*'", line, column)
            continue
        if match.lastgroup == "pow":
            if last_var is None:
                raise IdealParseError("'^' must follow a variable", line, column)
            expect_exponent = True
            continue
        if match.lastgroup == "var":
            index = int(token[1:])
            if index >= num_vars:
                raise IdealParseError(
                    f"unknown variable {token!r} (only x0..x{num_vars - 1} declared)",
                    line, column)
            if exponents is None:
                exponents = [0] * num_vars
            exponents[index] += 1
            last_var = index
            term_open = True
            pending_sign = False
            continue
        # a bare number is a coefficient and must open the term
        if term_open:
            raise IdealParseError(
                f"coefficient {token!r} must precede variables", line, column)
        coeff = Fraction(token)
        term_open = True
        pending_sign = False

    if expect_exponent:
        raise IdealParseError("exponent expected after '^'", line, len(text))
    if term_open:
        flush(len(text))
    elif pending_sign or not poly:
        raise IdealParseError("polynomial ends with a dangling sign or is empty",
                              line, len(text))
    return poly


def parse_ideal(text: str) -> Ideal:
    """Parse an ideal file: a vars header, optional field line, one generator per line."""
    num_vars: int | None = None
    char_p: int | None = None
    field_seen = False
    generators: list[Poly] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if num_vars is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "vars":
                raise IdealParseError(f"expected 'vars N' header, got {line!r}", lineno)
            try:
                num_vars = int(parts[1])
            except ValueError:
                raise IdealParseError(f"bad variable count {parts[1]!r}", lineno) from None
            if num_vars < 1:
                raise IdealParseError("need at least one variable", lineno)
            continue
        if line.startswith("field") and not generators and not field_seen:
            parts = line.split()
            if parts[1:] == ["rational"]:
                char_p = None
            elif len(parts) == 3 and parts[1] == "gf" and parts[2].isdigit():
                char_p = int(parts[2])
            else:
                raise IdealParseError(
                    f"expected 'field rational' or 'field gf P', got {line!r}", lineno)
            field_seen = True
            continue
        poly = parse_polynomial(line, num_vars, line=lineno)
        if not poly:
            raise IdealParseError("generator reduces to zero", lineno)
        if not is_homogeneous(poly):
            raise IdealParseError(
                f"generator {line.strip()!r} is not homogeneous", lineno)
        generators.append(poly)
    if num_vars is None:
        raise IdealParseError("missing 'vars N' header", 1)
    if not field_seen:
        char_p = DEFAULT_PRIME
    return Ideal(num_vars=num_vars, generators=tuple(generators), char_p=char_p)


def poly_to_str(poly: Poly) -> str:
    """Canonical ASCII form: terms in descending monomial order."""
    if not poly:
        return "0"
    pieces = []
    for mono in sorted(poly, key=lambda m: (mono_degree(m), m), reverse=True):
        coeff = poly[mono]
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = str(magnitude) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def ideal_to_str(ideal: Ideal) -> str:
    lines = [f"vars {ideal.num_vars}", f"field {ideal.field_label()}"]
    lines.extend(poly_to_str(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
