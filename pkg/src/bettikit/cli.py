"""Command-line interface.

Subcommands: pure, decompose, betti, check, fixtures, selftest.  JSON output
(--out json / --format json) is the machine contract, text is for humans.
Exit codes: 0 success / no violation, 1 malformed input or failed run,
2 bound violation, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .bounds import (Assumptions, check_first_strand, check_Ndm, check_next_to_max,
                     degree_bounds, first_nontrivial_strand)
from .decompose import (IterationLimitExceeded, NotInConeError, bs_decompose,
                        multiplicity_from_decomposition)
from .fixtures import FIXTURES, run_fixture
from .koszul import betti_table
from .polyring import IdealParseError, parse_ideal
from .pure import hk_diagram
from .selftest import run_all as run_sweeps
from .tables import BettiTable, DegreeSequence

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_table(path: str) -> BettiTable:
    text = _read_file(path)
    if text.lstrip().startswith("{"):
        table = BettiTable.from_json(text)
    else:
        table = BettiTable.from_text(text)
    return _normalize(table)


def _normalize(table: BettiTable) -> BettiTable:
    # shift rows so the minimum generator degree (column 0) sits at (0, 0)
    generator_rows = [q for p, q in table.entries if p == 0]
    if not generator_rows:
        return table
    shift = min(generator_rows)
    if shift <= 0 or any(q < shift for _, q in table.entries):
        return table
    print(f"note: rows shifted down by {shift} so the first generator sits at (0, 0)",
          file=sys.stderr)
    return BettiTable({(p, q - shift): v for (p, q), v in table.entries.items()})


def _diagnostic(path: str, exc: Exception) -> str:
    line = getattr(exc, "line", None)
    column = getattr(exc, "column", None)
    message = getattr(exc, "message", None) or str(exc)
    if line is not None:
        return f"{path}:{line}:{column or 1}: {message}"
    return f"{path}: {exc}"


def cmd_pure(args) -> int:
    try:
        d = DegreeSequence.parse(args.degrees)
        diagram = hk_diagram(d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    table = diagram.table
    scale = None
    if args.clear_denominators:
        table, scale = diagram.integer_cleared()
    if args.out == "json":
        payload = table.to_json_dict()
        payload["degrees"] = list(d.degrees)
        payload["multiplicity"] = str(diagram.multiplicity)
        if scale is not None:
            payload["cleared_by"] = scale
        print(json.dumps(payload))
    else:
        if scale is not None:
            print(f"cleared by: {scale}")
        sys.stdout.write(table.to_text())
        print(f"multiplicity: {diagram.multiplicity}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        table = _load_table(args.table_file)
    except (OSError, ValueError) as exc:
        print(_diagnostic(args.table_file, exc), file=sys.stderr)
        return EXIT_INPUT
    try:
        decomposition = bs_decompose(table)
    except (NotInConeError, IterationLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    terms = decomposition.sorted_terms()
    multiplicity = None
    if args.codim is not None:
        short = [d for _, d in terms if d.length < args.codim]
        if short:
            print(f"warning: {len(short)} term(s) shorter than codimension {args.codim}",
                  file=sys.stderr)
        multiplicity = multiplicity_from_decomposition(decomposition, args.codim)
    if args.format == "json":
        payload = {"terms": [{"coefficient": str(c), "degrees": list(d.degrees)}
                             for c, d in terms]}
        if multiplicity is not None:
            payload["multiplicity"] = str(multiplicity)
        print(json.dumps(payload))
    else:
        for coefficient, d in terms:
            print(f"{coefficient}  {d}")
        if multiplicity is not None:
            print(f"multiplicity (length {args.codim} part): {multiplicity}")
    return EXIT_OK


def cmd_betti(args) -> int:
    try:
        ideal = parse_ideal(_read_file(args.ideal_file))
    except (OSError, IdealParseError, ValueError) as exc:
        print(_diagnostic(args.ideal_file, exc), file=sys.stderr)
        return EXIT_INPUT
    if args.field is not None:
        label = args.field.replace(" ", "")
        if label == "rational":
            char_p = None
        elif label.startswith("gf") and label[2:].isdigit():
            char_p = int(label[2:])
        else:
            print(f"error: bad field {args.field!r}, expected 'rational' or 'gfP'",
                  file=sys.stderr)
            return EXIT_INPUT
        ideal = replace(ideal, char_p=char_p)
    table, complete = betti_table(ideal, args.qmax)
    if args.out == "json":
        payload = table.to_json_dict()
        payload["field"] = ideal.field_label()
        payload["qmax"] = args.qmax
        payload["complete"] = complete
        print(json.dumps(payload))
    else:
        print(f"field: {ideal.field_label()}")
        print(f"complete: {'true' if complete else 'false'}")
        sys.stdout.write(table.to_text())
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        table = _load_table(args.table_file)
    except (OSError, ValueError) as exc:
        print(_diagnostic(args.table_file, exc), file=sys.stderr)
        return EXIT_INPUT
    try:
        assumptions = Assumptions(codim_e=args.codim, nd_q=args.assert_nd,
                                  lgp=args.assert_lgp)
        strand = first_nontrivial_strand(table)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.q is not None and strand is not None and args.q != strand:
        print(f"error: --q {args.q} does not match the first nontrivial strand {strand}",
              file=sys.stderr)
        return EXIT_INPUT
    q = args.q if args.q is not None else strand
    lines = []
    payload: dict = {"codim": args.codim, "nd_q": args.assert_nd, "lgp": args.assert_lgp}
    report = None
    try:
        if args.next_to_max:
            report = check_next_to_max(table, assumptions)
        elif q is not None:
            report = check_first_strand(table, assumptions, q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if report is None:
        lines.append("no nontrivial strand: nothing to check")
    else:
        lines.append(f"first nontrivial strand: q = {report.q_strand}")
        lines.append(f"assumptions: codim e = {args.codim}, "
                     f"nd(q) {'asserted' if args.assert_nd else 'not asserted'}, "
                     f"lgp {'asserted' if args.assert_lgp else 'not asserted'}")
        lines.append("  p   observed   bound   attains-max")
        for c in report.per_p:
            flag = "yes" if c.attains_max else ("EXCEEDS" if c.observed > c.bound else "no")
            lines.append(f"  {c.p:<3} {str(c.observed):<10} {c.bound:<7} {flag}")
        verdict = report.verdict if report.verdict_p is None else (
            f"{report.verdict}(p={report.verdict_p})")
        lines.append(f"verdict: {verdict}")
        if report.degree_predicted is not None:
            lines.append(f"predicted degree: {report.degree_predicted}")
        if report.shape_ok is not None:
            lines.append(f"pure resolution shape: {'holds' if report.shape_ok else 'fails'}")
        for note in report.notes:
            lines.append(f"note: {note}")
        payload["report"] = report.to_json_dict()
    if q is not None:
        lower, upper = degree_bounds(args.codim, q)
        if args.assert_nd:
            lines.append(f"degree >= {lower} (asserted vanishing hypothesis)")
            payload["degree_lower"] = lower
        if check_Ndm(table, q + 1, args.codim):
            lines.append(f"degree <= {upper} (table satisfies the N_{{{q + 1},{args.codim}}} "
                         "vanishing pattern)")
            payload["degree_upper"] = upper
    if args.ndm is not None:
        d, m = args.ndm
        holds = check_Ndm(table, d, m)
        lines.append(f"property N_{{{d},{m}}}: {'holds' if holds else 'fails'}")
        payload[f"ndm_{d}_{m}"] = holds
    if args.out == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(lines))
    if report is not None and report.has_violation():
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_fixtures(args) -> int:
    failures = 0
    for entry in FIXTURES:
        problems = run_fixture(entry)
        status = "PASS" if not problems else "FAIL"
        if problems:
            failures += 1
        detail = f" [{entry.filename}]"
        print(f"{status} {entry.name}{detail}")
        for problem in problems:
            print(f"     {problem}")
    print(f"{len(FIXTURES) - failures}/{len(FIXTURES)} fixtures passed")
    return EXIT_OK if failures == 0 else EXIT_INPUT


def cmd_selftest(args) -> int:
    failed = 0
    for name, cases, failures in run_sweeps():
        if failures:
            failed += 1
            print(f"FAIL {name} ({cases} cases): {failures[0]}")
        else:
            print(f"PASS {name} ({cases} cases)")
    return EXIT_OK if failed == 0 else EXIT_INPUT


def _parse_ndm(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected D,M")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers D,M") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bettikit",
                     description="Exact betti tables, pure diagrams, and strand bounds")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_pure = sub.add_parser("pure", help="print the normalized pure diagram of a degree sequence")
    p_pure.add_argument("degrees", help="comma-separated degree sequence, e.g. 0,3,4,5")
    p_pure.add_argument("--clear-denominators", action="store_true")
    p_pure.add_argument("--out", choices=["text", "json"], default="text")
    p_pure.set_defaults(func=cmd_pure)

    p_dec = sub.add_parser("decompose", help="decompose a betti table into pure diagrams")
    p_dec.add_argument("table_file")
    p_dec.add_argument("--format", "--out", dest="format", choices=["text", "json"],
                       default="text")
    p_dec.add_argument("--codim", type=int, default=None,
                       help="minimal permitted length for the multiplicity sum")
    p_dec.set_defaults(func=cmd_decompose)

    p_betti = sub.add_parser("betti", help="betti table of an ideal's quotient ring")
    p_betti.add_argument("ideal_file")
    p_betti.add_argument("--qmax", type=int, required=True)
    p_betti.add_argument("--field", default=None,
                         help="override the input file's field: 'rational' or 'gfP'")
    p_betti.add_argument("--out", choices=["text", "json"], default="text")
    p_betti.set_defaults(func=cmd_betti)

    p_check = sub.add_parser("check", help="check a table against the strand bounds")
    p_check.add_argument("table_file")
    p_check.add_argument("--codim", type=int, required=True)
    p_check.add_argument("--q", type=int, default=None)
    p_check.add_argument("--assert-nd", action="store_true",
                         help="assert the vanishing-on-sections hypothesis")
    p_check.add_argument("--assert-lgp", action="store_true",
                         help="assert linearly general position of a general section")
    p_check.add_argument("--next-to-max", action="store_true",
                         help="check the next-to-maximal bound for row 1")
    p_check.add_argument("--ndm", type=_parse_ndm, default=None, metavar="D,M",
                         help="also report the N_{D,M} vanishing pattern")
    p_check.add_argument("--out", choices=["text", "json"], default="text")
    p_check.set_defaults(func=cmd_check)

    p_fix = sub.add_parser("fixtures", help="list and run the bundled fixture corpus")
    p_fix.set_defaults(func=cmd_fixtures)

    p_self = sub.add_parser("selftest", help="run the exhaustive small-range sweeps")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
