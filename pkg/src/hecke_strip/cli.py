"""Command-line front end.

Subcommands: tableaux, matrix, invariants, verify, wedderburn-lift.  Output
is compact JSON by default (deterministic: fixed key order, canonical
rational-function strings); --pretty switches to aligned human-readable
text.  Exit codes: 0 success / verification passed, 1 a verification sweep
reported counterexamples, 2 usage error (malformed shapes, bad indices, bad
specialization points).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from . import seminormal, stripcat
from .linalg import QMatrix
from .ratfun import DenominatorVanishes, RationalFunction
from .shapes import (
    SkewShape,
    enumerate_skew_tableaux,
    format_partition,
    parse_partition,
)


class UsageError(Exception):
    """Bad command-line input; maps to exit code 2."""


def _parse_shape(inner_text: str, outer_text: str) -> SkewShape:
    try:
        inner = parse_partition(inner_text)
        outer = parse_partition(outer_text)
        return SkewShape(inner, outer)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_point(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}") from exc
    if x == 0:
        raise UsageError("specialization point must be nonzero")
    return x


def _entry_json(entry: RationalFunction, at: Fraction | None):
    if at is None:
        return entry.to_json()
    try:
        return str(entry.evaluate(at))
    except DenominatorVanishes as exc:
        raise UsageError(f"{exc}") from exc


def _matrix_json(m: QMatrix, at: Fraction | None) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[_entry_json(m[i, j], at) for j in range(m.cols)] for i in range(m.rows)],
    }


def _emit(payload: dict, args, pretty_lines) -> None:
    if args.pretty:
        text = "\n".join(pretty_lines(payload)) + "\n"
    else:
        text = json.dumps(payload, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _tableau_lines(tableau_json: dict) -> list[str]:
    inner = tableau_json["shape"]["inner"]
    outer = tableau_json["shape"]["outer"]
    entry = {(r, c): str(k + 1) for k, (r, c) in enumerate(tableau_json["boxes"])}
    width = max((len(v) for v in entry.values()), default=1)
    lines = []
    for r, row_len in enumerate(outer, start=1):
        inner_len = inner[r - 1] if r - 1 < len(inner) else 0
        cells = ["." * width if c <= inner_len else entry[(r, c)].rjust(width)
                 for c in range(1, row_len + 1)]
        lines.append(" ".join(cells))
    return lines


# -- subcommand handlers -----------------------------------------------------


def _cmd_tableaux(args) -> int:
    shape = _parse_shape(args.inner, args.outer)
    tableaux = enumerate_skew_tableaux(shape)
    payload = {
        "shape": shape.to_json(),
        "count": len(tableaux),
        "tableaux": [t.to_json() for t in tableaux],
    }

    def pretty(p):
        lines = [f"shape: {format_partition(shape.outer)} / "
                 f"{format_partition(shape.inner) or 'empty'}",
                 f"count: {p['count']}"]
        for k, tj in enumerate(p["tableaux"]):
            lines.append(f"-- tableau {k}")
            lines.extend(_tableau_lines(tj))
        return lines

    _emit(payload, args, pretty)
    return 0


def _cmd_matrix(args) -> int:
    shape = _parse_shape(args.inner, args.outer)
    at = _parse_point(args.at) if args.at is not None else None
    try:
        matrix = seminormal.seminormal_matrix(shape, args.gen)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "shape": shape.to_json(),
        "generator": args.gen,
        "matrix": _matrix_json(matrix, at),
    }

    def pretty(p):
        cells = [[e if isinstance(e, str) else str(RationalFunction.from_json(e))
                  for e in row] for row in p["matrix"]["entries"]]
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))] if cells else []
        return [f"g_{args.gen} on {format_partition(shape.outer)} / "
                f"{format_partition(shape.inner) or 'empty'}  "
                "(basis: tableaux in enumeration order)"] + [
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            for row in cells
        ]

    _emit(payload, args, pretty)
    return 0


def _cmd_invariants(args) -> int:
    shape = _parse_shape(args.inner, args.outer)
    at = _parse_point(args.at) if args.at is not None else None
    data = stripcat._invariant_data(shape)
    payload = {"shape": shape.to_json(), "dimension": data.dimension}
    if data.dimension == 1:
        payload["vector"] = [
            _entry_json(data.vector[k, 0], at) for k in range(data.vector.rows)
        ]
    else:
        payload["vector"] = None

    def pretty(p):
        lines = [f"invariant dimension: {p['dimension']}"]
        if p["vector"] is not None:
            for k, e in enumerate(p["vector"]):
                text = e if isinstance(e, str) else str(RationalFunction.from_json(e))
                lines.append(f"tableau {k}: {text}")
        return lines

    _emit(payload, args, pretty)
    return 0


def _run_suite(name: str, args) -> dict:
    if name == "relations":
        return seminormal.verify_relations(
            max_outer_size=args.max_size if args.max_size is not None else 6,
            max_boxes=args.max_strip if args.max_strip is not None else 5,
        )
    if name == "invariants":
        return seminormal.verify_invariants(
            max_outer_size=args.max_size if args.max_size is not None else 8,
            max_boxes=args.max_strip if args.max_strip is not None else 5,
        )
    if name == "wedderburn":
        n = args.n if args.n is not None else 4
        if n < 1:
            raise UsageError("--n must be at least 1")
        report = seminormal.wedderburn_check(n).to_json()
        report["pass"] = (
            report["sum_of_squares"] == factorial(n) and report["faithful"] is True
        )
        return report
    if name == "morita":
        return stripcat.verify_morita(
            max_outer_size=args.max_size if args.max_size is not None else 6,
            max_strip_len=args.max_strip if args.max_strip is not None else 4,
        )
    raise UsageError(f"unknown suite {name!r}")


def _suite_summary(name: str, report: dict) -> str:
    status = "PASS" if report["pass"] else "FAIL"
    details = {
        "relations": lambda r: f"{r.get('shapes_checked', '?')} shapes",
        "invariants": lambda r: f"{r.get('shapes_checked', '?')} shapes",
        "wedderburn": lambda r: f"n={r.get('n')}, sum of squares {r.get('sum_of_squares')}",
        "morita": lambda r: f"{r.get('chains_checked', '?')} chains, "
        f"{r.get('cocycles_checked', '?')} cocycles",
    }[name](report)
    return f"{name}: {status} ({details})"


def _cmd_verify(args) -> int:
    suites = ["relations", "invariants", "wedderburn", "morita"] if args.suite == "all" else [args.suite]
    reports = {name: _run_suite(name, args) for name in suites}
    if args.suite == "all":
        payload = {"suites": reports, "pass": all(r["pass"] for r in reports.values())}
    else:
        payload = {"suite": args.suite, **reports[args.suite]}

    def pretty(p):
        lines = [_suite_summary(name, reports[name]) for name in suites]
        for name in suites:
            for f in reports[name].get("failures", []):
                lines.append(f"counterexample[{name}]: {json.dumps(f)}")
        return lines

    _emit(payload, args, pretty)
    ok = payload["pass"]
    return 0 if ok else 1


def _cmd_wedderburn_lift(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        lam = parse_partition(args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        lift = seminormal.matrix_unit_lift(args.n, lam, args.row, args.col)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "n": args.n,
        "shape": list(lam),
        "row": args.row,
        "col": args.col,
        "coefficients": [
            {"word": list(word), "coefficient": coeff.to_json()}
            for word, coeff in lift
        ],
        "verified": True,
    }

    def pretty(p):
        lines = [f"matrix unit ({args.row},{args.col}) of block "
                 f"{format_partition(lam)} in H_{args.n}:"]
        for item in p["coefficients"]:
            coeff = RationalFunction.from_json(item["coefficient"])
            if coeff:
                lines.append(f"word {item['word']}: {coeff}")
        return lines

    _emit(payload, args, pretty)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-strip",
        description="Exact Hecke-algebra seminormal representations and the "
        "horizontal-strip verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--pretty", action="store_true", help="human-readable output")

    p_tab = sub.add_parser("tableaux", help="enumerate standard skew tableaux")
    p_tab.add_argument("--inner", default="", help='inner partition, e.g. "2,1" ("" = empty)')
    p_tab.add_argument("--outer", required=True, help="outer partition")
    add_common(p_tab)
    p_tab.set_defaults(func=_cmd_tableaux)

    p_mat = sub.add_parser("matrix", help="seminormal matrix of one generator")
    p_mat.add_argument("--inner", default="")
    p_mat.add_argument("--outer", required=True)
    p_mat.add_argument("--gen", type=int, required=True, help="generator index i of g_i")
    p_mat.add_argument("--at", help="evaluate entries at a rational a, e.g. 1 or 7/3")
    add_common(p_mat)
    p_mat.set_defaults(func=_cmd_matrix)

    p_inv = sub.add_parser("invariants", help="Hecke-invariant vector of a shape")
    p_inv.add_argument("--inner", default="")
    p_inv.add_argument("--outer", required=True)
    p_inv.add_argument("--at", help="evaluate vector entries at a rational a")
    add_common(p_inv)
    p_inv.set_defaults(func=_cmd_invariants)

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    p_ver.add_argument(
        "suite", choices=["relations", "invariants", "wedderburn", "morita", "all"]
    )
    p_ver.add_argument("--max-size", type=int, help="bound on |outer|")
    p_ver.add_argument("--max-strip", type=int, help="bound on skew box count / strip length")
    p_ver.add_argument("--n", type=int, help="symmetric group size for the wedderburn suite")
    add_common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_lift = sub.add_parser(
        "wedderburn-lift", help="express a matrix unit over the word basis"
    )
    p_lift.add_argument("--n", type=int, required=True)
    p_lift.add_argument("--shape", required=True, help="partition labelling the block")
    p_lift.add_argument("--row", type=int, default=0, help="0-based row inside the block")
    p_lift.add_argument("--col", type=int, default=0, help="0-based column inside the block")
    add_common(p_lift)
    p_lift.set_defaults(func=_cmd_wedderburn_lift)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
