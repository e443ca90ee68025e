"""``wcatalan`` command line: seq, verify, orbits, blocks.

csv and json output is stable; the table format is for reading only.
Exit status is 0 when every checked row matches, 1 on a mismatch and 2 on
bad input or a rejected weight.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .catalan import (BRUTE_FORCE_BOUND, BoundExceededError, weighted_catalan_bruteforce,
                      weighted_catalan_dp_sequence, weighted_catalan_series)
from .trees import (ORBIT_BOUND, DecompositionError, OrbitWeightError, census_summary,
                    orbit_census, orbit_decomposition_check, size_histogram)
from .valuation import NonMemberError, verify_classical, verify_weighted, zero_blocks
from .weights import (DEFAULT_WINDOW_N, DEFAULT_WINDOW_X, WeightDomainError, check_membership,
                      parse_weight)

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(rows: list[dict], fields: Sequence[str], fmt: str, payload: dict | None = None) -> str:
    """Format ``rows`` as table, csv or json (``payload`` wraps the json rows)."""
    if fmt == "json":
        doc = dict(payload or {})
        doc["rows"] = rows
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_cell(r[f]) for f in fields])
        return buf.getvalue()
    cells = [list(fields)] + [[_cell(r[f]) for f in fields] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(fields))]
    return "".join("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip() + "\n"
                   for row in cells)


class _Output:
    def __init__(self, args):
        self.fmt = args.format
        self.path = args.out
        self.notes: list[str] = []

    def note(self, line: str) -> None:
        # free text stays out of machine-readable streams
        if self.fmt == "table":
            self.notes.append(line)
        else:
            print(line, file=sys.stderr)

    def write(self, body: str) -> None:
        text = "".join(n + "\n" for n in self.notes) + body if self.fmt == "table" else body
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _weight(args):
    try:
        return parse_weight(args.weight)
    except WeightDomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_seq(args) -> int:
    b = _weight(args)
    n_max = args.n_max
    out = _Output(args)
    routes = ("dp", "series", "brute") if args.method == "all" else (args.method,)
    cols: dict[str, list[int]] = {}
    for route in routes:
        if route == "dp":
            cols["dp"] = weighted_catalan_dp_sequence(n_max, b)
        elif route == "series":
            cols["series"] = weighted_catalan_series(n_max, b)
        else:
            if n_max > args.brute_bound:
                raise UsageError(f"brute force refuses n_max={n_max} > --brute-bound {args.brute_bound}")
            cols["brute"] = [weighted_catalan_bruteforce(n, b, args.brute_bound).value
                             for n in range(n_max + 1)]
    rows = []
    ok = True
    for n in range(n_max + 1):
        if len(routes) == 1:
            rows.append({"n": n, "value": str(cols[routes[0]][n])})
        else:
            vals = [cols[r][n] for r in routes]
            match = len(set(vals)) == 1
            ok &= match
            rows.append({"n": n, **{r: str(v) for r, v in zip(routes, vals)}, "match": match})
    fields = ["n", "value"] if len(routes) == 1 else ["n", *routes, "match"]
    out.write(render(rows, fields, out.fmt, {"weight": str(b), "method": args.method}))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    b = _weight(args)
    out = _Output(args)
    verdict = check_membership(b, args.window_n, args.window_x)
    payload = {"weight": str(b), "verdict": verdict.to_dict()}
    if not verdict.is_member:
        print(f"rejected: {verdict.describe()}", file=sys.stderr)
        if out.fmt == "json":
            out.write(render([], [], "json", payload))
        return EXIT_ERROR
    out.note(f"weight {b}: {verdict.describe()}")
    if b.kind == "const" and b.params == (1,):
        reports = verify_classical(args.n_max)
    else:
        reports = verify_weighted(args.n_max, b, check=False)
    rows = [r.to_dict() for r in reports]
    ok = all(r.match for r in reports)
    out.note(f"{sum(r.match for r in reports)}/{len(reports)} rows match xi = s(n+1) - 1")
    out.write(render(rows, ["n", "xi", "predicted", "match"], out.fmt, payload))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_orbits(args) -> int:
    b = _weight(args)
    out = _Output(args)
    n = args.n
    records = orbit_census(n, b, bound=args.orbit_bound)
    summary = census_summary(n, records)
    hist = size_histogram(records)
    try:
        total = orbit_decomposition_check(n, b, records=records)
        decomposition = {"total": str(total), "match": True}
    except DecompositionError as exc:
        decomposition = {"total": None, "match": False, "error": str(exc)}
    rows = [rec.to_dict() for rec in records]
    payload = {
        "weight": str(b),
        "n": n,
        "orbits": summary.orbits,
        "histogram": {str(t): c for t, c in hist.items()},
        "minimal": {"t": summary.min_exponent, "count": summary.min_count,
                    "predicted_t": summary.predicted_exponent,
                    "predicted_count": summary.predicted_count, "match": summary.match},
        "decomposition": decomposition,
    }
    out.note(f"n={n}: {summary.orbits} orbits, sizes sum to {summary.total_size}")
    out.note("size histogram: " + ", ".join(f"2^{t} x {c}" for t, c in hist.items()))
    out.note(f"minimal orbits: size 2^{summary.min_exponent} x {summary.min_count}; "
             f"predicted 2^{summary.predicted_exponent} x (2s-1)!! = {summary.predicted_count}")
    if decomposition["match"]:
        out.note(f"decomposition: sum #O * r_b(O;0) = {decomposition['total']} = C_{n}^b")
    else:
        out.note(f"decomposition failed: {decomposition['error']}")
    out.write(render(rows, ["shape", "t", "r"], out.fmt, payload))
    return EXIT_OK if summary.match and decomposition["match"] else EXIT_MISMATCH


def cmd_blocks(args) -> int:
    out = _Output(args)
    try:
        reports = zero_blocks(args.p, args.n_max, args.k_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [r.to_dict() for r in reports]
    incomplete = [r for r in reports if not r.complete]
    if incomplete:
        out.note(f"block {incomplete[0].k} runs past n_max={args.n_max}; not compared")
    out.write(render(rows, ["p", "k", "observed", "predicted", "match", "complete"], out.fmt,
                     {"p": args.p, "n_max": args.n_max, "k_max": args.k_max}))
    return EXIT_OK if all(r.match for r in reports if r.complete) else EXIT_MISMATCH


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wcatalan", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--out", metavar="PATH", help="write to a file instead of stdout")
    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--weight", default="const:1",
                        help="const:<c> | poly:<c0>,<c1>,... | geom:<q> | oddsq | table:<v0>,...")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common, weight], help="print C_0^b .. C_n^b")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--method", choices=("dp", "series", "brute", "all"), default="dp")
    p.add_argument("--brute-bound", type=_nonneg, default=BRUTE_FORCE_BOUND)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common, weight],
                       help="check the weight, then compare xi(C_n^b) with s(n+1) - 1")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--window-n", type=int, default=DEFAULT_WINDOW_N)
    p.add_argument("--window-x", type=int, default=DEFAULT_WINDOW_X)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", parents=[common, weight], help="reflection-orbit census for one n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--orbit-bound", type=_nonneg, default=ORBIT_BOUND)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("blocks", parents=[common], help="zero blocks of C_n mod p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--k-max", type=_nonneg, default=20)
    p.set_defaults(func=cmd_blocks)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, WeightDomainError, BoundExceededError, NonMemberError,
            OrbitWeightError) as exc:
        print(f"wcatalan {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
