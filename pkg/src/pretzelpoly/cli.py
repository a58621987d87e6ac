"""Command-line entry point.

Exit codes: 0 success, 2 usage or spec error, 3 method precondition error,
4 enumeration budget exceeded. Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass

from .bracket import (
    BracketResult,
    bracket_closed_general,
    bracket_closed_p11n,
    bracket_statesum,
    bracket_tangle_eval,
)
from .conway import conway_closed_p11n, conway_skein_p11n
from .diagram import DEFAULT_MAX_CROSSINGS, PretzelSpec
from .errors import BudgetExceededError, InvalidSpecError, PreconditionError, UnsupportedFamilyError
from .laurent import LaurentPoly
from .verify import CHECKS, run_checks

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4

BRACKET_METHODS = ("auto", "statesum", "tangle", "closed")
CONWAY_METHODS = ("auto", "closed", "skein")


class UsageError(Exception):
    pass


def render_poly(p: LaurentPoly, fmt: str = "text") -> str:
    if fmt == "text":
        return p.to_text()
    if fmt == "latex":
        return p.to_latex()
    if fmt == "json":
        return p.to_json()
    raise ValueError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class OutputRecord:
    spec: str
    invariant: str
    method: str
    polynomial: LaurentPoly
    elapsed_ms: float
    state_count: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["polynomial"] = self.polynomial.to_dict()
        d["text"] = self.polynomial.to_text()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(
            spec=d["spec"],
            invariant=d["invariant"],
            method=d["method"],
            polynomial=LaurentPoly.from_dict(d["polynomial"]),
            elapsed_ms=d["elapsed_ms"],
            state_count=d.get("state_count"),
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))


# -- method resolution ----------------------------------------------------------

def bracket_closed(spec: PretzelSpec) -> BracketResult:
    """Closed formula covering ``spec``: ``P(1,1,n)`` first, then ``P(1,...,1,n)``."""
    if spec.is_p11n():
        return bracket_closed_p11n(spec.tangles[2])
    shape = spec.ones_then_shape()
    if shape is not None:
        return bracket_closed_general(*shape)
    raise UnsupportedFamilyError(f"no closed bracket formula covers P({spec})")


def has_closed_bracket(spec: PretzelSpec) -> bool:
    return spec.is_p11n() or spec.ones_then_shape() is not None


def compute_bracket(spec: PretzelSpec, method: str = "auto",
                    max_crossings: int = DEFAULT_MAX_CROSSINGS, workers: int = 1) -> BracketResult:
    if method == "auto":
        method = "closed" if has_closed_bracket(spec) else "tangle"
    if method == "closed":
        return bracket_closed(spec)
    if method == "tangle":
        return bracket_tangle_eval(spec)
    if method == "statesum":
        return bracket_statesum(spec, max_crossings=max_crossings, workers=workers)
    raise UsageError(f"method {method!r} is not available for the bracket; choose from {BRACKET_METHODS}")


def _p11n_param(spec: PretzelSpec) -> int:
    if spec.k != 3 or spec.tangles[:2] != (1, 1):
        raise UnsupportedFamilyError(f"Conway polynomial is only implemented for P(1,1,n), got P({spec})")
    return spec.tangles[2]


def compute_conway(spec: PretzelSpec, method: str = "auto") -> tuple[LaurentPoly, str]:
    if method not in CONWAY_METHODS:
        raise UsageError(f"method {method!r} is not available for the Conway polynomial; choose from {CONWAY_METHODS}")
    n = _p11n_param(spec)
    if method in ("auto", "closed"):
        return conway_closed_p11n(n), "closed"
    return conway_skein_p11n(n), "skein"


def compute_record(invariant: str, spec: PretzelSpec, method: str = "auto",
                   max_crossings: int = DEFAULT_MAX_CROSSINGS, workers: int = 1) -> OutputRecord:
    t0 = time.perf_counter()
    if invariant == "bracket":
        res = compute_bracket(spec, method, max_crossings, workers)
        poly, used, states = res.polynomial, str(res.method), res.state_count
    elif invariant == "conway":
        poly, used = compute_conway(spec, method)
        states = None
    else:
        raise UsageError(f"unknown invariant {invariant!r}")
    elapsed = (time.perf_counter() - t0) * 1e3
    return OutputRecord(str(spec), invariant, used, poly, round(elapsed, 3), states)


# -- commands -------------------------------------------------------------------

def cmd_compute(args, out) -> int:
    spec = PretzelSpec.parse(args.pretzel)
    rec = compute_record(args.invariant, spec, args.method, args.max_crossings, args.workers)
    print(f"P({rec.spec}) {rec.invariant} via {rec.method} in {rec.elapsed_ms:.3f} ms", file=sys.stderr)
    if args.format == "json":
        print(rec.to_json(), file=out)
    else:
        print(render_poly(rec.polynomial, args.format), file=out)
    return EXIT_OK


def parse_range(text: str) -> range:
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise InvalidSpecError(f"range must look like a..b, got {text!r}") from None
    if lo > hi:
        raise InvalidSpecError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _family_spec(family: str, n: int, m: int) -> PretzelSpec:
    if family == "p11n":
        return PretzelSpec.p11n(n)
    return PretzelSpec.ones_then(m, n)


def _table_rows(args) -> tuple[list[str], list[dict]]:
    values = [n for n in parse_range(args.range) if n != 0]
    if not values:
        raise InvalidSpecError(f"range {args.range!r} contains no admissible parameter (n = 0 is excluded)")
    if args.family == "p1m_n" and args.m < 1:
        raise InvalidSpecError("--m must be at least 1")
    if args.invariant == "conway" and args.family != "p11n":
        raise UsageError("the Conway table is only available for --family p11n")
    default = "statesum,tangle,closed" if args.invariant == "bracket" else "closed,skein"
    methods = [s.strip() for s in (args.methods or default).split(",") if s.strip()]
    allowed = BRACKET_METHODS if args.invariant == "bracket" else CONWAY_METHODS
    bad = [mth for mth in methods if mth not in allowed]
    if bad:
        raise UsageError(f"unknown method(s) {bad} for {args.invariant}")

    rows = []
    for n in values:
        spec = _family_spec(args.family, n, args.m)
        row = {"n": n, "spec": str(spec), "cells": {}}
        for mth in methods:
            try:
                rec = compute_record(args.invariant, spec, mth, args.max_crossings)
                row["cells"][mth] = rec.polynomial
            except (PreconditionError, BudgetExceededError) as exc:
                print(f"P({spec}) {mth}: {exc}", file=sys.stderr)
                row["cells"][mth] = None
        polys = [p for p in row["cells"].values() if p is not None]
        row["agree"] = all(p == polys[0] for p in polys)
        rows.append(row)
    return methods, rows


def _cell(p, fmt):
    if p is None:
        return "-"
    return p.to_latex() if fmt == "latex" else p.to_text()


def format_table(methods: list[str], rows: list[dict], fmt: str) -> str:
    header = ["n", "spec", *methods, "agree"]
    if fmt == "json":
        payload = [{"n": r["n"], "spec": r["spec"],
                    "results": {m: (p.to_dict() if p is not None else None) for m, p in r["cells"].items()},
                    "agree": r["agree"]} for r in rows]
        return json.dumps(payload, separators=(",", ":"))
    body = [[str(r["n"]), r["spec"], *(_cell(r["cells"][m], fmt) for m in methods), str(r["agree"]).lower()]
            for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = [r"\begin{tabular}{" + "l" * len(header) + "}", " & ".join(header) + r" \\", r"\hline"]
        for cells in body:
            lines.append(" & ".join(f"${c}$" if i >= 2 and c != "-" and i < len(cells) - 1 else c
                                    for i, c in enumerate(cells)) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip()
                     for line in [header, *body])


def cmd_table(args, out) -> int:
    methods, rows = _table_rows(args)
    print(format_table(methods, rows, args.format), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    only = [s.strip() for s in args.only.split(",")] if args.only else None
    try:
        results = run_checks(args.max_crossings, only)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.format == "json":
        print(json.dumps([{"check": r.name, "status": r.status, "passed": r.passed,
                           "failed": r.failed, "skipped": r.skipped, "failures": r.failures}
                          for r in results], separators=(",", ":")), file=out)
    else:
        for r in results:
            print(f"{r.status:4}  {r.name:15} passed={r.passed} failed={r.failed} skipped={r.skipped}", file=out)
            for f in r.failures[:10]:
                print(f"      mismatch: {f}", file=out)
    return EXIT_OK if all(r.failed == 0 for r in results) else 1


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pretzelpoly",
                                     description="Kauffman bracket and Conway polynomials of pretzel links.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one invariant of one pretzel link")
    c.add_argument("invariant", choices=("bracket", "conway"))
    c.add_argument("--pretzel", required=True, help="comma-separated nonzero integers, e.g. 1,1,-4")
    c.add_argument("--method", default="auto", choices=sorted(set(BRACKET_METHODS + CONWAY_METHODS)))
    c.add_argument("--format", default="text", choices=("text", "json", "latex"))
    c.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    c.add_argument("--workers", type=int, default=1, help="threads for the state sum")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="tabulate an invariant over a family")
    t.add_argument("invariant", choices=("bracket", "conway"))
    t.add_argument("--family", required=True, choices=("p11n", "p1m_n"))
    t.add_argument("--range", required=True, help="inclusive range a..b of n")
    t.add_argument("--m", type=int, default=2, help="leading single-crossing tangles for p1m_n")
    t.add_argument("--methods", help="comma-separated methods (default: all)")
    t.add_argument("--format", default="text", choices=("text", "csv", "json", "latex"))
    t.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the formula-versus-oracle checks")
    v.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    v.add_argument("--only", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    v.add_argument("--format", default="text", choices=("text", "json"))
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InvalidSpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
