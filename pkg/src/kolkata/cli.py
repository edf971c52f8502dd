"""Command-line front end.

Analytic distributions are given as ``FAMILY:key=value,...``::

    uniform:a=0,b=1        exponential:lambda=1     pareto:m=1,alpha=2
    powerlaw:n=3           circle                   twogroup:c=0.75
    piecewise:points=0.5/0.25;0.75/0.5   (interior kinks p/L, ';'-separated)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .distributions import make_analytic
from .dominance import compare
from .errors import InequalityError
from .hindex import citation_curve_fixed_point, h_index_from_fixed_point, hirsch_index
from .indices import report
from .io import REPORT_KEYS, export_curve, parse_citations, parse_dataset, write_report
from .tailfit import fit_tail, fit_tail_empirical

EXIT_OK, EXIT_INPUT, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Unreadable input file or malformed analytic specification."""


def parse_analytic(text: str):
    """Turn ``FAMILY:key=value,...`` into an analytic distribution."""
    family, _, rest = text.partition(":")
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise InputError(f"analytic parameter {item!r} is not key=value")
        params[key.strip()] = value.strip()
    if family.strip().lower() == "piecewise" and "points" in params:
        try:
            params["points"] = [
                tuple(float(v) for v in pair.split("/"))
                for pair in params["points"].split(";") if pair.strip()
            ]
        except ValueError:
            raise InputError(f"bad piecewise points {params['points']!r}; expected p/L;p/L") from None
        if any(len(pt) != 2 for pt in params["points"]):
            raise InputError("piecewise points must be p/L pairs")
    return make_analytic(family, params)


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _source(path, fmt, analytic):
    if analytic is not None:
        return parse_analytic(analytic)
    return parse_dataset(_read(path), fmt)


def _round12(x):
    return float(format(float(x), ".12g"))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _report_dict(rep) -> dict:
    values = rep.as_dict()
    return {k: _round12(values[k]) for k in REPORT_KEYS}


def cmd_compute(args) -> str:
    rep = report(_source(args.input, args.format, args.analytic))
    return write_report(rep, args.out).decode()


def cmd_compare(args) -> str:
    a = _source(args.a, args.format, args.a_analytic)
    b = _source(args.b, args.format, args.b_analytic)
    res = compare(a, b)
    return _dump({
        "verdict": res.verdict.value,
        "crossings": [_round12(c) for c in res.crossings],
        "a": _report_dict(report(a)),
        "b": _report_dict(report(b)),
    })


def cmd_lorenz(args) -> str:
    payload = export_curve(_source(args.input, args.format, args.analytic), args.points, args.out)
    if args.dest in (None, "-"):
        return payload.decode()
    try:
        Path(args.dest).write_bytes(payload)
    except OSError as exc:
        raise InputError(f"cannot write {args.dest}: {exc.strerror}") from None
    return ""


def cmd_tailfit(args) -> str:
    if args.analytic is not None:
        fit = fit_tail(parse_analytic(args.analytic), args.window_start)
    elif args.format == "grouped":
        fit = fit_tail(parse_dataset(_read(args.input), "grouped"), args.window_start)
    else:
        dist = parse_dataset(_read(args.input), "raw")
        samples = [g.value for g in dist.groups for _ in range(g.count)]
        fit = fit_tail_empirical(samples, args.window_start)
    out = {k: (_round12(v) if isinstance(v, float) else v) for k, v in fit.as_dict().items()}
    return _dump(out)


def cmd_hindex(args) -> str:
    counts = parse_citations(_read(args.input))
    out = {"papers": len(counts), "h_index": hirsch_index(counts)}
    if max(counts) >= 1 and min(counts) <= len(counts):
        out["fixed_point"] = _round12(citation_curve_fixed_point(counts))
    else:
        out["fixed_point"] = None
    out["h_from_fixed_point"] = h_index_from_fixed_point(counts)
    return _dump(out)


def _add_source(p, required_input=True):
    src = p.add_mutually_exclusive_group(required=required_input)
    src.add_argument("--input", metavar="FILE", help="data file")
    src.add_argument("--analytic", metavar="SPEC", help="analytic family, e.g. pareto:m=1,alpha=2")
    p.add_argument("--format", choices=("raw", "grouped"), default="raw",
                   help="raw: one value per line; grouped: count,value per line (default raw)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kolkata",
        description="Lorenz curves and inequality indices (Kolkata k, Gini, Pietra).",
        epilog=__doc__.split("\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("compute", help="all indices of one distribution")
    _add_source(p)
    p.add_argument("--out", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="Lorenz dominance between two distributions")
    a = p.add_mutually_exclusive_group(required=True)
    a.add_argument("--a", metavar="FILE")
    a.add_argument("--a-analytic", metavar="SPEC")
    b = p.add_mutually_exclusive_group(required=True)
    b.add_argument("--b", metavar="FILE")
    b.add_argument("--b-analytic", metavar="SPEC")
    p.add_argument("--format", choices=("raw", "grouped"), default="raw")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lorenz", help="export sampled Lorenz curve as CSV or SVG")
    _add_source(p)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", choices=("csv", "svg"), default="csv")
    p.add_argument("--dest", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=cmd_lorenz)

    p = sub.add_parser("tailfit", help="power-law fit of the top tail above k")
    _add_source(p)
    p.add_argument("--window-start", type=float, default=None, metavar="X",
                   help="start of the fit window (default: the Kolkata index)")
    p.set_defaults(func=cmd_tailfit)

    p = sub.add_parser("hindex", help="h-index and citation-curve fixed point")
    p.add_argument("--input", metavar="FILE", required=True, help="one citation count per line")
    p.set_defaults(func=cmd_hindex)
    return parser


def _error_prefix(stream) -> str:
    if os.environ.get("INEQ_NO_COLOR") is None and getattr(stream, "isatty", lambda: False)():
        return "\x1b[31merror:\x1b[0m"
    return "error:"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        out = args.func(args)
    except (InputError, InequalityError, ValueError) as exc:
        print(f"{_error_prefix(sys.stderr)} {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
