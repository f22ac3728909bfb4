"""Command line entry point.

    degdowling table  --kind S2deg --lambda 1/2 --nmax 6 --format csv
    degdowling series --kind DEG_R_DOWLING --m 2 --r 3 --lambda 1/2 --order 6
    degdowling mc     --m 2 --r 1 --lambda 1/2 --alpha 2 --n 3 --samples 1000000 --seed 42
    degdowling verify --check all --format markdown

Exit status is 0 on success, 1 when a check or Monte-Carlo comparison fails
and 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import replace
from fractions import Fraction

from .dowling import WHITNEY_KINDS, whitney_table
from .exact_core import Poly, rat, rat_str
from .genfun import GF_KINDS, GfSpec, gf_coefficients
from .poisson_lab import PoissonSpec, estimate_deg_moment
from .stirling import KINDS as STIRLING_KINDS
from .stirling import DegParams, stirling_table
from .verify import CHECK_IDS, Grid, SuiteConfig, format_reports, run_suite


def _rat_arg(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text!r}") from exc


def _lambdas_arg(text: str) -> tuple:
    return tuple(_rat_arg(t) for t in text.split(",") if t.strip())


def _value_json(v):
    return v.to_json() if isinstance(v, Poly) else rat_str(v)


def _table_text(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[rat_str(c) for c in row] for row in rows])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"k={k}" for k in range(len(rows))])
    for n, row in enumerate(rows):
        w.writerow([n] + [rat_str(c) for c in row])
    return buf.getvalue()


def cmd_table(args) -> int:
    if args.kind in STIRLING_KINDS:
        rows = stirling_table(args.kind, args.lam, args.nmax).rows()
    else:
        rows = whitney_table(args.kind, DegParams(args.lam, args.m, args.r), args.nmax).rows()
    text = _table_text(rows, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def cmd_series(args) -> int:
    spec = GfSpec(args.kind, DegParams(args.lam, args.m, args.r), k=args.k,
                  order=args.order, alpha=args.alpha)
    values = gf_coefficients(spec)
    if any(isinstance(v, Poly) for v in values):
        values = [v if isinstance(v, Poly) else Poly([v]) for v in values]
    print(json.dumps([_value_json(v) for v in values]))
    return 0


def cmd_mc(args) -> int:
    params = DegParams(args.lam, args.m, args.r)
    spec = PoissonSpec(float(args.alpha / args.m), args.seed, args.samples, shards=args.shards)
    est = estimate_deg_moment(params, args.n, args.alpha, spec, workers=args.workers)
    out = est.to_dict(args.tolerance)
    print(json.dumps({k: out[k] for k in ("mean", "std_error", "target_exact", "pass")}))
    return 0 if out["pass"] else 1


def cmd_verify(args) -> int:
    grid = Grid()
    changes = {}
    if args.nmax is not None:
        changes["nmax"] = args.nmax
    if args.lambdas is not None:
        changes["lambdas"] = args.lambdas
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.samples is not None:
        changes["samples"] = args.samples
    grid = replace(grid, **changes)
    checks = CHECK_IDS if args.check == "all" else (args.check,)
    result = run_suite(SuiteConfig(checks, grid))
    text = format_reports(result.reports, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return result.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degdowling", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, r_default=1):
        p.add_argument("--lambda", dest="lam", type=_rat_arg, default=Fraction(0))
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--r", type=int, default=r_default)

    p = sub.add_parser("table", help="print a Stirling or Whitney triangle")
    p.add_argument("--kind", required=True, choices=STIRLING_KINDS + WHITNEY_KINDS)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_params(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="print n! [t^n] of a generating function")
    p.add_argument("--kind", required=True, choices=GF_KINDS)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--alpha", type=_rat_arg, default=None)
    add_params(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("mc", help="Monte-Carlo estimate of E[(mX+r)_{n,lambda}]")
    add_params(p)
    p.add_argument("--alpha", type=_rat_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=5.0, help="pass if |mean-target| <= tol*SE")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--check", default="all", choices=("all",) + CHECK_IDS)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--lambdas", type=_lambdas_arg, default=None)
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
