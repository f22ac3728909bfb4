"""Identity-suite engine.

Each check enumerates grid cells. An exact cell fixes (n, m, r), keeps alpha
symbolic, and certifies a lambda-polynomial identity of degree <= n by exact
agreement at n+1 distinct rational lambdas. The two Monte-Carlo checks
compare sample means against the exact closed forms under a 5-SE rule.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import dowling as dw
from .dowling import (
    charlier_poly,
    deg_dowling_poly,
    deg_r_dowling_poly,
    deg_r_whitney2,
    deg_whitney2,
    dowling_poly,
    thm_rhs,
    whitney_classical,
)
from .exact_core import Poly, Series, binom, rat, rat_str, series_compose
from .genfun import GfSpec, e_lambda_series, gf_coefficients, log_lambda_series
from .poisson_lab import PoissonSpec, estimate_deg_moment
from .stirling import (
    DegParams,
    bell_poly,
    deg_bell_poly,
    deg_falling_eval,
    deg_falling_poly,
    stirling_row,
    stirling_table,
)

log = logging.getLogger(__name__)

CHECK_IDS = (
    "T1_MC", "T2", "C3", "T4_MC", "C5", "T6", "T7", "T8", "T9", "T10", "T11",
    "EQ32", "GF_ALL", "LIMIT_L0", "INV_PAIR",
)
MC_CHECKS = ("T1_MC", "T4_MC")

DEFAULT_LAMBDAS = (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(-5))
# extra certification points, used in this order once the base grid runs out
_LAMBDA_POOL = tuple(Fraction(s) for s in (
    "1", "-1", "3/2", "-2", "1/3", "3", "-1/2", "5/2", "-3", "2/3", "4", "-3/2",
    "7/3", "-4", "1/4", "5",
))

# (m, r, lambda, alpha); r = 1 cells belong to T1_MC, the rest to T4_MC
DEFAULT_MC_CELLS = tuple(
    (m, r, Fraction(lam), Fraction(alpha)) for m, r, lam, alpha in (
        (1, 0, "0", 1), (1, 0, "1/2", 1),
        (1, 1, "0", 2), (1, 1, "1/2", 2),
        (1, 2, "0", 1), (1, 2, "1/2", 1),
        (2, 0, "0", 2), (2, 0, "1/2", 2),
        (2, 1, "0", 1), (2, 1, "1/2", 1),
        (2, 2, "0", 2), (2, 2, "1/2", 2),
    )
)


@dataclass(frozen=True)
class Grid:
    nmax: int = 10
    nmax_stirling: int = 12
    ms: tuple = (1, 2, 3)
    rs: tuple = (0, 1, 2, 3)
    lambdas: tuple = DEFAULT_LAMBDAS
    eq32_pairs: int = 5
    mc_cells: tuple = DEFAULT_MC_CELLS
    mc_nmax: int = 4
    samples: int = 1_000_000
    seed: int = 20240601
    mc_tolerance: float = 5.0

    @property
    def ns(self) -> range:
        return range(self.nmax + 1)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    grid: Grid = field(default_factory=Grid)

    def __post_init__(self):
        if self.id not in CHECK_IDS:
            raise ValueError(f"unknown check {self.id!r}; expected one of {CHECK_IDS}")

    @property
    def mode(self) -> str:
        return "MC_STATISTICAL" if self.id in MC_CHECKS else "EXACT_ALPHA_SYMBOLIC"


@dataclass
class CheckReport:
    check_id: str
    cells_run: int = 0
    cells_failed: int = 0
    witness: dict | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.cells_failed == 0

    def to_dict(self) -> dict:
        out = {
            "check_id": self.check_id,
            "cells_run": self.cells_run,
            "cells_failed": self.cells_failed,
            "seconds": round(self.seconds, 4),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def lambda_points(count: int, base: Sequence[Fraction] = DEFAULT_LAMBDAS) -> list[Fraction]:
    """At least ``count`` distinct rationals: the base grid, extended from a fixed pool."""
    pts = list(dict.fromkeys(rat(b) for b in base))
    for extra in _LAMBDA_POOL:
        if len(pts) >= count:
            break
        if extra not in pts:
            pts.append(extra)
    if len(pts) < count:
        raise ValueError(f"cannot supply {count} distinct lambda points")
    return pts


def _first_disagreement(lhs_at, rhs_at, points):
    for lam in points:
        lhs, rhs = lhs_at(lam), rhs_at(lam)
        if lhs != rhs:
            return lam, lhs, rhs
    return None


def certify_lambda_identity(lhs_at: Callable, rhs_at: Callable, degree_bound: int,
                            points: Sequence[Fraction] | None = None) -> bool:
    """Decide lhs == rhs for two polynomials in lambda of degree <= degree_bound.

    Agreement at degree_bound + 1 distinct points is a proof. ``points``
    defaults to lambda_points(degree_bound + 1), which always includes 0.
    """
    if points is None:
        points = lambda_points(degree_bound + 1)
    points = list(dict.fromkeys(rat(p) for p in points))
    if len(points) < degree_bound + 1:
        raise ValueError(f"need {degree_bound + 1} distinct points, got {len(points)}")
    return _first_disagreement(lhs_at, rhs_at, points) is None


# -- serialization of witnesses -----------------------------------------------

def _show(value):
    if isinstance(value, (Poly, Series)):
        return value.to_json()
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return value


def _params_dict(**kw) -> dict:
    return {k: _show(v) for k, v in kw.items()}


# -- exact theorem cells ----------------------------------------------------

RhsFn = Callable[[DegParams, int], Poly]


def _theorem_cells(cid: str, grid: Grid) -> Iterator[tuple[int, int, int]]:
    if cid == "C3":
        for n in grid.ns:
            yield n, 1, 1
    elif cid == "T2":
        for n, m in itertools.product(grid.ns, grid.ms):
            yield n, m, 1
    elif cid in ("T9", "T10"):
        for n, m in itertools.product(grid.ns, grid.ms):
            yield n, m, m
    else:
        for n, m, r in itertools.product(grid.ns, grid.ms, grid.rs):
            yield n, m, r


def _theorem_sides(cid: str, n: int, m: int, r: int, rhs: RhsFn | None,
                   rs: Sequence[int] = ()) -> list[tuple[str, Callable, Callable]]:
    """(label, lhs_at(lam), rhs_at(lam)) pairs for one cell."""

    def closed(theorem):
        fn = rhs if rhs is not None else (lambda p, n_: thm_rhs(theorem, p, n_))
        return lambda lam: fn(DegParams(lam, m, r), n)

    def dowling_r(lam):
        return deg_r_dowling_poly(DegParams(lam, m, r), n, "alpha")

    if cid == "T9":
        return [("T9", lambda lam: deg_bell_poly(n, lam / m).with_var("alpha"), closed("T9"))]
    if cid == "C3":
        def c3_lhs(lam):
            phi = deg_bell_poly(n, lam).with_var("alpha")
            return phi + phi.derivative()
        return [
            ("C3", dowling_r, closed("C3")),
            ("C3:phi+dphi", c3_lhs, lambda lam: deg_dowling_poly(DegParams(lam, 1), n, "alpha")),
        ]
    if cid == "T2":
        return [
            ("T2", lambda lam: deg_dowling_poly(DegParams(lam, m), n, "alpha"), closed("T2")),
            ("T2:first", dowling_r, lambda lam: thm_rhs("C5", DegParams(lam, m, 1), n)),
        ]
    if cid == "T10":
        out = [("T10", dowling_r, closed("T10"))]
        if rhs is None:
            for rr in rs:
                out.append((f"T10R:r={rr}",
                            lambda lam, rr=rr: deg_r_dowling_poly(DegParams(lam, m, rr), n, "alpha"),
                            lambda lam, rr=rr: thm_rhs("T10R", DegParams(lam, m, rr), n)))
        return out
    return [(cid, dowling_r, closed(cid))]


def _run_theorem(check: IdentityCheck, report: CheckReport, rhs: RhsFn | None):
    grid = check.grid
    for n, m, r in _theorem_cells(check.id, grid):
        points = lambda_points(n + 1, grid.lambdas)
        report.cells_run += 1
        for label, lhs_at, rhs_at in _theorem_sides(check.id, n, m, r, rhs, grid.rs):
            bad = _first_disagreement(lhs_at, rhs_at, points)
            if bad is not None:
                report.cells_failed += 1
                if report.witness is None:
                    lam, lhs, rhs_v = bad
                    report.witness = {
                        "identity": label,
                        "params": _params_dict(n=n, m=m, r=r, lam=lam),
                        "lhs": _show(lhs),
                        "rhs": _show(rhs_v),
                    }
                break


# -- other exact checks -------------------------------------------------------

def _fail(report: CheckReport, **witness):
    report.cells_failed += 1
    if report.witness is None:
        report.witness = {k: _show(v) for k, v in witness.items()}


def _run_eq32(check: IdentityCheck, report: CheckReport):
    grid = check.grid
    rng = random.Random(grid.seed)

    def rnd():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))

    for n in grid.ns:
        for lam in grid.lambdas:
            report.cells_run += 1
            for _ in range(grid.eq32_pairs):
                x, y = rnd(), rnd()
                lhs = deg_falling_eval(x + y, n, lam)
                rhs = sum(binom(n, k) * deg_falling_eval(x, k, lam) * deg_falling_eval(y, n - k, lam)
                          for k in range(n + 1))
                if lhs != rhs:
                    _fail(report, identity="EQ32", n=n, lam=lam, x=x, y=y, lhs=lhs, rhs=rhs)
                    break


def expected_coefficients(spec: GfSpec) -> list:
    """The combinatorial values a generating function must reproduce."""
    p, N, k = spec.params, spec.order, spec.k
    ns = range(N + 1)
    kind = spec.kind
    if kind == "EXP_DEG":
        return [deg_falling_poly(n, p.lam) for n in ns]
    if kind == "LOG_DEG":
        return [stirling_row("S1deg", p.lam, n)[1] if n >= 1 else Fraction(0) for n in ns]
    if kind == "BELL":
        return [bell_poly(n) for n in ns]
    if kind == "DEG_BELL":
        return [deg_bell_poly(n, p.lam) for n in ns]
    if kind in ("S1DEG", "S2DEG"):
        name = "S1deg" if kind == "S1DEG" else "S2deg"
        return [stirling_row(name, p.lam, n)[k] if k <= n else Fraction(0) for n in ns]
    if kind == "DEG_WHITNEY":
        return [deg_whitney2(p, n, k) for n in ns]
    if kind == "DEG_DOWLING":
        return [deg_dowling_poly(p, n) for n in ns]
    if kind == "DEG_R_DOWLING":
        return [deg_r_dowling_poly(p, n) for n in ns]
    if kind == "CHARLIER":
        return [charlier_poly(n, spec.alpha) for n in ns]
    raise ValueError(kind)


_CHARLIER_ALPHAS = (Fraction(0), Fraction(1), Fraction(-3, 2), Fraction(7, 2))


def gf_specs(grid: Grid) -> Iterator[GfSpec]:
    N = grid.nmax
    if N < 0:
        return
    yield GfSpec("BELL", order=N)
    for a in _CHARLIER_ALPHAS:
        yield GfSpec("CHARLIER", order=N, alpha=a)
    for lam in grid.lambdas:
        base = DegParams(lam)
        yield GfSpec("EXP_DEG", base, order=N)
        yield GfSpec("LOG_DEG", base, order=N)
        yield GfSpec("DEG_BELL", base, order=N)
        for k in range(N + 1):
            yield GfSpec("S1DEG", base, k=k, order=N)
            yield GfSpec("S2DEG", base, k=k, order=N)
        for m in grid.ms:
            yield GfSpec("DEG_DOWLING", DegParams(lam, m), order=N)
            for k in range(N + 1):
                yield GfSpec("DEG_WHITNEY", DegParams(lam, m), k=k, order=N)
            for r in grid.rs:
                yield GfSpec("DEG_R_DOWLING", DegParams(lam, m, r), order=N)


def _run_gf_all(check: IdentityCheck, report: CheckReport):
    grid = check.grid
    for spec in gf_specs(grid):
        report.cells_run += 1
        got, want = gf_coefficients(spec), expected_coefficients(spec)
        if got != want:
            n = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            _fail(report, identity=f"GF:{spec.kind}", lam=spec.params.lam, m=spec.params.m,
                  r=spec.params.r, k=spec.k, n=n, lhs=got[n], rhs=want[n])
    if grid.nmax < 0:
        return
    N = grid.nmax
    t = Series.t(N)
    for lam in grid.lambdas:
        report.cells_run += 1
        e_minus_1 = e_lambda_series(1, lam, N) - 1
        lg = log_lambda_series(lam, N)
        for label, got in (("log_lam(e_lam(t))", series_compose(lg, e_minus_1)),
                           ("e_lam(log_lam(1+t))", series_compose(e_minus_1, lg))):
            if got != t:
                _fail(report, identity=f"GF:inverse {label}", lam=lam, lhs=got, rhs=t)
                break


def _run_limit(check: IdentityCheck, report: CheckReport):
    grid = check.grid
    zero = Fraction(0)
    for n in range(grid.nmax + 1):
        report.cells_run += 1
        pairs = [
            ("S1", stirling_row("S1deg", zero, n), stirling_row("S1", zero, n)),
            ("S2", stirling_row("S2deg", zero, n), stirling_row("S2", zero, n)),
            ("Bell", deg_bell_poly(n, zero), bell_poly(n)),
        ]
        for m in grid.ms:
            p = DegParams(zero, m)
            pairs.append((f"W_{m}", tuple(deg_whitney2(p, n, k) for k in range(n + 1)),
                          tuple(Fraction(whitney_classical(m, n, k)) for k in range(n + 1))))
            pairs.append((f"D_{m}", deg_dowling_poly(p, n), dowling_poly(m, n)))
        for label, deg, classical in pairs:
            if deg != classical:
                _fail(report, identity=f"LIMIT:{label}", n=n, lhs=deg, rhs=classical)
                break


def _run_inv_pair(check: IdentityCheck, report: CheckReport):
    grid = check.grid
    nmax = grid.nmax_stirling
    if nmax < 0:
        return
    for lam in grid.lambdas:
        report.cells_run += 1
        a = stirling_table("S1deg", lam, nmax).rows()
        b = stirling_table("S2deg", lam, nmax).rows()
        size = nmax + 1
        for left, right, label in ((a, b, "S1deg*S2deg"), (b, a, "S2deg*S1deg")):
            for i in range(size):
                row = [sum(left[i][k] * right[k][j] for k in range(size)) for j in range(size)]
                ident = [Fraction(int(i == j)) for j in range(size)]
                if row != ident:
                    _fail(report, identity=f"INV_PAIR:{label}", lam=lam, row=i, lhs=row, rhs=ident)
                    break
            else:
                continue
            break


# -- Monte-Carlo checks ---------------------------------------------------------

def mc_cells(check: IdentityCheck) -> list[tuple[int, int, int, Fraction, Fraction]]:
    """(index, m, r, lam, alpha) for the cells belonging to ``check``."""
    out = []
    for i, (m, r, lam, alpha) in enumerate(check.grid.mc_cells):
        if (r == 1) == (check.id == "T1_MC"):
            out.append((i, m, r, lam, alpha))
    return out


def _run_mc(check: IdentityCheck, report: CheckReport):
    grid = check.grid
    for idx, m, r, lam, alpha in mc_cells(check):
        report.cells_run += 1
        spec = PoissonSpec(float(alpha / m), grid.seed + idx, grid.samples)
        params = DegParams(lam, m, r)
        for n in range(grid.mc_nmax + 1):
            est = estimate_deg_moment(params, n, alpha, spec)
            if not est.passes(grid.mc_tolerance):
                _fail(report, identity=check.id, n=n, m=m, r=r, lam=lam, alpha=alpha,
                      seed=spec.seed, mean=est.mean, std_error=est.std_error,
                      target_exact=est.target_exact)
                break


# -- dispatch -------------------------------------------------------------------

def run_check(check: IdentityCheck, rhs: RhsFn | None = None) -> CheckReport:
    """Run one check. ``rhs`` replaces the closed form of a theorem check
    (used to confirm that a perturbed formula is caught)."""
    report = CheckReport(check.id)
    start = time.perf_counter()
    cid = check.id
    if cid in MC_CHECKS:
        _run_mc(check, report)
    elif cid == "EQ32":
        _run_eq32(check, report)
    elif cid == "GF_ALL":
        _run_gf_all(check, report)
    elif cid == "LIMIT_L0":
        _run_limit(check, report)
    elif cid == "INV_PAIR":
        _run_inv_pair(check, report)
    else:
        _run_theorem(check, report, rhs)
    report.seconds = time.perf_counter() - start
    return report


def t8_off_by_one(params: DegParams, n: int) -> Poly:
    """The single-sum Whitney formula with its l-range started one too late."""
    return dw._t8(params, n, lo_shift=1)


def t7_off_by_one(params: DegParams, n: int) -> Poly:
    return dw._t7(params, n, lo_shift=1)


MUTANTS = {
    "T8": t8_off_by_one,
    "T7": t7_off_by_one,
}


@dataclass(frozen=True)
class SuiteConfig:
    checks: tuple = CHECK_IDS
    grid: Grid = field(default_factory=Grid)


@dataclass
class SuiteResult:
    reports: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1


def run_suite(config: SuiteConfig = SuiteConfig()) -> SuiteResult:
    reports = []
    for cid in config.checks:
        report = run_check(IdentityCheck(cid, config.grid))
        log.info("%s: %d cells, %d failed, %.2fs", cid, report.cells_run,
                 report.cells_failed, report.seconds)
        reports.append(report)
    if sum(r.cells_run for r in reports) == 0:
        log.warning("suite ran zero cells; check the grid configuration")
    return SuiteResult(reports)


# -- report formatting ----------------------------------------------------------

def format_reports(reports: Sequence[CheckReport], fmt: str = "json") -> str:
    rows = [r.to_dict() for r in reports]
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "cells_run", "cells_failed", "seconds", "witness"])
        for row in rows:
            w.writerow([row["check_id"], row["cells_run"], row["cells_failed"], row["seconds"],
                        json.dumps(row["witness"]) if "witness" in row else ""])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| check | cells | failed | seconds | status |", "|---|---|---|---|---|"]
        for row in rows:
            status = "pass" if row["cells_failed"] == 0 else "FAIL"
            lines.append(f"| {row['check_id']} | {row['cells_run']} | {row['cells_failed']} "
                         f"| {row['seconds']:.2f} | {status} |")
        for row in rows:
            if "witness" in row:
                lines.append("")
                lines.append(f"{row['check_id']} witness: `{json.dumps(row['witness'])}`")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected json, csv or markdown")
