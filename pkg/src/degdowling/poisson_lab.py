"""Seeded Poisson sampling and Monte-Carlo estimates of degenerate moments.

Draws come from CDF inversion on a table built with the pmf recurrence
p(i+1) = p(i) * rate / (i+1). The integrand is evaluated exactly once per
distinct sampled value and the sample mean and variance are accumulated
as exact rationals from value counts. Floating point enters only in the
final conversion, so merging shards is exact and order independent.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .dowling import deg_r_dowling_poly
from .exact_core import rat
from .stirling import DegParams, bell_poly, deg_bell_poly, deg_falling_eval

RATE_CAP = 100.0
N_CAP = 6


@dataclass(frozen=True)
class PoissonSpec:
    rate: float
    seed: int
    n_samples: int
    shards: int = 1

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError(f"rate must be positive, got {self.rate}")
        if self.rate > RATE_CAP:
            raise ValueError(f"rate {self.rate} exceeds the inversion cap {RATE_CAP}")
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.shards < 1 or self.shards > self.n_samples:
            raise ValueError("shards must lie in [1, n_samples]")


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    n_samples: int
    seed: int
    target_exact: float

    @property
    def z(self) -> float:
        """|mean - target| in units of the standard error."""
        diff = abs(self.mean - self.target_exact)
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.inf
        return diff / self.std_error

    def passes(self, k: float = 5.0) -> bool:
        return abs(self.mean - self.target_exact) <= k * self.std_error

    def to_dict(self, k: float = 5.0) -> dict:
        return {
            "mean": self.mean,
            "std_error": self.std_error,
            "target_exact": self.target_exact,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "pass": self.passes(k),
        }


def _cdf_table(rate: float) -> np.ndarray:
    p = math.exp(-rate)
    cdf = [p]
    i = 0
    # stop once the remaining tail is below double resolution
    while i < rate or p > 1e-17 * cdf[-1]:
        p *= rate / (i + 1)
        i += 1
        cdf.append(cdf[-1] + p)
    return np.asarray(cdf)


def _shard_sizes(spec: PoissonSpec) -> list[int]:
    base, extra = divmod(spec.n_samples, spec.shards)
    return [base + (1 if i < extra else 0) for i in range(spec.shards)]


def _shard_seeds(spec: PoissonSpec) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(spec.seed).spawn(spec.shards)


def _draw(cdf: np.ndarray, seed: np.random.SeedSequence, size: int) -> np.ndarray:
    u = np.random.default_rng(seed).random(size)
    idx = np.searchsorted(cdf, u, side="right")
    return np.minimum(idx, len(cdf) - 1).astype(np.int64)


def poisson_sample(spec: PoissonSpec) -> np.ndarray:
    """All draws for ``spec``, shards concatenated in shard order."""
    cdf = _cdf_table(spec.rate)
    parts = [_draw(cdf, s, n) for s, n in zip(_shard_seeds(spec), _shard_sizes(spec))]
    return np.concatenate(parts)


def poisson_counts(spec: PoissonSpec, workers: int | None = None) -> Counter:
    """Histogram of the draws; shards may run on a thread pool."""
    cdf = _cdf_table(spec.rate)
    jobs = list(zip(_shard_seeds(spec), _shard_sizes(spec)))

    def one(job):
        values, counts = np.unique(_draw(cdf, *job), return_counts=True)
        return Counter(dict(zip(values.tolist(), counts.tolist())))

    if workers and workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(one, jobs))
    else:
        parts = [one(job) for job in jobs]
    total = Counter()
    for part in parts:
        total.update(part)
    return total


def _estimate(counts: Counter, integrand: Callable[[int], Fraction],
              spec: PoissonSpec, target: Fraction) -> McEstimate:
    N = sum(counts.values())
    values = {v: integrand(v) for v in counts}
    mean = sum(Fraction(c) * values[v] for v, c in counts.items()) / N
    if N > 1:
        ss = sum(c * (values[v] - mean) ** 2 for v, c in counts.items())
        se = math.sqrt(ss / (N - 1) / N)
    else:
        se = 0.0
    return McEstimate(float(mean), se, N, spec.seed, float(target))


def _check_n(n: int):
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if n > N_CAP:
        raise ValueError(
            f"moment order {n} exceeds {N_CAP}; the variance of degenerate factorial "
            "moments grows too fast for a 5-SE budget at desk sample sizes. "
            "Use a larger n_samples and raise N_CAP deliberately.")


def estimate_deg_moment(params: DegParams, n: int, alpha, spec: PoissonSpec,
                        workers: int | None = None) -> McEstimate:
    """Estimate E[(mX + r)_{n,lam}] for X ~ Poisson(alpha/m).

    The exact target is the degenerate r-Dowling polynomial at alpha.
    """
    _check_n(n)
    alpha = rat(alpha)
    rate = float(alpha / params.m)
    if not math.isclose(spec.rate, rate, rel_tol=1e-12):
        raise ValueError(f"spec.rate={spec.rate} does not match alpha/m={rate}")
    lam, m, r = params.lam, params.m, params.r
    target = deg_r_dowling_poly(params, n)(alpha)
    counts = poisson_counts(spec, workers)
    return _estimate(counts, lambda v: deg_falling_eval(m * v + r, n, lam), spec, target)


def estimate_raw_moment(n: int, alpha, spec: PoissonSpec, step=None,
                        workers: int | None = None) -> McEstimate:
    """Estimate E[X^n] (or E[(X)_{n,step}]) for X ~ Poisson(alpha)."""
    _check_n(n)
    alpha = rat(alpha)
    if not math.isclose(spec.rate, float(alpha), rel_tol=1e-12):
        raise ValueError(f"spec.rate={spec.rate} does not match alpha={float(alpha)}")
    counts = poisson_counts(spec, workers)
    if step is None:
        return _estimate(counts, lambda v: Fraction(v) ** n, spec, bell_poly(n)(alpha))
    mu = rat(step)
    return _estimate(counts, lambda v: deg_falling_eval(v, n, mu), spec,
                     deg_bell_poly(n, mu)(alpha))
