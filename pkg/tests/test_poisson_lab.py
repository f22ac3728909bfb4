from fractions import Fraction as F
import math

import numpy as np
import pytest

from degdowling.dowling import deg_r_dowling_poly
from degdowling.poisson_lab import (
    McEstimate, PoissonSpec, estimate_deg_moment, estimate_raw_moment, poisson_counts, poisson_sample,
)
from degdowling.stirling import DegParams, bell_poly, deg_falling_eval


def test_tiny_rate_gives_zeros():
    s = poisson_sample(PoissonSpec(1e-9, 3, 10_000))
    assert s.mean() < 1e-6


def test_mean_at_rate_two():
    s = poisson_sample(PoissonSpec(2.0, 11, 1_000_000))
    assert abs(s.mean() - 2) <= 4 * math.sqrt(2) / 1e3


def test_same_seed_same_draws():
    spec = PoissonSpec(3.5, 99, 50_000, shards=3)
    assert np.array_equal(poisson_sample(spec), poisson_sample(spec))
    assert not np.array_equal(poisson_sample(spec), poisson_sample(PoissonSpec(3.5, 100, 50_000, shards=3)))


def test_empirical_pmf():
    rate, N = 3.5, 400_000
    counts = poisson_counts(PoissonSpec(rate, 5, N))
    for i in range(12):
        p = math.exp(-rate) * rate**i / math.factorial(i)
        se = math.sqrt(p * (1 - p) / N)
        assert abs(counts.get(i, 0) / N - p) <= 5 * se


def test_large_rate_mean_and_variance():
    s = poisson_sample(PoissonSpec(100.0, 8, 200_000))
    assert abs(s.mean() - 100) <= 5 * math.sqrt(100 / 200_000)
    assert abs(s.var() - 100) < 2.0


def test_spec_validation():
    for bad in (0.0, -1.0, 101.0):
        with pytest.raises(ValueError):
            PoissonSpec(bad, 0, 10)
    with pytest.raises(ValueError):
        PoissonSpec(1.0, 0, 0)
    with pytest.raises(ValueError):
        PoissonSpec(1.0, 0, 3, shards=4)


def test_n0_is_exact():
    est = estimate_deg_moment(DegParams(F(1, 2), 2, 3), 0, 2, PoissonSpec(1.0, 1, 1000))
    assert est.mean == 1.0 and est.std_error == 0.0 and est.passes()


def test_classical_raw_moment_target():
    for n in range(5):
        est = estimate_deg_moment(DegParams(0, 1, 0), n, F(3, 2), PoissonSpec(1.5, 4, 200_000))
        assert est.target_exact == float(bell_poly(n)(F(3, 2)))
        assert est.passes(5)


def test_spec_mc_example():
    params = DegParams(F(1, 2), 2, 1)
    est = estimate_deg_moment(params, 3, 2, PoissonSpec(1.0, 42, 1_000_000))
    assert est.target_exact == float(deg_r_dowling_poly(params, 3)(2)) == 53.0
    assert abs(est.mean - est.target_exact) <= 5 * est.std_error


def test_std_error_matches_numpy():
    params = DegParams(F(-1, 3), 2, 2)
    spec = PoissonSpec(1.5, 17, 20_000)
    est = estimate_deg_moment(params, 3, 3, spec)
    draws = poisson_sample(spec)
    vals = np.array([float(deg_falling_eval(2 * int(v) + 2, 3, F(-1, 3))) for v in draws])
    assert est.mean == pytest.approx(vals.mean(), rel=1e-12)
    assert est.std_error == pytest.approx(vals.std(ddof=1) / math.sqrt(len(vals)), rel=1e-9)


def test_raw_moment_examples():
    spec = PoissonSpec(1.0, 23, 200_000)
    assert estimate_raw_moment(1, 1, spec).target_exact == 1.0
    e2 = estimate_raw_moment(2, 1, spec)
    assert e2.target_exact == 2.0 and e2.passes()
    ed = estimate_raw_moment(2, 1, spec, step=F(1, 3))
    assert ed.target_exact == float(F(5, 3)) and ed.passes()


def test_reproducible_estimates():
    params = DegParams(F(1, 2), 2, 1)
    spec = PoissonSpec(1.0, 7, 100_000, shards=4)
    a = estimate_deg_moment(params, 4, 2, spec)
    b = estimate_deg_moment(params, 4, 2, spec)
    c = estimate_deg_moment(params, 4, 2, spec, workers=4)
    assert a == b == c


def test_errors():
    spec = PoissonSpec(1.0, 0, 100)
    with pytest.raises(ValueError, match="exceeds"):
        estimate_deg_moment(DegParams(0, 1, 1), 7, 1, spec)
    with pytest.raises(ValueError, match="does not match"):
        estimate_deg_moment(DegParams(0, 2, 1), 2, 1, spec)
    with pytest.raises(ValueError):
        estimate_raw_moment(9, 1, spec)


def test_estimate_z_and_dict():
    e = McEstimate(1.0, 0.5, 10, 3, 2.0)
    assert e.z == 2.0 and e.passes(5) and not e.passes(1)
    assert e.to_dict()["pass"] is True
    assert McEstimate(1.0, 0.0, 10, 3, 2.0).z == math.inf
