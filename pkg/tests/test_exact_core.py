from fractions import Fraction as F
import math

import pytest
from hypothesis import given, settings, strategies as st

from degdowling.exact_core import (
    Poly, Series, binom, exp_series, log1p_series, rat, rat_str,
    series_compose, series_exp, series_mul, series_rescale,
)

small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_rats, max_size=7).map(Poly)


def zero_const_series(order):
    return st.lists(small_rats, min_size=order, max_size=order).map(
        lambda cs: Series([0] + cs, order))


def test_rat_arithmetic():
    assert F(1, 2) + F(1, 3) == F(5, 6)
    assert rat("2/4") == F(1, 2)
    assert rat_str(F(2, 4)) == "1/2"
    assert rat_str(F(-6, 3)) == "-2"
    assert 7 * F(0) == 0
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)


@given(small_rats, small_rats, small_rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a != 0:
        assert a * (1 / a) == 1
    assert a + (-a) == 0


def test_poly_examples():
    x = Poly.gen()
    assert (x + 1) * (x - 1) == Poly([-1, 0, 1])
    assert (x**2 - 1)(3) == 8
    assert (x**2 - 1).coeff(1) == 0
    assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))
    assert Poly([0, 0]).coeffs == ()
    assert Poly([]).degree == -1


def test_mixed_indeterminates_rejected():
    with pytest.raises(ValueError):
        Poly.gen("x") + Poly.gen("alpha")
    with pytest.raises(ValueError):
        Poly([1], var="y")


@given(polys, polys, small_rats)
def test_evaluation_is_ring_homomorphism(p, q, c):
    assert (p * q)(c) == p(c) * q(c)
    assert (p + q)(c) == p(c) + q(c)


@given(polys.filter(lambda p: not p.is_zero()), polys.filter(lambda p: not p.is_zero()))
def test_degree_is_additive(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(polys, polys, small_rats)
def test_compose_matches_nested_evaluation(p, q, c):
    assert p.compose(q)(c) == p(q(c))


def test_nested_coefficients():
    a = Poly.gen("alpha")
    p = Poly([a, 1], "x")          # alpha + x
    assert p(F(2)) == a + 2
    assert (p * p).coeff(0) == a * a


def test_binom():
    assert binom(5, 2) == 10
    assert all(binom(n, 0) == 1 for n in range(10))
    assert binom(4, 7) == 0
    assert binom(4, -1) == 0


def test_series_mul_examples():
    N = 2
    assert series_mul(Series([1, 1], N), Series([1, -1], N)) == Series([1, 0, -1], N)
    sq = series_mul(exp_series(3), exp_series(3))
    # exp(2t) coefficients computed directly
    assert list(sq.coeffs) == [F(2**n, math.factorial(n)) for n in range(4)]
    assert list(sq.coeffs) == [1, 2, 2, F(4, 3)]
    assert series_mul(exp_series(3), Series.zero(3)) == Series.zero(3)
    with pytest.raises(ValueError):
        series_mul(Series([1], 2), Series([1], 3))


def test_series_exp_examples():
    assert series_exp(Series.t(3)) == Series([1, 1, F(1, 2), F(1, 6)], 3)
    assert series_exp(Series.zero(4)) == Series.one(4)
    x = Poly.gen()
    got = series_exp(Series.t(2) * x)
    assert got == Series([1, x, x * x / 2], 2)
    with pytest.raises(ValueError):
        series_exp(Series([1, 1], 3))


def test_series_compose_examples():
    assert series_compose(Series([1, 1], 3), Series([0, 2], 3)) == Series([1, 2], 3)
    assert series_compose(exp_series(5), log1p_series(5)) == Series([1, 1], 5)
    s = Series([3, 1, 4, 1, 5], 4)
    assert series_compose(s, Series.zero(4)) == Series([3], 4)
    with pytest.raises(ValueError):
        series_compose(s, Series([1, 1], 4))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 16).flatmap(lambda N: st.tuples(zero_const_series(N), zero_const_series(N))))
def test_exp_of_sum_is_product_of_exps(pair):
    a, b = pair
    assert series_exp(a) * series_exp(b) == series_exp(a + b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8).flatmap(lambda N: st.tuples(zero_const_series(N), zero_const_series(N))))
def test_exp_and_compose_agree_with_direct_power_sums(pair):
    s, inner = pair
    N = s.order
    direct_exp = Series.zero(N)
    power = Series.one(N)
    for k in range(N + 1):
        direct_exp = direct_exp + power / math.factorial(k)
        power = power * s
    assert series_exp(s) == direct_exp
    outer = series_exp(s)
    direct = Series.zero(N)
    power = Series.one(N)
    for c in outer.coeffs:
        direct = direct + power * c
        power = power * inner
    assert series_compose(outer, inner) == direct


def test_rescale_and_json():
    s = Series([1, 1, 1], 2)
    assert series_rescale(s, 3) == Series([1, 3, 9], 2)
    assert s.to_json() == {"order": 2, "coeffs": ["1", "1", "1"]}
    assert Poly([F(1, 2), -1]).to_json() == ["1/2", "-1"]
