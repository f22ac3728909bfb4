"""Exponential generating functions built from exact truncated series.

Nothing here evaluates (1 + lam t)^(x/lam) numerically. Each generating
function is assembled from series_exp / series_mul / series_compose over
exact coefficients, and :func:`gf_coefficients` returns n! [t^n].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_core import (
    Poly,
    Series,
    exp_series,
    log1p_series,
    rat,
    series_exp,
    series_rescale,
)
from .stirling import DegParams, deg_falling_eval, deg_falling_poly, falling_poly

ORDER_CAP = 32
DEFAULT_ORDER = 16

GF_KINDS = (
    "EXP_DEG", "LOG_DEG", "BELL", "DEG_BELL", "S1DEG", "S2DEG",
    "DEG_WHITNEY", "DEG_DOWLING", "DEG_R_DOWLING", "CHARLIER",
)
_NEEDS_K = ("S1DEG", "S2DEG", "DEG_WHITNEY")


@dataclass(frozen=True)
class GfSpec:
    kind: str
    params: DegParams = field(default_factory=DegParams)
    k: int | None = None
    order: int = 10
    # rational alpha for CHARLIER; x stays symbolic
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.kind not in GF_KINDS:
            raise ValueError(f"unknown generating function {self.kind!r}; expected one of {GF_KINDS}")
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if self.order > ORDER_CAP:
            raise ValueError(f"order {self.order} exceeds cap {ORDER_CAP}")
        if self.kind in _NEEDS_K and (self.k is None or self.k < 0):
            raise ValueError(f"{self.kind} requires a nonnegative block index k")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", rat(self.alpha))


def e_lambda_series(x, lam, order: int) -> Series:
    """e_lam^x(t) = sum_n (x)_{n,lam} t^n / n!.

    ``x=None`` keeps x symbolic (coefficients are polynomials in x).
    """
    lam = rat(lam)
    if x is None:
        coeffs = [deg_falling_poly(n, lam) / math.factorial(n) for n in range(order + 1)]
    else:
        x = rat(x)
        coeffs = [deg_falling_eval(x, n, lam) / math.factorial(n) for n in range(order + 1)]
    return Series(coeffs, order)


def log_lambda_series(lam, order: int) -> Series:
    """log_lam(1 + t), the compositional inverse of e_lam(t) - 1."""
    lam = rat(lam)
    if lam == 0:
        return log1p_series(order)
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(lam ** (n - 1) * deg_falling_eval(1, n, 1 / lam) / math.factorial(n))
    return Series(coeffs, order)


def e_lambda_via_log(x, lam, order: int) -> Series:
    """e_lam^x(t) as exp((x/lam) log(1 + lam t)); an independent route."""
    lam = rat(lam)
    xs = Poly.gen("x") if x is None else rat(x)
    if lam == 0:
        return series_exp(Series.t(order) * xs)
    log_part = series_rescale(log1p_series(order), lam)
    return series_exp(log_part * (xs / lam))


def rescaled_e_lambda(m: int, lam, order: int) -> Series:
    """e_{lam/m}(m t), which equals e_lam^m(t)."""
    return series_rescale(e_lambda_series(1, rat(lam) / m, order), m)


def binomial_series(order: int) -> Series:
    """(1 + t)^x with x symbolic: sum_n (x)_n t^n / n!."""
    return Series([falling_poly(n) / math.factorial(n) for n in range(order + 1)], order)


def build_series(spec: GfSpec) -> Series:
    p, N = spec.params, spec.order
    lam, m, r = p.lam, p.m, p.r
    x = Poly.gen("x")
    kind = spec.kind
    if kind == "EXP_DEG":
        return e_lambda_via_log(None, lam, N)
    if kind == "LOG_DEG":
        return log_lambda_series(lam, N)
    if kind == "BELL":
        return series_exp((exp_series(N) - 1) * x)
    if kind == "DEG_BELL":
        return series_exp((e_lambda_series(1, lam, N) - 1) * x)
    if kind == "S1DEG":
        return log_lambda_series(lam, N) ** spec.k / math.factorial(spec.k)
    if kind == "S2DEG":
        return (e_lambda_series(1, lam, N) - 1) ** spec.k / math.factorial(spec.k)
    if kind == "DEG_WHITNEY":
        inner = (e_lambda_series(m, lam, N) - 1) / m
        return e_lambda_series(1, lam, N) * inner ** spec.k / math.factorial(spec.k)
    if kind == "DEG_DOWLING":
        inner = (e_lambda_series(m, lam, N) - 1) * (x / m)
        return e_lambda_series(1, lam, N) * series_exp(inner)
    if kind == "DEG_R_DOWLING":
        inner = (e_lambda_series(m, lam, N) - 1) * (x / m)
        return e_lambda_series(r, lam, N) * series_exp(inner)
    if kind == "CHARLIER":
        if spec.alpha is None:
            raise ValueError("CHARLIER requires a rational alpha")
        return series_exp(Series.t(N) * (-spec.alpha)) * binomial_series(N)
    raise ValueError(kind)


def gf_coefficients(spec: GfSpec) -> list:
    """n! [t^n] of the generating function named by ``spec``, n = 0..order."""
    return build_series(spec).egf()
