"""Independent reference computations used by the tests.

None of these go through the package's basis conversions or series engine.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

import sympy as sp


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def partition_counts(n: int) -> list[int]:
    """Number of set partitions of an n-set by block count (brute force)."""
    c = Counter(len(p) for p in set_partitions(range(n)))
    return [c.get(k, 0) for k in range(n + 1)]


def bell_number(n: int) -> int:
    return sum(1 for _ in set_partitions(range(n)))


def s2_recurrence_deg(nmax: int, lam: Fraction) -> list[list[Fraction]]:
    """S_{2,lam} from S(n+1,k) = S(n,k-1) + (k - n lam) S(n,k)."""
    t = [[Fraction(0)] * (nmax + 2) for _ in range(nmax + 1)]
    t[0][0] = Fraction(1)
    for n in range(nmax):
        for k in range(n + 2):
            left = t[n][k - 1] if k >= 1 else Fraction(0)
            t[n + 1][k] = left + (k - n * lam) * t[n][k]
    return [row[: n + 1] for n, row in enumerate(t)]


X, T, A, L = sp.symbols("x t alpha lam")


def sympy_egf_coeffs(expr, order: int):
    """n! [t^n] of a sympy expression, via sympy's own series expansion."""
    ser = sp.series(expr, T, 0, order + 1).removeO()
    return [sp.expand(ser.coeff(T, n) * math.factorial(n)) for n in range(order + 1)]


def to_fraction(v) -> Fraction:
    v = sp.Rational(sp.simplify(v))
    return Fraction(int(v.p), int(v.q))


def poly_coeffs(expr, var) -> list[Fraction]:
    """Ascending rational coefficients of a univariate sympy polynomial."""
    p = sp.Poly(sp.expand(expr), var)
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def falling_coords_by_differences(f, n: int) -> list[Fraction]:
    """Coordinates of a degree-<=n polynomial function in the (x)_k basis,
    from Newton's forward differences at 0: c_k = Delta^k f(0) / k!."""
    values = [Fraction(f(i)) for i in range(n + 1)]
    out = []
    for k in range(n + 1):
        out.append(values[0] / math.factorial(k))
        values = [b - a for a, b in zip(values, values[1:])]
    return out
