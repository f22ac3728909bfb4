"""Exact rationals, univariate polynomials and truncated power series.

Rationals are :class:`fractions.Fraction`. Polynomials are dense and
immutable; a polynomial's coefficients may themselves be polynomials in a
different indeterminate, which is how the Charlier family carries a
symbolic ``alpha`` inside a polynomial in ``x``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

VARS = ("x", "alpha")

Rat = Fraction
Scalar = Union[int, Fraction]


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(q) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _coerce(c):
    if isinstance(c, (Fraction, Poly)):
        return c
    return rat(c)


def _is_zero(c) -> bool:
    return c == 0


class Poly:
    """Dense univariate polynomial, ``coeffs[i]`` is the coefficient of ``var**i``."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        if var not in VARS:
            raise ValueError(f"unknown indeterminate {var!r}; expected one of {VARS}")
        cs = [_coerce(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls([c], var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    # -- ring structure -------------------------------------------------

    def _other(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise ValueError(
                    f"mixed indeterminates: {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            inv = 1 / Fraction(other)
            return Poly([c * inv for c in self.coeffs], self.var)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Poly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs and not other.coeffs:
                return True
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.var, self.coeffs))

    # -- evaluation and substitution -----------------------------------

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or a Poly (substitution)."""
        if isinstance(value, Poly):
            return self.compose(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute ``inner`` for the indeterminate; result lives in ``inner.var``."""
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    # -- presentation -----------------------------------------------------

    def to_json(self):
        return [c.to_json() if isinstance(c, Poly) else rat_str(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, Poly) or (
                isinstance(c, Fraction) and c.denominator != 1) else str(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class Series:
    """Power series in ``t`` truncated after ``t**order``.

    Coefficients are Fractions or Polys; both may be mixed in one series
    provided the Polys share an indeterminate.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [_coerce(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "Series":
        return cls([0, 1], order)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def constant(self):
        return self.coeffs[0]

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, Series):
            self._check(other)
            return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)
        return Series([self.coeffs[0] + other, *self.coeffs[1:]], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return NotImplemented
        return Series([c / other for c in self.coeffs], self.order)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Series.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def egf(self) -> list:
        """``n! * [t^n]`` for n = 0..order."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [c.to_json() if isinstance(c, Poly) else rat_str(c)
                       for c in self.coeffs],
        }

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"


def series_mul(a: Series, b: Series) -> Series:
    a._check(b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if _is_zero(ai):
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if not _is_zero(bj):
                out[i + j] = out[i + j] + ai * bj
    return Series(out, n)


def series_exp(s: Series) -> Series:
    """exp(s) for a series with zero constant term.

    Uses e_n = (1/n) * sum_{k=1..n} k s_k e_{n-k}, which follows from
    E' = s' E and reproduces sum_k s^k/k! exactly.
    """
    if not _is_zero(s.constant()):
        raise ValueError("series_exp requires a zero constant term")
    n = s.order
    e = [Fraction(1)] + [Fraction(0)] * n
    for j in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, j + 1):
            sk = s.coeffs[k]
            if not _is_zero(sk):
                acc = acc + sk * e[j - k] * k
        e[j] = acc / j
    return Series(e, n)


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)) by Horner's scheme; ``inner`` must vanish at t=0."""
    outer._check(inner)
    if not _is_zero(inner.constant()):
        raise ValueError("series_compose requires inner series with zero constant term")
    acc = Series.zero(outer.order)
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def series_rescale(s: Series, c) -> Series:
    """Substitute t -> c*t."""
    c = rat(c)
    return Series([a * c**n for n, a in enumerate(s.coeffs)], s.order)


def exp_series(order: int) -> Series:
    return Series([Fraction(1, math.factorial(n)) for n in range(order + 1)], order)


def log1p_series(order: int) -> Series:
    """log(1+t)."""
    return Series([0] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)], order)


def from_egf(values: Sequence, order: int | None = None) -> Series:
    """Series whose ``n! * [t^n]`` equals ``values[n]``."""
    if order is None:
        order = len(values) - 1
    return Series([v / math.factorial(n) for n, v in enumerate(values)], order)
