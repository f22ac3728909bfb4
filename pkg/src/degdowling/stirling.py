"""Falling factorials, Stirling numbers (classical and degenerate) and Bell polynomials.

The degenerate Stirling numbers are defined here as connection coefficients
between polynomial bases and computed by triangular back-substitution::

    (x)_n       = sum_k S1deg(n, k; lam) (x)_{k,lam}
    (x)_{n,lam} = sum_k S2deg(n, k; lam) (x)_k

Every lambda, including 0, is admitted; lambda = 0 gives the classical
numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exact_core import Poly, rat

NMAX_CAP = 64

KINDS = ("S1", "S2", "S1deg", "S2deg")


@dataclass(frozen=True)
class DegParams:
    """Parameters (lam, m, r) of the degenerate Whitney/Dowling families."""

    lam: Fraction = Fraction(0)
    m: int = 1
    r: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lam", rat(self.lam))
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.r, int) or self.r < 0:
            raise ValueError(f"r must be an integer >= 0, got {self.r!r}")


@dataclass(frozen=True)
class TriangleTable:
    kind: str
    lam: Fraction
    entries: tuple

    @property
    def nmax(self) -> int:
        return len(self.entries) - 1

    def __call__(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return Fraction(0)
        return self.entries[n][k]

    def rows(self) -> list[list[Fraction]]:
        """Rows padded with zeros to a square (nmax+1) x (nmax+1) array."""
        size = self.nmax + 1
        return [list(row) + [Fraction(0)] * (size - len(row)) for row in self.entries]


@lru_cache(maxsize=None)
def deg_falling_poly(n: int, lam) -> Poly:
    """(x)_{n,lam} = x (x - lam) ... (x - (n-1) lam) as a polynomial in x."""
    lam = rat(lam)
    p = Poly([1])
    for j in range(n):
        p = p * Poly([-j * lam, 1])
    return p


@lru_cache(maxsize=None)
def falling_poly(n: int) -> Poly:
    """(x)_n = x (x-1) ... (x-n+1)."""
    p = Poly([1])
    for j in range(n):
        p = p * Poly([-j, 1])
    return p


def deg_falling_eval(x, n: int, lam) -> Fraction:
    """Exact value of (x)_{n,lam} at a rational point."""
    x, lam = rat(x), rat(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x - j * lam
    return out


def basis_coordinates(p: Poly, basis: Callable[[int], Poly]) -> list[Fraction]:
    """Coordinates of ``p`` in a triangular basis (deg basis(k) == k).

    Back-substitution from the top degree; the basis need not be monic.
    """
    rest = p
    coords = [Fraction(0)] * (max(p.degree, 0) + 1)
    while not rest.is_zero():
        d = rest.degree
        b = basis(d)
        if b.degree != d:
            raise ValueError(f"basis element {d} has degree {b.degree}")
        c = rest.leading() / b.leading()
        coords[d] = c
        rest = rest - b * c
        if not rest.is_zero() and rest.degree >= d:
            raise ArithmeticError("back-substitution failed to reduce degree")
    return coords


def to_falling_basis(p: Poly) -> list[Fraction]:
    return basis_coordinates(p, falling_poly)


def to_deg_falling_basis(p: Poly, lam) -> list[Fraction]:
    lam = rat(lam)
    return basis_coordinates(p, lambda k: deg_falling_poly(k, lam))


def _pad(row: Sequence[Fraction], n: int) -> tuple:
    row = list(row)[: n + 1]
    return tuple(row + [Fraction(0)] * (n + 1 - len(row)))


@lru_cache(maxsize=None)
def stirling_row(kind: str, lam, n: int) -> tuple:
    """Row n (k = 0..n) of the requested Stirling triangle."""
    lam = rat(lam)
    if kind == "S1":
        row = falling_poly(n).coeffs
    elif kind == "S2":
        row = to_falling_basis(Poly.monomial(n))
    elif kind == "S1deg":
        row = to_deg_falling_basis(falling_poly(n), lam)
    elif kind == "S2deg":
        row = to_falling_basis(deg_falling_poly(n, lam))
    else:
        raise ValueError(f"unknown Stirling kind {kind!r}; expected one of {KINDS}")
    return _pad(row, n)


@lru_cache(maxsize=256)
def stirling_table(kind: str, lam, nmax: int) -> TriangleTable:
    if nmax < 0 or nmax > NMAX_CAP:
        raise ValueError(f"nmax must lie in [0, {NMAX_CAP}], got {nmax}")
    lam = rat(lam) if kind.endswith("deg") else Fraction(0)
    return TriangleTable(kind, lam, tuple(stirling_row(kind, lam, n) for n in range(nmax + 1)))


def stirling1(n: int, k: int) -> Fraction:
    return stirling_row("S1", 0, n)[k] if 0 <= k <= n else Fraction(0)


def stirling2(n: int, k: int) -> Fraction:
    return stirling_row("S2", 0, n)[k] if 0 <= k <= n else Fraction(0)


def deg_stirling1(n: int, k: int, lam) -> Fraction:
    return stirling_row("S1deg", rat(lam), n)[k] if 0 <= k <= n else Fraction(0)


def deg_stirling2(n: int, k: int, lam) -> Fraction:
    return stirling_row("S2deg", rat(lam), n)[k] if 0 <= k <= n else Fraction(0)


@lru_cache(maxsize=None)
def bell_poly(n: int) -> Poly:
    """phi_n(x) = sum_k S2(n, k) x^k."""
    return Poly(stirling_row("S2", 0, n))


@lru_cache(maxsize=None)
def deg_bell_poly(n: int, lam) -> Poly:
    """phi_{n,lam}(x) = sum_k S2deg(n, k; lam) x^k."""
    return Poly(stirling_row("S2deg", rat(lam), n))
