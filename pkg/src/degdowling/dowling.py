"""Whitney numbers, Dowling polynomials, Charlier polynomials and the
closed-form moment formulas that connect them.

Every closed form in :func:`thm_rhs` returns a polynomial in ``alpha`` at a
fixed rational lambda, so two closed forms can be compared structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_core import Poly, binom, rat
from .stirling import (
    DegParams,
    bell_poly,
    deg_bell_poly,
    deg_falling_eval,
    deg_falling_poly,
    deg_stirling2,
    falling_poly,
    stirling1,
    to_falling_basis,
    basis_coordinates,
)

WHITNEY_KINDS = ("W_classical", "V_classical", "W_deg", "W_r_deg")
THEOREMS = ("T2", "C3", "C5", "T6", "T7", "T8", "T9", "T10", "T10R", "T11")


@dataclass(frozen=True)
class WhitneyTable:
    kind: str
    params: DegParams
    entries: tuple

    def __call__(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return Fraction(0)
        return self.entries[n][k]

    def rows(self) -> list[list[Fraction]]:
        size = len(self.entries)
        return [list(row) + [Fraction(0)] * (size - len(row)) for row in self.entries]


# -- Whitney numbers ----------------------------------------------------------

@lru_cache(maxsize=None)
def _deg_r_whitney_row(lam: Fraction, m: int, r: int, n: int) -> tuple:
    # (mx+r)_{n,lam} in the basis m^k (x)_k
    expanded = deg_falling_poly(n, lam).compose(Poly([r, m]))
    coords = to_falling_basis(expanded)
    coords += [Fraction(0)] * (n + 1 - len(coords))
    return tuple(c / m**k for k, c in enumerate(coords))


def deg_r_whitney2(params: DegParams, n: int, k: int) -> Fraction:
    """Degenerate r-Whitney number of the second kind W^{(r)}_{m,lam}(n, k)."""
    if k < 0 or k > n:
        return Fraction(0)
    return _deg_r_whitney_row(params.lam, params.m, params.r, n)[k]


def deg_whitney2(params: DegParams, n: int, k: int) -> Fraction:
    return deg_r_whitney2(DegParams(params.lam, params.m, 1), n, k)


@lru_cache(maxsize=None)
def _whitney_row(m: int, n: int) -> tuple:
    coords = to_falling_basis(Poly([1, m]) ** n)
    coords += [Fraction(0)] * (n + 1 - len(coords))
    return tuple(int(c / m**k) for k, c in enumerate(coords))


def whitney_classical(m: int, n: int, k: int) -> int:
    """W_m(n, k): (mx+1)^n = sum_k W_m(n,k) m^k (x)_k."""
    if k < 0 or k > n:
        return 0
    return _whitney_row(m, n)[k]


@lru_cache(maxsize=None)
def _whitney_first_row(m: int, n: int) -> tuple:
    target = falling_poly(n) * m**n
    base = Poly([1, m])
    coords = basis_coordinates(target, lambda k: base**k)
    coords += [Fraction(0)] * (n + 1 - len(coords))
    return tuple(int(c) for c in coords)


def whitney_first(m: int, n: int, k: int) -> int:
    """V_m(n, k): m^n (x)_n = sum_k V_m(n,k) (mx+1)^k."""
    if k < 0 or k > n:
        return 0
    return _whitney_first_row(m, n)[k]


def whitney_table(kind: str, params: DegParams, nmax: int) -> WhitneyTable:
    if kind == "W_classical":
        rows = [tuple(Fraction(whitney_classical(params.m, n, k)) for k in range(n + 1))
                for n in range(nmax + 1)]
    elif kind == "V_classical":
        rows = [tuple(Fraction(whitney_first(params.m, n, k)) for k in range(n + 1))
                for n in range(nmax + 1)]
    elif kind == "W_deg":
        rows = [_deg_r_whitney_row(params.lam, params.m, 1, n) for n in range(nmax + 1)]
    elif kind == "W_r_deg":
        rows = [_deg_r_whitney_row(params.lam, params.m, params.r, n) for n in range(nmax + 1)]
    else:
        raise ValueError(f"unknown Whitney kind {kind!r}; expected one of {WHITNEY_KINDS}")
    return WhitneyTable(kind, params, tuple(rows))


# -- Dowling polynomials --------------------------------------------------------

def dowling_poly(m: int, n: int, var: str = "x") -> Poly:
    return Poly(_whitney_row(m, n), var)


def deg_dowling_poly(params: DegParams, n: int, var: str = "x") -> Poly:
    return Poly(_deg_r_whitney_row(params.lam, params.m, 1, n), var)


def deg_r_dowling_poly(params: DegParams, n: int, var: str = "x") -> Poly:
    return Poly(_deg_r_whitney_row(params.lam, params.m, params.r, n), var)


# -- Charlier polynomials -------------------------------------------------------

@lru_cache(maxsize=None)
def _charlier_symbolic(n: int) -> Poly:
    coeffs = []
    for l in range(n + 1):
        # coefficient of x^l, as a polynomial in alpha
        c = [Fraction(0)] * (n + 1)
        for k in range(l, n + 1):
            c[n - k] += binom(n, k) * (-1) ** (n - k) * stirling1(k, l)
        coeffs.append(Poly(c, "alpha"))
    return Poly(coeffs, "x")


def charlier_poly(n: int, alpha=None) -> Poly:
    """C_n(x; alpha) as a polynomial in x.

    With ``alpha=None`` the x-coefficients are polynomials in a symbolic
    alpha; otherwise they are rationals.
    """
    sym = _charlier_symbolic(n)
    if alpha is None:
        return sym
    a = rat(alpha)
    return Poly([c(a) for c in sym.coeffs], "x")


def charlier_in_alpha(n: int, x, alpha_sub: Poly) -> Poly:
    """C_n(x; a) at rational x with ``a`` replaced by a polynomial in alpha."""
    at_x = _charlier_symbolic(n)(rat(x))
    if not isinstance(at_x, Poly):
        at_x = Poly([at_x], "alpha")
    return at_x.compose(alpha_sub)


# -- closed forms -------------------------------------------------------------

def _alpha_over(m: int) -> Poly:
    return Poly([0, Fraction(1, m)], "alpha")


@lru_cache(maxsize=None)
def _bell_alpha(j: int, m: int) -> Poly:
    """phi_j(alpha/m) as a polynomial in alpha."""
    return bell_poly(j).compose(_alpha_over(m))


@lru_cache(maxsize=None)
def _deg_bell_alpha(k: int, mu: Fraction, m: int) -> Poly:
    """phi_{k,mu}(alpha/m) as a polynomial in alpha."""
    return deg_bell_poly(k, mu).compose(_alpha_over(m))


def _from_coeffs(coeffs) -> Poly:
    return Poly(coeffs, "alpha")


def _t2(p: DegParams, n: int) -> Poly:
    lam, m = p.lam, p.m
    mu = lam / m
    out = []
    for j in range(n + 1):
        s = Fraction(0)
        for k in range(j, n + 1):
            s += binom(n, k) * deg_falling_eval(1, n - k, lam) * m ** (k - j) * deg_stirling2(k, j, mu)
        out.append(s)
    return _from_coeffs(out)


def _c3(p: DegParams, n: int) -> Poly:
    lam = p.lam
    out = [(k + 1) * deg_stirling2(n, k + 1, lam) + deg_stirling2(n, k, lam)
           for k in range(n + 1)]
    return _from_coeffs(out)


def _c5(p: DegParams, n: int) -> Poly:
    lam, m, r = p.lam, p.m, p.r
    mu = lam / m
    acc = Poly((), "alpha")
    for k in range(n + 1):
        acc = acc + _deg_bell_alpha(k, mu, m) * (binom(n, k) * deg_falling_eval(r, n - k, lam) * m**k)
    return acc


def _t6(p: DegParams, n: int) -> Poly:
    m = p.m
    acc = Poly((), "alpha")
    for j in range(n + 1):
        inner = Fraction(0)
        for k in range(j, n + 1):
            inner += deg_r_whitney2(p, n, k) * m**k * stirling1(k, j)
        acc = acc + _bell_alpha(j, m) * inner
    return acc


def _t7(p: DegParams, n: int, lo_shift: int = 0) -> Poly:
    lam, m, r = p.lam, p.m, p.r
    mu = lam / m
    out = []
    for j in range(n + 1):
        s = Fraction(0)
        for k in range(j, n + 1):
            outer = binom(n, k) * deg_falling_eval(r - 1, n - k, lam)
            if outer == 0:
                continue
            for l in range(j + lo_shift, k + 1):
                s += (outer * binom(k, l) * deg_falling_eval(1, k - l, lam)
                      * m ** (l - j) * deg_stirling2(l, j, mu))
        out.append(s)
    return _from_coeffs(out)


def _t8(p: DegParams, n: int, lo_shift: int = 0) -> Poly:
    lam, m, r = p.lam, p.m, p.r
    mu = lam / m
    out = []
    for j in range(n + 1):
        s = Fraction(0)
        for l in range(j + lo_shift, n + 1):
            s += binom(n, l) * deg_falling_eval(r, n - l, lam) * m ** (l - j) * deg_stirling2(l, j, mu)
        out.append(s)
    return _from_coeffs(out)


def _t9(p: DegParams, n: int) -> Poly:
    mu = p.lam / p.m
    acc = Poly((), "alpha")
    for k in range(n + 1):
        c0 = charlier_in_alpha(k, 0, Poly.gen("alpha"))
        acc = acc + c0 * ((-1) ** k * deg_stirling2(n, k, mu))
    return acc


def _t10(p: DegParams, n: int) -> Poly:
    m = p.m
    mu = p.lam / m
    sub = Poly([0, Fraction(-1, m)], "alpha")
    acc = Poly((), "alpha")
    for k in range(n + 1):
        acc = acc + charlier_in_alpha(k, 1, sub) * (m**n * deg_stirling2(n, k, mu))
    return acc


def _t10r(p: DegParams, n: int) -> Poly:
    lam, m, r = p.lam, p.m, p.r
    mu = lam / m
    sub = Poly([0, Fraction(-1, m)], "alpha")
    acc = Poly((), "alpha")
    for j in range(n + 1):
        inner = Fraction(0)
        for k in range(j, n + 1):
            inner += binom(n, k) * deg_falling_eval(r - m, n - k, lam) * deg_stirling2(k, j, mu) * m**k
        acc = acc + charlier_in_alpha(j, 1, sub) * inner
    return acc


def _t11(p: DegParams, n: int) -> Poly:
    m, r = p.m, p.r
    mu = p.lam / m
    sub = Poly([0, Fraction(-1, m)], "alpha")
    acc = Poly((), "alpha")
    for k in range(n + 1):
        acc = acc + charlier_in_alpha(k, Fraction(r, m), sub) * deg_stirling2(n, k, mu)
    return acc * m**n


_EVALUATORS = {
    "T2": _t2,
    "C3": _c3,
    "C5": _c5,
    "T6": _t6,
    "T7": _t7,
    "T8": _t8,
    "T9": _t9,
    "T10": _t10,
    "T10R": _t10r,
    "T11": _t11,
}


def thm_rhs(theorem: str, params: DegParams, n: int) -> Poly:
    """Closed-form right-hand side of a moment identity, as a polynomial in alpha.

    ``T2`` ignores r (r=1 case), ``C3`` forces m=1, ``T10`` is the r=m case
    and ``T10R`` its shifted form for general r. ``T7``/``T8`` return
    sum_j alpha^j * W^{(r)}_{m,lam}(n, j) with W given by the respective
    double or single sum. ``T9`` returns phi_{n,lam/m}(alpha).
    """
    try:
        fn = _EVALUATORS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREMS}") from None
    if theorem == "C3":
        params = DegParams(params.lam, 1, params.r)
    return fn(params, n)
