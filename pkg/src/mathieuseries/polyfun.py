"""Bernoulli/Euler polynomials with exact rational coefficients, periodic splines,
certified sup-norm bounds, and Gamma/Beta helpers.

Coefficients are generated once as `fractions.Fraction` values (so downstream
remainder bounds are not polluted by coefficient error) and rounded to floats
for evaluation.  Sup norms are computed by critical-point isolation on the
exact polynomial derivative plus a dense fallback grid, then rounded outward,
so they are safe to use as upper bounds in rigorous error brackets.

Everything is read-only after the lazy cache fill; the fills are deterministic
and idempotent, so concurrent first use is safe and all operations reentrant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import OrderOverflowError

#: Largest polynomial order kept in the exact-coefficient cache.
MAX_ORDER = 64

#: Grid resolution used as a safety net in sup-norm computations.
_SUP_GRID = 4096

BERNOULLI = "bernoulli"
EULER = "euler"


@dataclass(frozen=True)
class PolyCoeffs:
    """Exact rational coefficients of a cached polynomial, constant term first."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient list length must equal degree + 1")


@dataclass(frozen=True)
class SplineKind:
    """Selects the periodized Bernoulli spline b_n (period 1) or Euler spline e_n (period 2)."""

    family: str
    order: int

    def __post_init__(self) -> None:
        if self.family not in (BERNOULLI, EULER):
            raise ValueError(f"unknown spline family {self.family!r}")
        if self.order < 0:
            raise ValueError("spline order must be nonnegative")


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError("polynomial order must be nonnegative")
    if n > MAX_ORDER:
        raise OrderOverflowError(f"order {n} exceeds the cache limit {MAX_ORDER}")


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (with B_1 = -1/2)."""
    _check_order(n)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli_number(j)
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_coeffs(n: int) -> PolyCoeffs:
    """Exact coefficients of B_n(x) = sum_k C(n,k) B_{n-k} x^k."""
    _check_order(n)
    coeffs = tuple(math.comb(n, k) * bernoulli_number(n - k) for k in range(n + 1))
    return PolyCoeffs(degree=n, coeffs=coeffs)


@lru_cache(maxsize=None)
def euler_coeffs(n: int) -> PolyCoeffs:
    """Exact coefficients of E_n(x) via E_n(x) = (2/(n+1)) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))."""
    _check_order(n)
    b = bernoulli_coeffs(n + 1).coeffs
    two = Fraction(2)
    coeffs = tuple(
        Fraction(2, n + 1) * b[k] * (1 - two ** (n + 1 - k)) for k in range(n + 1)
    )
    return PolyCoeffs(degree=n, coeffs=coeffs)


@lru_cache(maxsize=None)
def _float_coeffs(n: int, family: str) -> tuple[float, ...]:
    poly = bernoulli_coeffs(n) if family == BERNOULLI else euler_coeffs(n)
    return tuple(float(c) for c in poly.coeffs)


def _horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def bernoulli_poly(n: int, x: float) -> float:
    """B_n(x), evaluated from exact rational coefficients rounded once to floats."""
    return _horner(_float_coeffs(n, BERNOULLI), x)


def euler_poly(n: int, x: float) -> float:
    """E_n(x), evaluated from exact rational coefficients rounded once to floats."""
    return _horner(_float_coeffs(n, EULER), x)


def _frac_part(x: float) -> float:
    return x - math.floor(x)


def bernoulli_spline(n: int, x: float) -> float:
    """Periodized Bernoulli polynomial b_n(x) = B_n({x}), period 1."""
    return bernoulli_poly(n, _frac_part(x))


def euler_spline(n: int, x: float) -> float:
    """Periodized Euler polynomial e_n(x) = (2/(n+1)) (b_{n+1}(x) - 2^{n+1} b_{n+1}(x/2)), period 2."""
    return (2.0 / (n + 1)) * (
        bernoulli_spline(n + 1, x) - 2.0 ** (n + 1) * bernoulli_spline(n + 1, x / 2.0)
    )


def spline_eval(kind: SplineKind, x: float) -> float:
    """Evaluate the selected periodic spline at x."""
    if kind.family == BERNOULLI:
        return bernoulli_spline(kind.order, x)
    return euler_spline(kind.order, x)


def _affine_compose(coeffs: tuple[Fraction, ...], p: Fraction, q: Fraction) -> tuple[Fraction, ...]:
    """Exact coefficients of P(p*x + q) given the coefficients of P."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        # c * (p x + q)^k
        for j in range(k + 1):
            out[j] += c * math.comb(k, j) * (p**j) * (q ** (k - j))
    return tuple(out)


def _sup_abs_poly(coeffs: tuple[Fraction, ...], a: float, b: float) -> float:
    """Certified upper bound for sup_{[a,b]} |P| where P has the given exact coefficients.

    Candidates are the interval endpoints, the real roots of the exact
    derivative (found numerically), and a dense fallback grid; the maximum is
    then inflated outward by the worst-case gap a grid of this resolution can
    miss (Markov-brothers bound on P'') plus float evaluation slack.
    """
    if not b > a:
        raise ValueError("interval must satisfy a < b")
    fc = tuple(float(c) for c in coeffs)
    n = len(fc) - 1
    candidates = [a, b]
    if n >= 2:
        # derivative coefficients, constant first
        dcoeffs = [fc[k] * k for k in range(1, n + 1)]
        # numpy.roots wants highest-degree first and a nonzero leading coefficient
        arr = np.trim_zeros(np.asarray(dcoeffs[::-1], dtype=float), "f")
        if arr.size > 1:
            for r in np.roots(arr):
                if abs(r.imag) < 1e-7 * (1.0 + abs(r.real)) and a <= r.real <= b:
                    candidates.append(float(r.real))
    grid = np.linspace(a, b, _SUP_GRID + 1)
    values = np.abs(np.polyval(fc[::-1], grid))
    best = float(values.max())
    for x in candidates:
        best = max(best, abs(_horner(fc, x)))
    # outward rounding: grid-miss allowance via |P''| <= 4 n^2 (n-1)^2 |P| / (b-a)^2
    miss = (n**4) / (2.0 * _SUP_GRID**2) if n >= 2 else 0.0
    slack = 1e-13 * sum(abs(c) * max(1.0, abs(a), abs(b)) ** k for k, c in enumerate(fc))
    return best * (1.0 + miss + 1e-12) + slack


def poly_sup(n: int, family: str, interval: tuple[float, float]) -> float:
    """Certified upper bound on sup |B_n| (family 'bernoulli') or sup |E_n| over [a, b]."""
    _check_order(n)
    a, b = interval
    if a == b:
        poly = bernoulli_poly if family == BERNOULLI else euler_poly
        return abs(poly(n, a)) * (1.0 + 1e-12) + 1e-300
    poly = bernoulli_coeffs(n) if family == BERNOULLI else euler_coeffs(n)
    return _sup_abs_poly(poly.coeffs, min(a, b), max(a, b))


def spline_sup(kind: SplineKind) -> float:
    """Certified upper bound on sup |b_n| over one period [0,1], resp.
    sup |e_n| over one period [0,2]."""
    n = kind.order
    if kind.family == BERNOULLI:
        _check_order(n)
        return _sup_abs_poly(bernoulli_coeffs(n).coeffs, 0.0, 1.0)
    _check_order(n + 1)
    b = bernoulli_coeffs(n + 1).coeffs
    scale = Fraction(2, n + 1)
    pw = Fraction(2) ** (n + 1)
    # e_n on [0,1): (2/(n+1)) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
    half = _affine_compose(b, Fraction(1, 2), Fraction(0))
    piece1 = tuple(scale * (b[k] - pw * half[k]) for k in range(len(b)))
    # e_n on [1,2): (2/(n+1)) (B_{n+1}(x-1) - 2^{n+1} B_{n+1}(x/2))
    shifted = _affine_compose(b, Fraction(1), Fraction(-1))
    piece2 = tuple(scale * (shifted[k] - pw * half[k]) for k in range(len(b)))
    return max(_sup_abs_poly(piece1, 0.0, 1.0), _sup_abs_poly(piece2, 1.0, 2.0))


def log_gamma(x: float) -> float:
    """log |Gamma(x)| via the C library's Lanczos-class implementation."""
    return math.lgamma(x)


def beta_fn(a: float, b: float) -> float:
    """Euler Beta function B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b) for a, b > 0."""
    if a <= 0 or b <= 0:
        raise ValueError("beta_fn requires positive arguments")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
