"""Truncated Taylor-mode (jet) arithmetic.

A jet is a list of Taylor coefficients [f(x0), f'(x0)/1!, ..., f^(m)(x0)/m!].
The recurrences below propagate exact derivative information through products,
quotients, powers with real exponents, exp and log, which is what the
summation engines need at interior points and at 0.
"""

from __future__ import annotations

import math
from typing import Sequence

Jet = list[float]


def jet_const(c: float, m: int) -> Jet:
    out = [0.0] * (m + 1)
    out[0] = c
    return out


def jet_var(x0: float, m: int) -> Jet:
    out = [0.0] * (m + 1)
    out[0] = x0
    if m >= 1:
        out[1] = 1.0
    return out


def jet_add(a: Sequence[float], b: Sequence[float]) -> Jet:
    return [x + y for x, y in zip(a, b)]


def jet_sub(a: Sequence[float], b: Sequence[float]) -> Jet:
    return [x - y for x, y in zip(a, b)]


def jet_scale(a: Sequence[float], s: float) -> Jet:
    return [s * x for x in a]


def jet_shift(a: Sequence[float], c: float) -> Jet:
    out = list(a)
    out[0] += c
    return out


def jet_mul(a: Sequence[float], b: Sequence[float]) -> Jet:
    m = len(a) - 1
    out = [0.0] * (m + 1)
    for n in range(m + 1):
        out[n] = math.fsum(a[j] * b[n - j] for j in range(n + 1))
    return out


def jet_div(a: Sequence[float], b: Sequence[float]) -> Jet:
    if b[0] == 0.0:
        raise ZeroDivisionError("jet division by a jet with vanishing value")
    m = len(a) - 1
    out = [0.0] * (m + 1)
    out[0] = a[0] / b[0]
    for n in range(1, m + 1):
        out[n] = (a[n] - math.fsum(b[j] * out[n - j] for j in range(1, n + 1))) / b[0]
    return out


def jet_exp(a: Sequence[float]) -> Jet:
    m = len(a) - 1
    out = [0.0] * (m + 1)
    out[0] = math.exp(a[0])
    for n in range(1, m + 1):
        out[n] = math.fsum(j * a[j] * out[n - j] for j in range(1, n + 1)) / n
    return out


def jet_log(a: Sequence[float]) -> Jet:
    if a[0] <= 0.0:
        raise ValueError("jet_log requires a positive value part")
    m = len(a) - 1
    out = [0.0] * (m + 1)
    out[0] = math.log(a[0])
    for n in range(1, m + 1):
        out[n] = (a[n] - math.fsum(j * out[j] * a[n - j] for j in range(1, n)) / n) / a[0]
    return out


def jet_pow(a: Sequence[float], s: float) -> Jet:
    """a(x)^s for real s; requires a positive value part."""
    if a[0] <= 0.0:
        raise ValueError("jet_pow requires a positive value part")
    m = len(a) - 1
    out = [0.0] * (m + 1)
    out[0] = a[0] ** s
    for n in range(1, m + 1):
        out[n] = math.fsum(
            ((s + 1.0) * j - n) * a[j] * out[n - j] for j in range(1, n + 1)
        ) / (n * a[0])
    return out


def jet_ipow(a: Sequence[float], k: int) -> Jet:
    """a(x)^k for integer k >= 0 without sign restrictions on a."""
    if k < 0:
        raise ValueError("jet_ipow requires a nonnegative exponent")
    m = len(a) - 1
    out = jet_const(1.0, m)
    base = list(a)
    while k:
        if k & 1:
            out = jet_mul(out, base)
        k >>= 1
        if k:
            base = jet_mul(base, base)
    return out


def xpow_jet(x0: float, gamma: float, m: int) -> Jet:
    """Jet of x^gamma at x0.

    For x0 > 0 the generalized binomial coefficients are used directly; at
    x0 = 0 the exponent must be a nonnegative integer (monomial jet).
    """
    if x0 > 0.0:
        out = [0.0] * (m + 1)
        coeff = 1.0
        for k in range(m + 1):
            out[k] = coeff * x0 ** (gamma - k)
            coeff *= (gamma - k) / (k + 1)
        return out
    if x0 == 0.0 and gamma >= 0 and float(gamma).is_integer():
        g = int(gamma)
        out = [0.0] * (m + 1)
        if g <= m:
            out[g] = 1.0
        return out
    raise ValueError("x^gamma jet at the left endpoint needs a nonnegative integer exponent")


def derivatives(jet: Sequence[float]) -> list[float]:
    """Convert Taylor coefficients to derivative values f^(k)(x0)."""
    out = []
    fact = 1.0
    for k, c in enumerate(jet):
        out.append(c * fact)
        fact *= k + 1
    return out
