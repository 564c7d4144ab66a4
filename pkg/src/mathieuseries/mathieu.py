"""Evaluators for the generalized Mathieu series

    S(t)     = sum_{k>=1} 2 (k+u)^gamma / ((k+u)^alpha + t^alpha)^(mu+1)
    S~(t)    = same with an extra (-1)^(k-1) factor,

their kernel g(x) = x^gamma (x^alpha + 1)^(-mu-1) with its smoothness profile
and tail integral, the large-t expansions, closed-form Poisson oracles for the
gamma=0, alpha=2, mu=0 case, and a regime dispatcher.

Direct summation carries a rigorous two-sided tail bracket: beyond the index
where the terms become monotone decreasing, the tail is enclosed between
integral bounds (or, for the gamma=1, alpha=2 family, the sharper two-sided
Hermite-Hadamard bounds), so every result is a value plus an interval that
contains the true sum.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import emsum, jets, polyfun
from .errors import (
    CrossValidationError,
    OrderOverflowError,
    ParameterError,
    RegimeError,
    ToleranceError,
)

#: Direct summation stops growing once this many terms were used.
MAX_TERMS_ENV = "MATHIEU_MAX_TERMS"
_DEFAULT_MAX_TERMS = 20_000_000

#: eval_auto dispatch thresholds.
T_DIRECT = 50.0
T_ASYMPTOTIC = 1000.0

DIRECT = "direct"
EULER_MACLAURIN = "euler-maclaurin"
ASYMPTOTIC = "asymptotic"
CLOSED_FORM = "closed-form"


def _max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return _DEFAULT_MAX_TERMS
    try:
        return max(1, int(raw))
    except ValueError:
        return _DEFAULT_MAX_TERMS


def _is_nonneg_int(x: float) -> bool:
    return x >= 0 and float(x).is_integer()


@dataclass(frozen=True)
class MathieuParams:
    """Parameter tuple (gamma, alpha, mu, u) with derived delta = alpha(mu+1) - gamma.

    delta > 1 is required for the plain series, delta > 0 for the alternating
    one; the evaluators check the constraint that applies to them.
    """

    gamma: float
    alpha: float
    mu: float
    u: float = 0.0

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ParameterError("gamma must be nonnegative")
        if self.alpha <= 0:
            raise ParameterError("alpha must be positive")
        if self.u <= -1:
            raise ParameterError("u must exceed -1")
        if self.mu <= 0:
            warnings.warn(
                "mu <= 0 is outside the vetted regime; results are experimental",
                stacklevel=3,
            )

    @property
    def delta(self) -> float:
        return self.alpha * (self.mu + 1.0) - self.gamma

    def require_delta(self, minimum: float) -> None:
        if not self.delta > minimum:
            raise ParameterError(
                f"delta = alpha*(mu+1) - gamma = {self.delta:.6g} must exceed {minimum:g}"
            )

    @property
    def integer_regime(self) -> bool:
        """True when (gamma, alpha) lies in Z+ x N, i.e. g is smooth at 0."""
        return _is_nonneg_int(self.gamma) and self.alpha >= 1 and float(self.alpha).is_integer()


@dataclass(frozen=True)
class EvalResult:
    """A value with a two-sided error bracket: truth in [value-err_lo, value+err_hi]."""

    value: float
    err_lo: float
    err_hi: float
    method: str
    terms_used: int = 0
    rigorous: bool = True

    @property
    def lower(self) -> float:
        return self.value - self.err_lo

    @property
    def upper(self) -> float:
        return self.value + self.err_hi


@dataclass(frozen=True)
class SmoothnessProfile:
    """Order of smoothness of g at 0 and the initial derivative table."""

    r: float  # integer order or math.inf
    initial_derivs: tuple[tuple[int, float], ...]


# --------------------------------------------------------------------------
# kernel g
# --------------------------------------------------------------------------

def g_eval(params: MathieuParams, x: float) -> float:
    """g(x) = x^gamma (x^alpha + 1)^(-mu-1) for x >= 0."""
    if x == 0.0:
        return 1.0 if params.gamma == 0 else 0.0
    return x**params.gamma * (x**params.alpha + 1.0) ** (-params.mu - 1.0)


def _g_series_coeff(params: MathieuParams, k: int) -> float:
    """Coefficient (-1)^k Gamma(mu+k+1) / (Gamma(mu+1) Gamma(k+1)) of x^(gamma + k alpha)."""
    return (-1.0) ** k * math.exp(
        math.lgamma(params.mu + k + 1) - math.lgamma(params.mu + 1) - math.lgamma(k + 1)
    )


def g_jet(params: MathieuParams, x: float, order: int) -> list[float]:
    """Taylor coefficients of g at x up to the given order.

    At x = 0 the jet comes from the binomial series of the kernel; outside the
    smooth regime only orders up to the smoothness r are available there.
    """
    if x < 0 and not params.integer_regime:
        raise ParameterError("negative arguments require (gamma, alpha) in Z+ x N")
    if x <= -1:
        raise ParameterError("g is defined on (-1, inf) at best")
    if x == 0.0:
        prof = g_smoothness(params)
        if order > prof.r:
            raise OrderOverflowError(
                f"derivative order {order} exceeds smoothness r = {prof.r} at x = 0"
            )
        out = [0.0] * (order + 1)
        if params.integer_regime:
            gam, alp = int(params.gamma), int(params.alpha)
            k = 0
            while gam + k * alp <= order:
                out[gam + k * alp] = _g_series_coeff(params, k)
                k += 1
        elif _is_nonneg_int(params.gamma) and params.gamma <= order:
            out[int(params.gamma)] = 1.0
        return out
    xj = jets.jet_var(x, order)
    if params.integer_regime:
        mono = jets.jet_ipow(xj, int(params.gamma))
        base = jets.jet_shift(jets.jet_ipow(xj, int(params.alpha)), 1.0)
    else:
        mono = jets.xpow_jet(x, params.gamma, order)
        base = jets.jet_shift(jets.xpow_jet(x, params.alpha, order), 1.0)
    return jets.jet_mul(mono, jets.jet_pow(base, -params.mu - 1.0))


def g_smoothness(params: MathieuParams) -> SmoothnessProfile:
    """Smoothness order r of g at 0 and the derivatives g^(p)(0) for p <= min(r, 16).

    r = [gamma] when gamma is not a nonnegative integer, gamma + [alpha] when
    gamma is but alpha is not, and infinity when both are.
    """
    cap = 16
    if params.integer_regime:
        gam, alp = int(params.gamma), int(params.alpha)
        derivs = []
        for p in range(cap + 1):
            if (p - gam) >= 0 and (p - gam) % alp == 0:
                k = (p - gam) // alp
                derivs.append((p, _g_series_coeff(params, k) * math.factorial(p)))
            else:
                derivs.append((p, 0.0))
        return SmoothnessProfile(r=math.inf, initial_derivs=tuple(derivs))
    if not _is_nonneg_int(params.gamma):
        r = math.floor(params.gamma)
        return SmoothnessProfile(r=r, initial_derivs=tuple((p, 0.0) for p in range(r + 1)))
    gam = int(params.gamma)
    r = gam + math.floor(params.alpha)
    derivs = tuple(
        (p, float(math.factorial(gam)) if p == gam else 0.0) for p in range(min(r, cap) + 1)
    )
    return SmoothnessProfile(r=r, initial_derivs=derivs)


def g_total_variation(params: MathieuParams) -> float:
    """Total variation of g on [0, inf): 1 for gamma = 0, else 2 g(x0) at the peak x0."""
    params.require_delta(0.0)
    if params.gamma == 0:
        return 1.0
    ratio = params.gamma / params.delta
    return 2.0 * ratio ** (params.gamma / params.alpha) * (ratio + 1.0) ** (-params.mu - 1.0)


def g_peak(params: MathieuParams) -> float:
    """Maximizer x0 = (gamma/delta)^(1/alpha) of g; 0 when gamma = 0."""
    if params.gamma == 0:
        return 0.0
    return (params.gamma / params.delta) ** (1.0 / params.alpha)


def tail_integral(params: MathieuParams, t: float) -> float:
    """F(t) = int_t^inf g(x) dx via the regularized incomplete Beta function.

    The substitution s = 1/(x^alpha + 1) turns the tail into
    (1/alpha) * B(a, b) * I_s(a, b) with a = mu + 1 - (gamma+1)/alpha and
    b = (gamma+1)/alpha; convergence needs delta > 1.
    """
    if t < 0:
        raise ParameterError("t must be nonnegative")
    if not params.delta > 1.0:
        raise ParameterError("the tail integral diverges unless delta > 1")
    b = (params.gamma + 1.0) / params.alpha
    a = params.mu + 1.0 - b
    s = 1.0 / (t**params.alpha + 1.0)
    return polyfun.beta_fn(a, b) / params.alpha * float(special.betainc(a, b, s))


# --------------------------------------------------------------------------
# direct summation with rigorous tail brackets
# --------------------------------------------------------------------------

def _terms(params: MathieuParams, t: float, k_lo: int, k_hi: int) -> np.ndarray:
    k = np.arange(k_lo, k_hi, dtype=float)
    w = k + params.u
    ta = t**params.alpha if t > 0 else 0.0
    if params.gamma == 0:
        num = 2.0
    else:
        num = 2.0 * w**params.gamma
    return num / (w**params.alpha + ta) ** (params.mu + 1.0)


def _term_single(params: MathieuParams, t: float, k: int) -> float:
    w = k + params.u
    ta = t**params.alpha if t > 0 else 0.0
    return 2.0 * w**params.gamma / (w**params.alpha + ta) ** (params.mu + 1.0)


def _monotone_from(params: MathieuParams, t: float) -> int:
    """Index from which the terms are decreasing in k (peak of g mapped to k)."""
    k0 = t * g_peak(params) - params.u
    return max(1, int(math.ceil(k0)) + 1)


def _tail_bracket(params: MathieuParams, t: float, n: int) -> tuple[float, float]:
    """Two-sided bounds for sum_{k > n} of the terms, n past the monotone index."""
    u, mu = params.u, params.mu
    if params.gamma == 1.0 and params.alpha == 2.0:
        # Hermite-Hadamard bounds for the convex kernel s -> s^(-mu-1)
        y = t * t
        w = n + u
        hi = 1.0 / (mu * (w * (w + 1.0) + y) ** mu)
        s1 = (w + 1.0) ** 2 + y
        lo = 1.0 / (mu * s1**mu) + (0.5 + w) * s1 ** (-mu - 1.0)
        return lo, hi
    delta = params.delta
    if t == 0.0:
        hi = 2.0 * (n + u) ** (1.0 - delta) / (delta - 1.0)
        lo = 2.0 * (n + 1.0 + u) ** (1.0 - delta) / (delta - 1.0)
        return lo, hi
    scale = 2.0 * t ** (1.0 - delta)
    hi = scale * tail_integral(params, (n + u) / t)
    lo = scale * tail_integral(params, (n + 1.0 + u) / t)
    return lo, hi


def _sum_terms(params: MathieuParams, t: float, n: int) -> tuple[float, float]:
    """(sum, sum of |terms|) over k = 1..n, chunked pairwise accumulation."""
    chunks = []
    abs_chunks = []
    step = 1 << 18
    for lo in range(1, n + 1, step):
        arr = _terms(params, t, lo, min(n + 1, lo + step))
        chunks.append(float(arr.sum()))
        abs_chunks.append(float(np.abs(arr).sum()))
    return math.fsum(chunks), math.fsum(abs_chunks)


def eval_S(params: MathieuParams, t: float, tol: float = 1e-10) -> EvalResult:
    """Direct summation of the plain series with a rigorous error bracket <= tol.

    Terms are summed up to an index past which they decrease; the tail is then
    enclosed by integral (or Hermite-Hadamard) bounds and the midpoint of the
    enclosure is returned, with half its width plus accumulation slack as the
    error radius.  The radius meets tol whenever tol is achievable in float64
    (roughly tol >= 1e-14 times the sum of absolute terms); it is honest
    either way.
    """
    params.require_delta(1.0)
    if t < 0:
        raise ParameterError("t must be nonnegative")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    cap = _max_terms()
    n = max(_monotone_from(params, t), 64)
    while True:
        lo, hi = _tail_bracket(params, t, n)
        if hi - lo <= tol or n >= cap:
            break
        n = min(cap, n * 2)
    if hi - lo > tol:
        raise ToleranceError(
            f"tail bracket {hi - lo:.3g} still exceeds tol={tol:.3g} at the "
            f"{n}-term cap; raise {MAX_TERMS_ENV} or use the asymptotic path"
        )
    partial, partial_abs = _sum_terms(params, t, n)
    # covers chunked pairwise accumulation plus per-term power-formula rounding
    slack = 8e-15 * partial_abs + 1e-300
    value = partial + 0.5 * (hi + lo)
    radius = 0.5 * (hi - lo) + slack
    return EvalResult(value=value, err_lo=radius, err_hi=radius, method=DIRECT, terms_used=n)


def eval_S_alt(params: MathieuParams, t: float, tol: float = 1e-10) -> EvalResult:
    """Direct summation of the alternating series with an alternating-tail bracket."""
    params.require_delta(0.0)
    if t < 0:
        raise ParameterError("t must be nonnegative")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    cap = _max_terms()
    n = max(_monotone_from(params, t), 64)
    while True:
        first_omitted = _term_single(params, t, n + 1)
        if first_omitted <= 2.0 * tol or n >= cap:
            break
        growth = min(4.0, max(1.3, (first_omitted / tol) ** (1.0 / max(params.delta, 0.5))))
        n = min(cap, max(n + 1, int(n * growth)))
    if first_omitted > 2.0 * tol:
        raise ToleranceError(
            f"alternating tail {first_omitted:.3g} still exceeds 2*tol at the "
            f"{n}-term cap; raise {MAX_TERMS_ENV}"
        )
    chunks = []
    abs_chunks = []
    step = 1 << 18
    for lo in range(1, n + 1, step):
        arr = _terms(params, t, lo, min(n + 1, lo + step))
        signs = np.where((np.arange(lo, min(n + 1, lo + step)) % 2) == 1, 1.0, -1.0)
        arr = arr * signs
        chunks.append(float(arr.sum()))
        abs_chunks.append(float(np.abs(arr).sum()))
    partial = math.fsum(chunks)
    slack = 8e-15 * math.fsum(abs_chunks) + 1e-300
    # remainder R has the sign of term n+1 and |R| <= that term
    sign = 1.0 if (n + 1) % 2 == 1 else -1.0
    value = partial + sign * 0.5 * first_omitted
    radius = 0.5 * first_omitted + slack
    return EvalResult(value=value, err_lo=radius, err_hi=radius, method=DIRECT, terms_used=n)


def s_mu(mu: float, t: float, u: float, tol: float = 1e-10) -> EvalResult:
    """The gamma=1, alpha=2 family sum_{k>=1} 2(k+u) / ((k+u)^2 + t^2)^(mu+1).

    Unlike the general evaluator this accepts any real u: whole terms with
    k + u = 0 are dropped, and the finitely many terms with k + u < 0 are
    summed directly before the positive, eventually-monotone remainder is
    bracketed as usual.
    """
    if mu <= 0:
        raise ParameterError("mu must be positive")
    if u > -1:
        return eval_S(MathieuParams(1.0, 2.0, mu, u), t, tol)
    head_end = int(math.floor(-u)) + 1  # first index with k + u > 0
    head = math.fsum(
        2.0 * (k + u) / ((k + u) ** 2 + t * t) ** (mu + 1.0)
        for k in range(1, head_end + 1)
        if k + u != 0.0
    )
    shifted = eval_S(MathieuParams(1.0, 2.0, mu, u + head_end), t, tol)
    return EvalResult(
        value=head + shifted.value,
        err_lo=shifted.err_lo,
        err_hi=shifted.err_hi,
        method=DIRECT,
        terms_used=shifted.terms_used + head_end,
    )


# --------------------------------------------------------------------------
# large-t expansions
# --------------------------------------------------------------------------

def _gamma_ratio(mu: float, k: int) -> float:
    """Gamma(mu+k+1) / (Gamma(mu+1) Gamma(k+1)) by stable iteration."""
    out = 1.0
    for j in range(k):
        out *= (mu + j + 1.0) / (j + 1.0)
    return out


def _require_integer_regime(params: MathieuParams) -> tuple[int, int]:
    if not params.integer_regime:
        raise RegimeError("the expansion needs gamma in Z+ and alpha in N")
    return int(params.gamma), int(params.alpha)


def asym_S(params: MathieuParams, n: int) -> emsum.AsymptoticSeries:
    """Large-t expansion of the plain series, as powers of 1/t.

    Leading term (2/alpha) B((gamma+1)/alpha, mu+1-(gamma+1)/alpha) at power
    delta - 1, then n correction terms with Bernoulli-polynomial coefficients
    at powers alpha (k + mu + 1).
    """
    gam, alp = _require_integer_regime(params)
    params.require_delta(1.0)
    b = (params.gamma + 1.0) / params.alpha
    lead = 2.0 / params.alpha * polyfun.beta_fn(b, params.mu + 1.0 - b)
    powers = [params.delta - 1.0]
    coeffs = [lead]
    for k in range(n):
        order = k * alp + gam + 1
        if order > polyfun.MAX_ORDER:
            raise OrderOverflowError(
                f"correction {k} needs the Bernoulli polynomial of order {order}"
            )
        c = (
            (-1.0) ** (k * (alp + 1) + gam)
            * 2.0 * _gamma_ratio(params.mu, k)
            * polyfun.bernoulli_poly(order, -params.u) / order
        )
        powers.append(params.alpha * (k + params.mu + 1.0))
        coeffs.append(c)
    return emsum.AsymptoticSeries(powers=tuple(powers), coeffs=tuple(coeffs))


def asym_S_alt(params: MathieuParams, n: int) -> emsum.AsymptoticSeries:
    """Large-t expansion of the alternating series (Euler-polynomial coefficients)."""
    gam, alp = _require_integer_regime(params)
    params.require_delta(0.0)
    powers = []
    coeffs = []
    for k in range(n):
        order = k * alp + gam
        if order > polyfun.MAX_ORDER:
            raise OrderOverflowError(
                f"correction {k} needs the Euler polynomial of order {order}"
            )
        c = (
            (-1.0) ** (k * (alp + 1) + gam)
            * _gamma_ratio(params.mu, k)
            * polyfun.euler_poly(order, -params.u)
        )
        powers.append(params.alpha * (k + params.mu + 1.0))
        coeffs.append(c)
    return emsum.AsymptoticSeries(powers=tuple(powers), coeffs=tuple(coeffs))


def eval_asym(params: MathieuParams, t: float, n_terms: int | None = None) -> EvalResult:
    """Evaluate the plain-series expansion at t, reporting |next term| as the error.

    The error proxy is heuristic (the expansion carries no explicit constant),
    so the result is flagged non-rigorous.
    """
    if t <= 0:
        raise ParameterError("the expansion needs t > 0")
    cap = (polyfun.MAX_ORDER - int(params.gamma) - 1) // max(int(params.alpha), 1)
    series = asym_S(params, cap)
    v = 1.0 / t
    n = series.optimal_truncation(v) if n_terms is None else min(n_terms + 1, len(series.coeffs))
    value = series.evaluate(v, n)
    nxt = series.next_term_magnitude(v, n)
    if math.isnan(nxt):
        nxt = abs(series.coeffs[-1]) * v ** series.powers[-1]
    return EvalResult(
        value=value, err_lo=nxt, err_hi=nxt, method=ASYMPTOTIC,
        terms_used=n, rigorous=False,
    )


# --------------------------------------------------------------------------
# Euler-Maclaurin path and dispatch
# --------------------------------------------------------------------------

class MathieuSmoothFunction(emsum.SmoothFunction):
    """The kernel g presented through the summation-engine contract."""

    def __init__(self, params: MathieuParams):
        self.params = params
        self.domain_left = -0.5 if params.integer_regime else 0.0

    def deriv(self, k: int, x: float) -> float:
        return jets.derivatives(g_jet(self.params, x, k))[k]

    def tail_integral(self, t: float) -> float:
        return tail_integral(self.params, t)

    def far_field(self, k: int) -> float:
        # |g^(k)(x)| decays like x^(-delta - k); solve C x^(-delta-k) ~ 1e-18
        delta = self.params.delta
        scale = math.factorial(k + 2) * (self.params.mu + 1.0) ** min(k, 8)
        return max(50.0, (scale * 1e18) ** (1.0 / (delta + k)))


def eval_em(params: MathieuParams, t: float, n: int | None = None) -> EvalResult:
    """Rigorous large-t evaluation through the Euler-Maclaurin engine.

    With eps = 1/t the engine estimates sum g((k+u)/t) = t^delta S / 2, so the
    estimate and its certified remainder bound are rescaled by 2 t^(-delta).
    """
    params.require_delta(1.0)
    if t <= 0:
        raise ParameterError("the Euler-Maclaurin path needs t > 0")
    prof = g_smoothness(params)
    if n is None:
        n = int(min(prof.r, 8))
    elif n > prof.r:
        raise OrderOverflowError(f"n = {n} exceeds the smoothness r = {prof.r} of g at 0")
    f = MathieuSmoothFunction(params)
    res = emsum.em_sum(f, 1.0 / t, params.u, n)
    scale = 2.0 * t ** (-params.delta)
    value = scale * res.sum_estimate
    radius = scale * res.remainder_bound + 4e-16 * abs(value)
    return EvalResult(
        value=value,
        err_lo=radius,
        err_hi=radius,
        method=EULER_MACLAURIN,
        terms_used=n,
    )


def eval_auto(params: MathieuParams, t: float, tol: float = 1e-10) -> EvalResult:
    """Pick an evaluation path by regime: direct summation for small t, the
    certified Euler-Maclaurin bound for large t, and the expansion (flagged
    non-rigorous) for very large t in the smooth regime."""
    params.require_delta(1.0)
    if t < T_DIRECT:
        return eval_S(params, t, tol)
    if params.integer_regime and t >= T_ASYMPTOTIC:
        return eval_asym(params, t)
    if g_smoothness(params).r >= 2:
        res = eval_em(params, t)
        if res.err_hi <= tol:
            return res
    return eval_S(params, t, tol)


def cross_validate(params: MathieuParams, t: float, tol: float = 1e-10) -> tuple[EvalResult, EvalResult]:
    """Evaluate by two independent paths and require the brackets to overlap."""
    direct = eval_S(params, t, tol)
    if params.integer_regime and t >= T_ASYMPTOTIC:
        other = eval_asym(params, t)
    else:
        other = eval_em(params, t)
    if direct.lower > other.upper or other.lower > direct.upper:
        raise CrossValidationError(
            f"disjoint brackets at t={t:g}: direct [{direct.lower:.17g}, {direct.upper:.17g}] "
            f"vs {other.method} [{other.lower:.17g}, {other.upper:.17g}]"
        )
    return direct, other


# --------------------------------------------------------------------------
# theta-type series and Poisson closed forms
# --------------------------------------------------------------------------

def phi_u(u: float, x: float) -> float:
    """phi_u(x) = x * sum_{k>=1} 2 (k+u) exp(-(k+u)^2 x) for u >= 0, x > 0.

    Truncated when the exponential envelope drops below 1e-16 of the running
    value; underflow to 0 for huge x is expected and harmless.
    """
    if x <= 0:
        raise ParameterError("x must be positive")
    if u < 0:
        raise ParameterError("u must be nonnegative")
    total = 0.0
    k = 1
    while True:
        w = k + u
        term = 2.0 * w * math.exp(-w * w * x)
        total += term
        if term <= 1e-16 * total or term == 0.0:
            break
        k += 1
        if k > 10_000_000:
            break
    return x * total


def log_phi_u(u: float, x: float) -> float:
    """log phi_u(x), computed stably for large x where phi underflows."""
    if x <= 0:
        raise ParameterError("x must be positive")
    exps = []
    k = 1
    lead = -((1.0 + u) ** 2) * x
    while True:
        w = k + u
        e = math.log(2.0 * w) - w * w * x
        exps.append(e)
        if e < lead - 40.0 or k > 10_000_000:
            break
        k += 1
    m = max(exps)
    return math.log(x) + m + math.log(math.fsum(math.exp(e - m) for e in exps))


def poisson_S(t: float) -> float:
    """Closed form of sum 2/(k^2+t^2): pi/t - 1/t^2 + 2 pi / (t (e^(2 pi t) - 1))."""
    if t <= 0:
        raise ParameterError("t must be positive")
    return math.pi / t - 1.0 / t**2 + 2.0 * math.pi / (t * math.expm1(2.0 * math.pi * t))


def poisson_S_alt(t: float) -> float:
    """Closed form of sum 2(-1)^(k-1)/(k^2+t^2): 1/t^2 - 2 pi/(t (e^(pi t) - e^(-pi t)))."""
    if t <= 0:
        raise ParameterError("t must be positive")
    return 1.0 / t**2 - 2.0 * math.pi / (t * (math.exp(math.pi * t) - math.exp(-math.pi * t)))
