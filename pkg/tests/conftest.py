"""Shared high-precision oracles, independent of the library's own code paths."""

import mpmath as mp
import pytest

mp.mp.dps = 40


def s1_trigamma(t: float, u: float = 0.0) -> mp.mpf:
    """sum 2(k+u)/((k+u)^2+t^2)^2 via the trigamma reflection, t > 0."""
    a = mp.mpf(1) + u
    return -mp.im(mp.psi(1, a + 1j * mp.mpf(t))) / mp.mpf(t)


def s2_polygamma(t: float, u: float = 0.0) -> mp.mpf:
    """sum 2(k+u)/((k+u)^2+t^2)^3 via tri/tetragamma, t > 0."""
    a = mp.mpf(1) + u
    w = mp.mpf(t)
    z = a + 1j * w
    return mp.re(mp.psi(2, z)) / (4 * w**2) - mp.im(mp.psi(1, z)) / (4 * w**3)


def s_mu_mp(mu: float, t: float, u: float = 0.0, terms: int = 200000) -> mp.mpf:
    """Brute-force partial sum plus integral tail bracket midpoint (40 digits)."""
    muf, tf, uf = mp.mpf(mu), mp.mpf(t), mp.mpf(u)
    total = mp.mpf(0)
    for k in range(1, terms + 1):
        w = k + uf
        total += 2 * w / (w * w + tf * tf) ** (muf + 1)
    hi = ((terms + uf) ** 2 + tf * tf) ** (-muf) / muf
    lo = ((terms + 1 + uf) ** 2 + tf * tf) ** (-muf) / muf
    return total + (hi + lo) / 2


TWO_ZETA3 = 2 * mp.zeta(3)
TWO_ZETA5 = 2 * mp.zeta(5)


@pytest.fixture(autouse=True)
def _silence_experimental_mu_warning(recwarn):
    # mu <= 0 is deliberately exercised (Poisson closed forms); keep logs clean
    import warnings

    warnings.filterwarnings(
        "ignore", message="mu <= 0 is outside the vetted regime"
    )
    yield
