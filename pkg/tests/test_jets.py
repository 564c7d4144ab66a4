import pytest

from mathieuseries import jets


def fd_derivative(f, x, k, h=1e-3):
    """Central finite difference of order k (k <= 3), O(h^2)."""
    if k == 0:
        return f(x)
    if k == 1:
        return (f(x + h) - f(x - h)) / (2 * h)
    if k == 2:
        return (f(x + h) - 2 * f(x) + f(x - h)) / h**2
    return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h**3)


def test_mul_div_roundtrip():
    a = [1.3, 0.4, -0.2, 0.05]
    b = [2.0, -1.0, 0.3, 0.7]
    prod = jets.jet_mul(a, b)
    back = jets.jet_div(prod, b)
    for x, y in zip(a, back):
        assert x == pytest.approx(y, abs=1e-14)


def test_exp_log_inverse():
    a = [0.8, -0.3, 0.25, 0.1, -0.04]
    assert jets.jet_log(jets.jet_exp(a)) == pytest.approx(a, abs=1e-13)


def test_pow_against_exp_log():
    a = [1.7, 0.5, -0.1, 0.2]
    s = -1.37
    via_pow = jets.jet_pow(a, s)
    via_exp = jets.jet_exp(jets.jet_scale(jets.jet_log(a), s))
    assert via_pow == pytest.approx(via_exp, rel=1e-13)


def test_xpow_jet_matches_finite_differences():
    f = lambda x: x**2.6
    jet = jets.xpow_jet(1.7, 2.6, 3)
    derivs = jets.derivatives(jet)
    for k in range(4):
        assert derivs[k] == pytest.approx(fd_derivative(f, 1.7, k), rel=1e-5)


def test_composed_kernel_derivatives():
    # d/dx of x / (x^2 + 1)^2 at a generic point, jets vs finite differences
    def build(x):
        xj = jets.jet_var(x, 3)
        denom = jets.jet_pow(jets.jet_shift(jets.jet_mul(xj, xj), 1.0), -2.0)
        return jets.jet_mul(xj, denom)

    f = lambda x: x / (x**2 + 1.0) ** 2
    derivs = jets.derivatives(build(0.8))
    for k in range(4):
        assert derivs[k] == pytest.approx(fd_derivative(f, 0.8, k), rel=2e-5)


def test_ipow_negative_value_part():
    a = [-1.5, 1.0, 0.0]
    cube = jets.jet_ipow(a, 3)
    assert cube[0] == pytest.approx((-1.5) ** 3)
    # derivative of x^3 at -1.5
    assert cube[1] == pytest.approx(3 * (-1.5) ** 2)


def test_domain_errors():
    with pytest.raises(ValueError):
        jets.jet_log([0.0, 1.0])
    with pytest.raises(ValueError):
        jets.jet_pow([-1.0, 1.0], 0.5)
    with pytest.raises(ZeroDivisionError):
        jets.jet_div([1.0, 0.0], [0.0, 1.0])
    with pytest.raises(ValueError):
        jets.xpow_jet(0.0, 0.5, 2)
