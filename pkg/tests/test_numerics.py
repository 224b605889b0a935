import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special, stats

from amle.errors import DomainError, QuadratureError
from amle.numerics import (
    QuadratureSpec,
    finite_diff_gradient,
    finite_diff_hessian,
    hermite,
    integrate,
    ks_test,
    log_bessel_i,
    make_rng,
    sample_noncentral_chisq,
    spectral_norm,
    sym_eigen,
)
from amle.models import Vasicek


# -- quadrature ---------------------------------------------------------

def test_integrate_constant_and_polynomial():
    assert integrate(lambda u: 1.0, 0.0, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert integrate(lambda u: u * u, 0.0, 3.0) == pytest.approx(9.0, abs=1e-10)


def test_integrate_cir_gamma_integrand():
    s = 0.1817
    got = integrate(lambda u: 1.0 / (s * math.sqrt(u)), 0.09, 0.16)
    assert got == pytest.approx(2.0 * (math.sqrt(0.16) - math.sqrt(0.09)) / s, abs=1e-10)


def test_integrate_reversed_limits_and_empty():
    f = lambda u: math.exp(u)
    assert integrate(f, 2.0, 0.5) == -integrate(f, 0.5, 2.0)
    assert integrate(f, 1.0, 1.0) == 0.0


def test_integrate_vectorized_matches_scalar():
    f = lambda u: np.sin(u) ** 2
    assert integrate(f, 0.0, 4.0, vectorized=True) == pytest.approx(integrate(f, 0.0, 4.0), abs=1e-12)


def test_integrate_nonfinite_raises():
    with pytest.raises(DomainError):
        integrate(lambda u: 1.0 / u if u > 0.5 else math.inf, 0.0, 1.0)


def test_integrate_budget_exhausted():
    with pytest.raises(QuadratureError):
        integrate(lambda u: math.sin(1.0 / u), 1e-6, 1.0, QuadratureSpec(1e-14, 1e-14, 3))


def test_quadrature_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureSpec(max_subdivisions=0)


# -- Hermite ------------------------------------------------------------

def test_hermite_examples():
    assert hermite(0, 3.7) == 1.0
    assert hermite(1, 2.0) == pytest.approx(-2.0)
    assert hermite(3, 1.0) == pytest.approx(2.0)


def test_hermite_recurrence():
    z = np.linspace(-5, 5, 41)
    for j in range(1, 15):
        r = hermite(j + 1, z) + z * hermite(j, z) + j * hermite(j - 1, z)
        assert np.max(np.abs(r)) <= 1e-10 * max(1.0, np.max(np.abs(hermite(j + 1, z))))


def test_hermite_orthogonality():
    phi = lambda z: np.exp(-0.5 * z * z) / math.sqrt(2 * math.pi)
    for j in range(7):
        for k in range(j):
            val = integrate(lambda z: phi(z) * hermite(j, z) * hermite(k, z), -12.0, 12.0, vectorized=True)
            assert abs(val) <= 1e-8


def test_hermite_order_limit():
    with pytest.raises(DomainError):
        hermite(21, 0.0)


# -- Bessel -------------------------------------------------------------

def test_log_bessel_small_argument():
    assert log_bessel_i(0.0, 1e-12) == pytest.approx(0.0, abs=1e-12)


def test_log_bessel_half_integer():
    assert log_bessel_i(0.5, 1.0) == pytest.approx(math.log(math.sqrt(2 / math.pi) * math.sinh(1.0)), rel=1e-12)


def test_log_bessel_integral_oracle():
    ref = integrate(lambda t: np.exp(10.0 * np.cos(t)) * np.cos(2 * t), 0.0, math.pi, vectorized=True) / math.pi
    assert log_bessel_i(2.0, 10.0) == pytest.approx(math.log(ref), rel=1e-10)


def test_log_bessel_large_argument_finite():
    v = log_bessel_i(3.2, 5000.0)
    ref = math.log(special.ive(3.2, 5000.0)) + 5000.0
    assert v == pytest.approx(ref, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(q=st.floats(0.0, 30.0), x=st.floats(1e-3, 700.0))
def test_log_bessel_matches_scipy(q, x):
    assert log_bessel_i(q, x) == pytest.approx(math.log(special.iv(q, x)), rel=1e-10, abs=1e-12)


def test_log_bessel_domain():
    with pytest.raises(DomainError):
        log_bessel_i(-1.0, 1.0)
    with pytest.raises(DomainError):
        log_bessel_i(1.0, 0.0)


# -- random streams ---------------------------------------------------------

def test_noncentral_chisq_moments():
    rng = make_rng(11)
    x = sample_noncentral_chisq(rng, 3.0, 2.0, size=1_000_000)
    n = x.size
    assert abs(x.mean() - 5.0) <= 3 * math.sqrt(14.0 / n)
    # SE of the sample variance from the fourth central moment
    m4 = np.mean((x - x.mean()) ** 4)
    assert abs(x.var(ddof=1) - 14.0) <= 3 * math.sqrt((m4 - 14.0**2) / n)


def test_noncentral_chisq_central_limit_case():
    x = sample_noncentral_chisq(make_rng(5), 2.7, 0.0, size=2000)
    _, p = ks_test(x, stats.chi2(2.7).cdf)
    assert p > 0.01


def test_make_rng_streams_are_keyed():
    a = make_rng(1, 0, 3).standard_normal(4)
    b = make_rng(1, 0, 3).standard_normal(4)
    c = make_rng(1, 0, 4).standard_normal(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


# -- K-S ----------------------------------------------------------------

def test_ks_exact_samples():
    x = make_rng(3).standard_normal(1000)
    _, p = ks_test(x, stats.norm.cdf)
    assert p > 0.01


def test_ks_point_mass():
    stat, _ = ks_test([0.0] * 10, lambda v: 0.5)
    assert stat == pytest.approx(0.5)


def test_ks_gross_misfit():
    _, p = ks_test(make_rng(4).uniform(size=1000), stats.chi2(3).cdf)
    assert p < 1e-6


def test_ks_agrees_with_scipy():
    x = make_rng(9).standard_normal(400) * 1.1
    stat, p = ks_test(x, stats.norm.cdf)
    ref = stats.kstest(x, "norm", method="asymp")
    assert stat == pytest.approx(ref.statistic, abs=1e-12)
    assert p == pytest.approx(ref.pvalue, rel=1e-6)


# -- linear algebra ---------------------------------------------------------

def test_sym_eigen_identity_and_sqrt():
    assert np.allclose(sym_eigen(np.eye(3)).values, 1.0)
    assert np.allclose(sym_eigen(np.diag([4.0, 1.0])).sqrt(), np.diag([2.0, 1.0]))


def test_sym_eigen_reconstruction():
    a = make_rng(2).standard_normal((3, 3))
    m = a + a.T
    e = sym_eigen(m)
    assert np.max(np.abs(e.reconstruct() - m)) <= 1e-12
    assert np.all(np.diff(e.values) <= 0)
    assert np.allclose(e.vectors.T @ e.vectors, np.eye(3), atol=1e-12)
    assert np.allclose(e.inverse() @ m, np.eye(3), atol=1e-10)
    assert spectral_norm(m) == pytest.approx(np.linalg.norm(m, 2))


def test_sym_eigen_sqrt_needs_pd():
    with pytest.raises(DomainError):
        sym_eigen(np.diag([1.0, -1.0])).sqrt()


# -- finite differences -----------------------------------------------------

def test_fd_gradient_quadratic():
    g = finite_diff_gradient(lambda t: t[0] ** 2 + 3 * t[1], np.array([1.0, 1.0]), h=1e-5)
    assert np.allclose(g, [2.0, 3.0], atol=1e-8)


def test_fd_gradient_constant():
    assert np.array_equal(finite_diff_gradient(lambda t: 7.0, np.array([0.3, 2.0])), np.zeros(2))


def test_fd_gradient_richardson_oracle():
    m = Vasicek()
    f = lambda t: float(m.exact_logdensity(0.095, 0.088, 1 / 12, t))
    theta = np.array([0.858, 0.0891, 0.0468])
    h = 1e-4 * theta
    g1 = finite_diff_gradient(f, theta, h=h)
    g2 = finite_diff_gradient(f, theta, h=h / 2)
    rich = (4 * g2 - g1) / 3
    assert np.allclose(g2, rich, rtol=1e-6, atol=1e-6 * np.max(np.abs(rich)))


def test_fd_hessian_quadratic():
    A = np.array([[2.0, 0.5], [0.5, 1.0]])
    H = finite_diff_hessian(lambda t: 0.5 * t @ A @ t, np.array([0.2, -0.4]))
    assert np.allclose(H, A, atol=1e-6)
    assert np.array_equal(H, H.T)


def test_fd_nonfinite_raises():
    with pytest.raises(DomainError):
        finite_diff_gradient(lambda t: math.inf if t[0] < 0 else t[0], np.array([0.0]), h=1e-3)
