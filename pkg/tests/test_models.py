import math

import numpy as np
import pytest
from scipy import integrate as spi
from scipy import stats

from amle.errors import DomainError, UnsupportedCapability
from amle.fisher import fisher_first_order, first_order_n, vasicek_fisher_leading
from amle.models import (
    CIR,
    ParamVector,
    Vasicek,
    cir_exact_logdensity,
    cir_fisher_first_order,
    get_model,
    mixed_partial,
    register_model,
    vasicek_exact_logdensity,
    vasicek_fisher_exact,
)
from amle.numerics import make_rng
from helpers import CIR_THETA, DELTA, VAS_THETA, GenericOU


def test_param_vector():
    p = Vasicek().params([1.0, 2.0, 3.0])
    assert p["alpha"] == 2.0
    assert p.diffusion_idx == (2,)
    assert p.as_dict() == {"kappa": 1.0, "alpha": 2.0, "sigma": 3.0}
    with pytest.raises(DomainError):
        ParamVector([1.0], ("a", "b"), (0,))


def test_get_model_and_register():
    assert isinstance(get_model("VASICEK"), Vasicek)
    with pytest.raises(DomainError):
        get_model("nope")
    register_model("generic_ou", GenericOU)
    assert isinstance(get_model("generic_ou"), GenericOU)


def test_check_theta():
    with pytest.raises(DomainError):
        CIR().check_theta([0.1, 0.01, 0.5])  # violates 2 kappa alpha > sigma^2
    with pytest.raises(DomainError):
        Vasicek().check_theta([1.0, 0.1])


# -- Vasicek exact law ------------------------------------------------------

def test_vasicek_long_delta_limit():
    k, a, s = VAS_THETA
    xs = np.linspace(-0.2, 0.4, 7)
    got = vasicek_exact_logdensity(xs, 0.3, 200.0, VAS_THETA)
    ref = stats.norm(a, s / math.sqrt(2 * k)).logpdf(xs)
    assert np.allclose(got, ref, atol=1e-10)


def test_vasicek_density_at_mean():
    k, a, s = VAS_THETA
    v = vasicek_exact_logdensity(a, a, DELTA, VAS_THETA)
    assert v == pytest.approx(-0.5 * math.log(2 * math.pi * s * s * (1 - math.exp(-2 * k * DELTA)) / (2 * k)))


def test_vasicek_normalization():
    val, _ = spi.quad(lambda x: math.exp(vasicek_exact_logdensity(x, 0.0891, DELTA, VAS_THETA)), -np.inf, np.inf,
                      points=None, epsabs=1e-12, epsrel=1e-12)
    assert val == pytest.approx(1.0, abs=1e-8)


def test_vasicek_chapman_kolmogorov():
    x0, x = 0.08, 0.1
    lhs, _ = spi.quad(
        lambda z: math.exp(vasicek_exact_logdensity(x, z, DELTA, VAS_THETA) + vasicek_exact_logdensity(z, x0, DELTA, VAS_THETA)),
        -0.5, 0.7, epsabs=1e-12, limit=200,
    )
    rhs = math.exp(vasicek_exact_logdensity(x, x0, 2 * DELTA, VAS_THETA))
    assert lhs == pytest.approx(rhs, abs=1e-6)


# -- CIR exact law ----------------------------------------------------------

def test_cir_normalization_and_mean():
    k, a, s = CIR_THETA
    f = lambda x: math.exp(cir_exact_logdensity(x, 0.09, DELTA, CIR_THETA))
    mass, _ = spi.quad(f, 0.0, np.inf, epsabs=1e-12, limit=400, points=None)
    mean, _ = spi.quad(lambda x: x * f(x), 0.0, np.inf, epsabs=1e-12, limit=400)
    assert mass == pytest.approx(1.0, abs=1e-6)
    e = math.exp(-k * DELTA)
    assert mean == pytest.approx(0.09 * e + a * (1 - e), abs=1e-6)


def test_cir_long_delta_gamma_law():
    k, a, s = CIR_THETA
    law = stats.gamma(2 * k * a / s**2, scale=s**2 / (2 * k))
    xs = np.array([0.03, 0.08, 0.15, 0.3])
    assert np.allclose(cir_exact_logdensity(xs, 0.2, 80.0, CIR_THETA), law.logpdf(xs), atol=1e-8)


def test_cir_matches_scipy_ncx2():
    k, a, s = CIR_THETA
    c = 4 * k / (s * s * (1 - math.exp(-k * DELTA)))
    nu = 4 * k * a / s**2
    lam = c * 0.07 * math.exp(-k * DELTA)
    xs = np.array([0.04, 0.07, 0.12])
    ref = stats.ncx2(nu, lam).logpdf(c * xs) + math.log(c)
    assert np.allclose(cir_exact_logdensity(xs, 0.07, DELTA, CIR_THETA), ref, atol=1e-10)


def test_cir_domain_errors():
    with pytest.raises(DomainError):
        cir_exact_logdensity(-0.1, 0.09, DELTA, CIR_THETA)
    with pytest.raises(DomainError):
        cir_exact_logdensity(0.1, 0.09, DELTA, [0.1, 0.01, 0.5])


@pytest.mark.parametrize("x0,delta,theta", [
    (0.02, 0.25, (0.5, 0.05, 0.15)),
    (0.2, 1 / 52, (2.0, 0.1, 0.3)),
    (0.09, 1.0, CIR_THETA),
])
def test_cir_normalization_grid(x0, delta, theta):
    f = lambda x: math.exp(cir_exact_logdensity(x, x0, delta, theta))
    mass, _ = spi.quad(f, 0.0, np.inf, epsabs=1e-12, limit=400)
    assert mass == pytest.approx(1.0, abs=1e-6)


# -- stationary sampling -----------------------------------------------------

def test_vasicek_stationary_moments():
    k, a, s = VAS_THETA
    x = Vasicek().stationary_sample(make_rng(1), VAS_THETA, size=1_000_000)
    var = s * s / (2 * k)
    assert abs(x.mean() - a) <= 3 * math.sqrt(var / x.size)
    assert abs(x.var() - var) <= 3 * var * math.sqrt(2.0 / x.size)


def test_cir_stationary_moments():
    k, a, s = CIR_THETA
    x = CIR().stationary_sample(make_rng(2), CIR_THETA, size=1_000_000)
    var = a * s * s / (2 * k)
    shape = 2 * k * a / s**2
    assert abs(x.mean() - a) <= 3 * math.sqrt(var / x.size)
    # Var of the sample variance for a Gamma law: (mu4 - var^2)/n, mu4 = var^2 (3 + 6/shape)
    assert abs(x.var() - var) <= 3 * var * math.sqrt((2 + 6 / shape) / x.size)


# -- Fisher information -------------------------------------------------------

def _spec_formula(theta, delta):
    k, _, s = theta
    E = math.exp(2 * k * delta)
    i11 = 1 / (2 * k * k) + delta * (k * delta + k * delta * E - 2 * E + 2) / (k * (E - 1) ** 2)
    i13 = (1 + 2 * k * delta - E) / (s * k * (E - 1))
    i22 = 2 * k * (math.exp(k * delta) - 1) ** 2 / (s * s * (E - 1))
    return np.array([[i11, 0, i13], [0, i22, 0], [i13, 0, 2 / s**2]])


@pytest.mark.parametrize("delta", [1 / 252, 1 / 12, 0.25, 1.0, 5.0])
def test_vasicek_fisher_closed_form(delta):
    I = vasicek_fisher_exact(VAS_THETA, delta)
    ref = _spec_formula(VAS_THETA, delta)
    assert np.allclose(I, ref, rtol=1e-7, atol=1e-9 * np.abs(ref).max())
    assert I[0, 1] == I[1, 0] == 0.0
    assert I[2, 2] == pytest.approx(2 / 0.0468**2)


def test_vasicek_fisher_series_branch_continuity():
    k = VAS_THETA[0]
    lo = vasicek_fisher_exact(VAS_THETA, 0.0499999 / k)
    hi = vasicek_fisher_exact(VAS_THETA, 0.0500001 / k)
    assert np.allclose(lo, hi, rtol=1e-5)


def test_vasicek_fisher_quadrature_oracle():
    """Expected outer product of the exact score under the stationary law."""
    m = Vasicek()
    k, a, s = VAS_THETA
    z, w = np.polynomial.hermite_e.hermegauss(40)
    w = w / w.sum()
    sd0 = s / math.sqrt(2 * k)
    e = math.exp(-k * DELTA)
    sdt = s * math.sqrt((1 - e * e) / (2 * k))
    x0 = a + sd0 * z[:, None]
    x = x0 * e + a * (1 - e) + sdt * z[None, :]
    g = []
    for i in range(3):
        h = np.zeros(3)
        h[i] = 1e-6 * VAS_THETA[i]
        g.append((m.exact_logdensity(x, x0, DELTA, VAS_THETA + h) - m.exact_logdensity(x, x0, DELTA, VAS_THETA - h)) / (2 * h[i]))
    W = w[:, None] * w[None, :]
    I = np.array([[np.sum(W * g[i] * g[j]) for j in range(3)] for i in range(3)])
    assert np.allclose(I, vasicek_fisher_exact(VAS_THETA, DELTA), rtol=1e-5, atol=1e-6)


def test_vasicek_fisher_small_delta_leading_order():
    errs = []
    for d in (1 / 50, 1 / 100, 1 / 200):
        I = vasicek_fisher_exact(VAS_THETA, d)
        errs.append(np.linalg.norm(I - vasicek_fisher_leading(VAS_THETA, d), 2))
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.1)
    assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.1)


def test_generic_first_order_n_vasicek():
    F = fisher_first_order(Vasicek(), VAS_THETA, DELTA)
    assert np.allclose(F, vasicek_fisher_leading(VAS_THETA, DELTA), rtol=1e-9, atol=1e-12)


def test_generic_first_order_n_fd_partials():
    F = fisher_first_order(GenericOU(), VAS_THETA, DELTA)
    assert np.allclose(F, vasicek_fisher_leading(VAS_THETA, DELTA), rtol=1e-6)


def test_cir_fisher_closed_form_matches_generic():
    closed = cir_fisher_first_order(CIR_THETA, DELTA)
    generic = fisher_first_order(CIR(), CIR_THETA, DELTA)
    assert np.allclose(closed, generic, rtol=1e-9)
    assert np.allclose(first_order_n(CIR(), CIR_THETA, DELTA), -closed, rtol=1e-9)


def test_cir_fisher_tracks_exact_information():
    """-N approaches the Monte-Carlo outer-product information as delta shrinks."""
    m = CIR()
    rng = make_rng(8)
    d = 1 / 52
    x0 = m.stationary_sample(rng, CIR_THETA, size=200_000)
    x = np.array([m.simulate_path(rng, v, 1, d, CIR_THETA)[1] for v in x0[:20000]])
    x0 = x0[:20000]
    g = []
    for i in range(3):
        h = np.zeros(3)
        h[i] = 1e-6 * CIR_THETA[i]
        g.append((m.exact_logdensity(x, x0, d, CIR_THETA + h) - m.exact_logdensity(x, x0, d, CIR_THETA - h)) / (2 * h[i]))
    G = np.array(g)
    I_mc = G @ G.T / G.shape[1]
    F = cir_fisher_first_order(CIR_THETA, d)
    assert np.linalg.norm(F - I_mc, 2) / np.linalg.norm(I_mc, 2) < 0.05


def test_unsupported_capabilities():
    m = GenericOU()
    with pytest.raises(UnsupportedCapability):
        m.simulate_path(make_rng(0), 0.0, 3, 0.1, VAS_THETA)
    with pytest.raises(UnsupportedCapability):
        m.initial_guess(np.zeros(3), 0.1)


def test_synthesised_partials():
    m = GenericOU()
    x = np.array([0.05, 0.1])
    assert np.allclose(m.drift_dx(x, VAS_THETA), -VAS_THETA[0], atol=1e-9)
    assert np.allclose(m.diffusion_dx(x, VAS_THETA), 0.0, atol=1e-9)
    d = mixed_partial(lambda u, t: t[0] * t[1] * u**2, np.array([2.0]), np.array([3.0, 5.0]), 1, (0, 1))
    assert d == pytest.approx(4.0, rel=1e-8)
