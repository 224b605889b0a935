import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from amle.errors import DomainError
from amle.estimation import (
    FitOptions,
    asymptotic_moments,
    attach_info,
    combine_moments,
    fit,
    select_J,
    wald_statistic,
)
from amle.likelihood import SamplePath, score
from amle.models import CIR, Vasicek
from amle.simulate import SimSpec, simulate_euler, simulate_exact
from helpers import CIR_THETA, DELTA, VAS_THETA

VAS = Vasicek()

TABLE1 = {  # delta -> J for n = 500, 1000, 2000, 4000
    1 / 252: (1, 1, 1, 1),
    1 / 52: (1, 1, 1, 1),
    1 / 12: (1, 1, 1, 1),
    1 / 4: (2, 2, 2, 2),
    1 / 2: (4, 4, 5, 5),
    3 / 4: (10, 12, 13, 14),
}
NS = (500, 1000, 2000, 4000)


def vas_path(n=500, seed=3):
    return simulate_exact(SimSpec("vasicek", tuple(VAS_THETA), n, DELTA, seed=seed))


# -- select_J ------------------------------------------------------------

def test_select_j_examples():
    assert select_J(500, 1 / 4) == 2
    assert select_J(500, 1 / 2) == 4 and select_J(2000, 1 / 2) == 5
    assert select_J(500, 1 / 252) == 1


def test_select_j_full_table():
    for d, row in TABLE1.items():
        assert tuple(select_J(n, d) for n in NS) == row


def test_select_j_monotone():
    ds = sorted(TABLE1)
    for n in NS:
        js = [select_J(n, d) for d in ds]
        assert js == sorted(js)  # larger delta needs more terms
    for d in ds:
        js = [select_J(n, d) for n in NS]
        assert js == sorted(js)


def test_select_j_epsilon_and_domain():
    assert select_J(4000, 3 / 4, 0.5) >= select_J(4000, 3 / 4)
    for bad in ((500, 1.0), (500, 0.0), (1, 0.5)):
        with pytest.raises(DomainError):
            select_J(*bad)


# -- Wald statistic ----------------------------------------------------------

def test_wald_examples():
    assert wald_statistic(VAS_THETA, VAS_THETA, np.eye(3), 100) == 0.0
    assert wald_statistic([1.0, 0, 0], [0, 0, 0], np.eye(3), 4) == pytest.approx(4.0)
    with pytest.raises(DomainError):
        wald_statistic([1.0, 0], [0, 0, 0], np.eye(3), 4)


@settings(max_examples=50, deadline=None)
@given(
    d=hnp.arrays(float, 3, elements=st.floats(-10, 10).filter(lambda v: v == 0 or abs(v) > 1e-6)),
    a=hnp.arrays(float, (3, 3), elements=st.floats(-3, 3)),
)
def test_wald_nonnegative_and_zero_only_at_null(d, a):
    info = a @ a.T + 0.1 * np.eye(3)
    w = wald_statistic(d, np.zeros(3), info, 10)
    assert w >= 0.0
    if np.any(d != 0):
        assert w > 0.0


# -- fitting --------------------------------------------------------------

def test_fit_exact_and_amle_agree():
    p = vas_path()
    mle = fit(p, VAS, kind="exact")
    amle = fit(p, VAS, kind=2)
    assert mle.converged and amle.converged
    assert mle.label == "MLE" and amle.label == "AMLE(J=2)"
    assert np.linalg.norm(amle.theta - mle.theta) <= 10 * 0.0062
    assert mle.gradient_norm / p.n <= 1e-6


def test_fit_matches_ar1_closed_form():
    """The Vasicek MLE is the Gaussian AR(1) MLE, which has a closed form."""
    p = vas_path(n=1000, seed=21)
    x0, x = p.x0, p.x
    X = np.column_stack([np.ones_like(x0), x0])
    (c, rho), *_ = np.linalg.lstsq(X, x, rcond=None)
    v = np.mean((x - c - rho * x0) ** 2)
    k = -math.log(rho) / DELTA
    a = c / (1 - rho)
    s = math.sqrt(2 * k * v / (1 - rho * rho))
    res = fit(p, VAS, kind="exact")
    assert np.allclose(res.theta, [k, a, s], rtol=1e-6)


def test_fit_drift_free_path():
    spec = SimSpec("vasicek", (0.0, 0.0891, 0.0468), 500, DELTA, x0=0.0891, seed=2)
    res = fit(simulate_euler(spec), VAS, kind="exact")
    assert res.converged
    assert res.theta[0] < 0.2


def test_fit_boundary_notice():
    p = vas_path()
    bounds = VAS.param_bounds(p.observations)
    bounds[0] = (2.0, 50.0)  # true kappa 0.858 lies outside
    res = fit(p, VAS, kind="exact", opts=FitOptions(bounds=tuple(bounds)))
    assert res.converged
    assert res.at_bounds == ("kappa",)
    assert "at bounds" in res.message
    assert res.theta[0] == pytest.approx(2.0, abs=1e-8)


def test_fit_cir():
    p = simulate_exact(SimSpec("cir", tuple(CIR_THETA), 1000, DELTA, seed=4))
    res = fit(p, CIR(), kind=2)
    assert res.converged
    assert np.linalg.norm(score(p, res.theta, 2, CIR())) / p.n <= 1e-6
    assert CIR().admissible(res.theta)


def test_fit_is_deterministic():
    p = vas_path()
    a, b = fit(p, VAS, kind=1), fit(p, VAS, kind=1)
    assert a.theta.tobytes() == b.theta.tobytes()


def test_fit_reports_nonconvergence():
    p = vas_path()
    opts = FitOptions(multistart=1, simplex_maxiter=2, quasi_newton_maxiter=1, newton_maxiter=0)
    res = fit(p, VAS, kind="exact", opts=opts)
    assert not res.converged
    assert math.isfinite(res.loglik)


def test_standard_errors_from_observed_info():
    p = vas_path(n=2000, seed=6)
    res = attach_info(fit(p, VAS, kind=2), p, VAS)
    assert res.std_errors.shape == (3,)
    assert np.all(res.std_errors > 0)
    assert np.linalg.eigvalsh(res.observed_info).min() >= -1e-10


def test_fit_rejects_bad_path():
    with pytest.raises(DomainError):
        fit(SamplePath([0.1, -0.2, 0.1], DELTA), CIR())


@pytest.mark.slow
def test_mle_kappa_bias_n2000():
    bias = np.mean([fit(vas_path(n=2000, seed=1000 + r), VAS).theta[0] - VAS_THETA[0] for r in range(200)])
    assert 0.5 * 0.0245 <= bias <= 1.5 * 0.0245


# -- asymptotic moments ----------------------------------------------------

def test_combine_moments_collapses_without_truncation_gap():
    rng = np.random.default_rng(0)
    N = -np.diag([2.0, 3.0, 4.0])
    th0 = np.array([1.0, 2.0, 3.0])
    draws = [(th0 + rng.normal(0.1, 0.2, 3), N, np.zeros((3, 3))) for _ in range(50)]
    bias, V = combine_moments(N, np.zeros(3), -N, th0, draws)
    assert np.allclose(bias, np.mean([d[0] for d in draws], axis=0) - th0, atol=1e-14)
    cov = np.cov(np.array([d[0] for d in draws]), rowvar=False)
    assert np.allclose(V, cov, atol=1e-14)


def test_asymptotic_moments_equal_orders():
    res = asymptotic_moments(VAS, VAS_THETA, 2, DELTA, R=40, n=500, long_n=20_000, seed=3, J_star=2)
    assert np.array_equal(res.variance, res.variance.T)
    assert not res.heuristic and res.excluded == 0
    assert res.sd.shape == (3,)
    # with U = F = 0 the bias is the sample-mean error up to the N_n/N fluctuation
    assert abs(res.bias[0]) < 0.3
