"""First-order approximation of the Fisher information.

For ``dX = mu(X; eta) dt + sigma(X; xi) dB`` the expected Hessian of the
one-term log-density has the block form

    N(theta, 1, delta) = [[delta N11, delta N12], [delta N12', -2 E(s_i s_j / s^2) + delta N22]]

up to O(delta^2), with every expectation taken under the stationary law.
``-N`` is the leading-order approximation of ``I(delta)``.
"""
from __future__ import annotations

import numpy as np

from .errors import UnsupportedCapability
from .models import DiffusionModel, get_model
from .numerics.linalg import symmetrize
from .numerics.quadrature import QuadratureSpec, integrate

# stationary tail mass left out of the expectation integrals
TAIL = 1e-13
FISHER_QUAD = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-10, max_subdivisions=400)
# finite-difference partials carry ~1e-10 noise, below which quadrature cannot converge
FD_FISHER_QUAD = QuadratureSpec(abs_tol=1e-9, rel_tol=1e-7, max_subdivisions=400)


def _n_integrands(model, theta, x):
    """Pointwise integrands of N11, N12, N22 and the xi-xi leading term at ``x``."""
    dp = model.drift_partials(x, theta)
    sp = model.diffusion_partials(x, theta)
    mu, mu_x = dp["mu"], dp["mu_x"]
    mi, mij, mxij = dp["mu_i"], dp["mu_ij"], dp["mu_xij"]
    s, sx, sxx = sp["s"], sp["s_x"], sp["s_xx"]
    si, sxi, sxxi = sp["s_i"], sp["s_xi"], sp["s_xxi"]
    sij, sxij, sxxij = sp["s_ij"], sp["s_xij"], sp["s_xxij"]

    def col(v):
        return v[..., :, None]

    def row(v):
        return v[..., None, :]

    b = lambda v: v[..., None, None]
    n11 = (
        -col(mi) * row(mi) / b(s * s)
        - b(mu / (s * s)) * mij
        + b(sx / s) * mij
        - 0.5 * mxij
    )
    n12 = (
        2.0 * b(mu / s**3) * col(mi) * row(si)
        - b(sx / (s * s)) * col(mi) * row(si)
        + col(mi) * row(sxi) / b(s)
    )
    ss = col(si) * row(si)
    cross_x = col(sxi) * row(si) + col(si) * row(sxi)
    cross_xx = col(sxxi) * row(si) + col(si) * row(sxxi)
    sym_sx =b(sx) * (col(sxi) * row(si) + col(si) * row(sxi))
    n22 = (
        -6.0 * b(mu * mu / s**4) * ss
        + 16.0 * b(mu * sx / s**3) * ss
        + 2.0 * b(mu * mu / s**3) * sij
        - 3.0 * b(mu_x / (s * s)) * ss
        - 9.5 * b(sx * sx / (s * s)) * ss
        - 4.5 * b(mu * sx / (s * s)) * sij
        - 5.0 * b(mu / (s * s)) * cross_x
        + b(mu_x / s) * sij
        + 4.0 * b(sxx / s) * ss
        + 5.5 * sym_sx / b(s)
        + 1.5 * b(sx * sx / s) * sij
        + 2.5 * b(mu / s) * sxij
        - 0.75 * b(sxx) * sij
        - 2.5 * col(sxi) * row(sxi)
        - 1.5 * b(sx) * sxij
        - cross_xx
        + 0.75 * b(s) * sxxij
    )
    lead = -2.0 * ss / b(s * s)
    return n11, n12, n22, lead


def _default_quad(model):
    cls = type(model)
    analytic = (
        cls.drift_partials is not DiffusionModel.drift_partials
        and cls.diffusion_partials is not DiffusionModel.diffusion_partials
    )
    return FISHER_QUAD if analytic else FD_FISHER_QUAD


def _stationary_expectation(model, theta, func, quad):
    law = model.stationary_law(theta)
    lo, hi = (float(v) for v in law.ppf([TAIL, 1.0 - TAIL]))
    probe = func(np.array([0.5 * (lo + hi)]))
    out = np.empty(probe.shape[1:])
    for idx in np.ndindex(out.shape):
        out[idx] = integrate(
            lambda x, idx=idx: func(np.asarray(x, dtype=float))[(slice(None),) + idx] * law.pdf(x),
            lo,
            hi,
            quad,
            vectorized=True,
        )
    return out


def first_order_n(model, theta, delta, quad: QuadratureSpec = None) -> np.ndarray:
    """The first-order expected Hessian N(theta, 1, delta) (negative semidefinite to leading order).

    Parameters
    ----------
    model : DiffusionModel or str
        Needs a stationary law; drift and diffusion partials may be
        synthesised by finite differences.
    theta : array_like
        Parameter vector in model order.
    delta : float
        Sampling interval.
    quad : QuadratureSpec, optional
        Defaults to a tight rule for models with analytic partials and a
        looser one when partials are finite differences.

    Returns
    -------
    ndarray
        ``d x d`` symmetric matrix in the model's parameter order.
    """
    model = get_model(model)
    theta = model.check_theta(theta)
    try:
        model.stationary_law(theta)
    except UnsupportedCapability:
        raise UnsupportedCapability(f"{model.name}: first-order Fisher needs a stationary law") from None
    eta, xi = list(model.drift_idx), list(model.diffusion_idx)
    d1, d2 = len(eta), len(xi)

    def stacked(x):
        n11, n12, n22, lead = _n_integrands(model, theta, x)
        flat = [n11.reshape(len(x), -1), n12.reshape(len(x), -1), n22.reshape(len(x), -1), lead.reshape(len(x), -1)]
        return np.concatenate(flat, axis=1)

    e = _stationary_expectation(model, theta, stacked, quad or _default_quad(model))
    sizes = [d1 * d1, d1 * d2, d2 * d2, d2 * d2]
    parts = np.split(e, np.cumsum(sizes)[:-1])
    n11 = parts[0].reshape(d1, d1)
    n12 = parts[1].reshape(d1, d2)
    n22 = parts[2].reshape(d2, d2)
    lead = parts[3].reshape(d2, d2)

    N = np.zeros((model.dim, model.dim))
    N[np.ix_(eta, eta)] = delta * n11
    N[np.ix_(eta, xi)] = delta * n12
    N[np.ix_(xi, eta)] = delta * n12.T
    N[np.ix_(xi, xi)] = lead + delta * n22
    return symmetrize(N)


def fisher_first_order(model, theta, delta, quad: QuadratureSpec = None) -> np.ndarray:
    """Leading-order Fisher information approximation ``-N(theta, 1, delta)``."""
    return -first_order_n(model, theta, delta, quad)


def vasicek_fisher_leading(theta, delta) -> np.ndarray:
    """Closed-form ``-N(theta, 1, delta)`` for Vasicek."""
    k, _, s = (float(v) for v in theta)
    return np.array(
        [
            [delta / (2.0 * k), 0.0, -delta / s],
            [0.0, delta * k * k / (s * s), 0.0],
            [-delta / s, 0.0, 2.0 / (s * s)],
        ]
    )
