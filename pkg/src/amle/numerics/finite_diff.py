"""Central finite differences for gradients and Hessians."""
from __future__ import annotations

import numpy as np

from ..errors import DomainError

_EPS = np.finfo(float).eps
GRAD_STEP = _EPS ** (1.0 / 3.0)
HESS_STEP = _EPS ** 0.25


def default_steps(theta, base) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return base * np.maximum(1.0, np.abs(theta))


def _as_steps(theta, h, base):
    if h is None:
        return default_steps(theta, base)
    h = np.broadcast_to(np.asarray(h, dtype=float), theta.shape).copy()
    if np.any(h <= 0):
        raise DomainError("finite-difference step must be positive")
    return h


def _checked(f, point, coord):
    val = f(point)
    if not np.all(np.isfinite(val)):
        raise DomainError(f"function is not finite at the stencil point for coordinate {coord}")
    return val


def finite_diff_gradient(f, theta, h=None) -> np.ndarray:
    """Central-difference gradient, error O(h**2).

    ``f`` may return a scalar or an array (for example per-observation
    terms); the result then has shape ``value.shape + (d,)``.
    """
    theta = np.asarray(theta, dtype=float)
    steps = _as_steps(theta, h, GRAD_STEP)
    cols = []
    for i in range(theta.size):
        e = np.zeros_like(theta)
        e[i] = steps[i]
        fp = _checked(f, theta + e, i)
        fm = _checked(f, theta - e, i)
        cols.append((np.asarray(fp) - np.asarray(fm)) / (2.0 * steps[i]))
    return np.stack(cols, axis=-1)


def finite_diff_hessian(f, theta, h=None, f0=None) -> np.ndarray:
    """Symmetric Hessian by central differences.

    Diagonal entries use the 3-point stencil, off-diagonal entries the
    4-corner cross stencil; together with the centre this is the 9-point
    pattern in every coordinate plane.  Works for scalar or array-valued
    ``f`` (trailing axes are the Hessian).
    """
    theta = np.asarray(theta, dtype=float)
    d = theta.size
    steps = _as_steps(theta, h, HESS_STEP)
    center = np.asarray(_checked(f, theta, "centre") if f0 is None else f0, dtype=float)
    out = np.zeros(center.shape + (d, d))
    for i in range(d):
        ei = np.zeros(d)
        ei[i] = steps[i]
        fp = np.asarray(_checked(f, theta + ei, i))
        fm = np.asarray(_checked(f, theta - ei, i))
        out[..., i, i] = (fp - 2.0 * center + fm) / steps[i] ** 2
        for j in range(i + 1, d):
            ej = np.zeros(d)
            ej[j] = steps[j]
            fpp = np.asarray(_checked(f, theta + ei + ej, (i, j)))
            fpm = np.asarray(_checked(f, theta + ei - ej, (i, j)))
            fmp = np.asarray(_checked(f, theta - ei + ej, (i, j)))
            fmm = np.asarray(_checked(f, theta - ei - ej, (i, j)))
            val = (fpp - fpm - fmp + fmm) / (4.0 * steps[i] * steps[j])
            out[..., i, j] = val
            out[..., j, i] = val
    return out
