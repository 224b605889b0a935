"""Pure numpy implementations of the hot loops (fallback backend)."""
from __future__ import annotations

import numpy as np
from scipy import special

from .numerics.special import _log_bessel_series


def ar1_path(x0, shift, decay, sd, z):
    n = z.shape[0]
    out = np.empty(n + 1)
    out[0] = x0
    x = x0
    for t in range(n):
        x = shift + decay * x + sd * z[t]
        out[t + 1] = x
    return out


def laurent_eval(y, y0, coef, pmin, qmin):
    """sum_{p,q} coef[p - pmin, q - qmin] * y**p * y0**q, elementwise."""
    y = np.asarray(y, dtype=float)
    y0 = np.asarray(y0, dtype=float)
    P, Q = coef.shape
    ypow = y[:, None] ** np.arange(pmin, pmin + P)
    y0pow = y0[:, None] ** np.arange(qmin, qmin + Q)
    return np.einsum("np,pq,nq->n", ypow, coef, y0pow)


def log_bessel_i_vec(q, z):
    z = np.asarray(z, dtype=float)
    scaled = special.ive(q, z)
    with np.errstate(divide="ignore"):
        out = np.log(scaled) + z
    low = ~(scaled > 1e-280) | ~np.isfinite(scaled)
    if np.any(low):
        out[low] = [_log_bessel_series(q, float(t)) for t in z[low]]
    return out
