"""Hermite polynomials and log-scaled modified Bessel functions."""
from __future__ import annotations

import math

import numpy as np
from scipy import special

from ..errors import DomainError

HERMITE_MAX = 20


def hermite(j: int, z):
    """H_j(z) = phi(z)**-1 * d^j phi / dz^j for the standard normal density phi.

    This is (-1)**j times the probabilists' Hermite polynomial, generated by
    H_{j+1}(z) = -z H_j(z) - j H_{j-1}(z).  ``z`` may be a scalar or array.
    """
    if not 0 <= j <= HERMITE_MAX or int(j) != j:
        raise DomainError(f"hermite order must be an integer in [0, {HERMITE_MAX}], got {j!r}")
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    if j == 0:
        return prev if prev.ndim else float(prev)
    cur = -z
    for k in range(1, j):
        prev, cur = cur, -z * cur - k * prev
    return cur if cur.ndim else float(cur)


def _log_bessel_series(q, x):
    # log of sum_k (x/2)^{2k+q} / (k! Gamma(k+q+1)), summed in scaled form
    half = 0.5 * x
    log_lead = q * math.log(half) - math.lgamma(q + 1.0)
    term = 1.0
    total = 1.0
    k = 0
    z2 = half * half
    while True:
        k += 1
        term *= z2 / (k * (k + q))
        total += term
        if term < 1e-17 * total or k > 500:
            break
    return log_lead + math.log(total)


def log_bessel_i(q: float, x: float) -> float:
    """log I_q(x) for order q >= 0 and x > 0, without overflow for large x."""
    if not (x > 0):
        raise DomainError(f"log_bessel_i requires x > 0, got {x!r}")
    if not (q >= 0):
        raise DomainError(f"log_bessel_i requires q >= 0, got {q!r}")
    scaled = special.ive(q, x)
    if scaled > 1e-280 and math.isfinite(scaled):
        return math.log(scaled) + x
    return _log_bessel_series(q, x)


def log_bessel_i_array(q: float, x):
    """Vectorised :func:`log_bessel_i` over an array of arguments."""
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("log_bessel_i requires x > 0")
    scaled = special.ive(q, x)
    out = np.log(scaled) + x
    low = ~(scaled > 1e-280) | ~np.isfinite(scaled)
    if np.any(low):
        out[low] = [_log_bessel_series(q, float(t)) for t in x[low]]
    return out
