"""One-sample Kolmogorov-Smirnov test."""
from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError

_TERMS = 100


def kolmogorov_sf(lam: float) -> float:
    """P(K > lam) for the limiting Kolmogorov distribution (100-term series)."""
    if lam <= 0.0:
        return 1.0
    if lam < 0.18:
        # series has not converged with 100 terms; the tail is 1 to double precision
        return 1.0
    total = 0.0
    for k in range(1, _TERMS + 1):
        total += (-1) ** (k - 1) * math.exp(-2.0 * k * k * lam * lam)
    return min(1.0, max(0.0, 2.0 * total))


def ks_test(samples, cdf):
    """Return ``(statistic, p_value)`` for H0: samples ~ ``cdf``.

    The statistic is sup |F_n - cdf| over the sorted sample, taking both
    one-sided gaps at each jump; the p-value uses the asymptotic
    Kolmogorov law with lambda = sqrt(n) * statistic.
    """
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    if n == 0:
        raise DomainError("ks_test needs at least one sample")
    try:
        F = np.asarray(cdf(x), dtype=float)
        if F.shape != x.shape:
            raise TypeError
    except (TypeError, ValueError):
        F = np.array([cdf(float(v)) for v in x], dtype=float)
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - F)
    d_minus = np.max(F - (i - 1) / n)
    stat = float(max(d_plus, d_minus))
    return stat, kolmogorov_sf(math.sqrt(n) * stat)
