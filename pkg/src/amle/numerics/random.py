"""Random streams and noncentral chi-square variates."""
from __future__ import annotations

import numpy as np

from ..errors import DomainError


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Counter-based stream keyed by ``(seed, *keys)``.

    Philox is used so that each (seed, cell, replication) key addresses an
    independent stream; draws within a stream are indexed by position.
    """
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), *[int(k) for k in keys]])
    return np.random.Generator(np.random.Philox(ss))


def sample_noncentral_chisq(rng: np.random.Generator, nu: float, lam: float, size=None):
    """Draw from the noncentral chi-square law with ``nu`` degrees of freedom.

    Poisson mixture of gammas: K ~ Poisson(lam/2), then Gamma(nu/2 + K, scale 2).
    Valid for non-integer ``nu``.
    """
    if not (nu > 0):
        raise DomainError(f"degrees of freedom must be positive, got {nu!r}")
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(~(lam_arr >= 0)):
        raise DomainError(f"noncentrality must be non-negative, got {lam!r}")
    k = rng.poisson(0.5 * lam_arr, size=size)
    return rng.gamma(0.5 * nu + k, 2.0)
