"""Shared fixtures for the test modules."""
import math

import numpy as np

from amle.models import DiffusionModel

VAS_THETA = np.array([0.858, 0.0891, 0.0468])
CIR_THETA = np.array([0.892, 0.09, 0.1817])
DELTA = 1.0 / 12.0


class GenericOU(DiffusionModel):
    """Vasicek written with drift and diffusion only.

    Every derivative, the transform and the expansion coefficients go
    through the numerical routes; the exact density is kept as an oracle.
    """

    name = "generic_ou"
    param_names = ("kappa", "alpha", "sigma")
    drift_idx = (0, 1)

    def admissible(self, theta):
        return bool(theta[0] > 0 and theta[2] > 0)

    def drift(self, x, theta):
        return theta[0] * (theta[1] - np.asarray(x, dtype=float))

    def diffusion(self, x, theta):
        return np.full_like(np.asarray(x, dtype=float), theta[2])

    def exact_logdensity(self, x, x0, delta, theta):
        k, a, s = theta
        m = x0 * math.exp(-k * delta) + a * (1 - math.exp(-k * delta))
        v = s * s * (1 - math.exp(-2 * k * delta)) / (2 * k)
        return -0.5 * math.log(2 * math.pi * v) - (np.asarray(x) - m) ** 2 / (2 * v)

    def stationary_law(self, theta):
        from scipy import stats

        return stats.norm(theta[1], theta[2] / math.sqrt(2 * theta[0]))

    def stationary_mean(self, theta):
        return float(theta[1])


def stationary_grid(theta, size=21, width=3.0):
    k, a, s = theta
    sd = s / math.sqrt(2 * k)
    return np.linspace(a - width * sd, a + width * sd, size)
