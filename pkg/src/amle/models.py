"""Diffusion-model contract and the Vasicek / CIR reference models.

A model describes ``dX = mu(X; eta) dt + sigma(X; xi) dB`` with the full
parameter vector ``theta = (eta, xi)`` stored as one array and the split
recorded as index tuples.  Anything a model does not supply in closed form
(x- and parameter-partials) is synthesised by finite differences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from . import _coeffs
from .errors import DomainError, UnsupportedCapability
from .numerics.linalg import symmetrize
from .numerics.random import sample_noncentral_chisq

_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class ParamVector:
    """A point in the parameter set, with names and the drift/diffusion split."""

    values: np.ndarray
    names: tuple
    drift_idx: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float).copy())
        if self.values.shape != (len(self.names),):
            raise DomainError(f"expected {len(self.names)} parameter values, got {self.values.shape}")

    def __array__(self, dtype=None, copy=None):
        return self.values.astype(dtype) if dtype is not None else self.values.copy()

    def __len__(self):
        return len(self.values)

    def __getitem__(self, key):
        if isinstance(key, str):
            return float(self.values[self.names.index(key)])
        return self.values[key]

    @property
    def diffusion_idx(self) -> tuple:
        return tuple(i for i in range(len(self.names)) if i not in self.drift_idx)

    def as_dict(self) -> dict:
        return {k: float(v) for k, v in zip(self.names, self.values)}


# Richardson-extrapolated central differences for synthesised partials.
_PARTIAL_STEP = np.finfo(float).eps ** 0.125


def _step(v):
    return _PARTIAL_STEP * max(abs(v), 1e-3)


def _central(g, order, h):
    """Return the function of ``h``-shifted evaluations for a central derivative."""
    if order == 0:
        return g(0.0)
    if order == 1:
        return (g(h) - g(-h)) / (2.0 * h)
    if order == 2:
        return (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h)
    raise ValueError(order)


def mixed_partial(func, x, theta, x_order=0, params=(), scale=1.0):
    """d^{x_order}/dx^{x_order} d/dtheta_i ... of ``func(x, theta)`` by finite differences.

    ``params`` lists parameter indices (repeats allowed, at most two
    distinct derivative orders per index).  Central differences on every
    axis, Richardson-extrapolated once in the common step scale.
    """
    x = np.asarray(x, dtype=float)
    theta = np.asarray(theta, dtype=float)
    counts = {}
    for i in params:
        counts[i] = counts.get(i, 0) + 1

    def estimate(factor):
        hx = factor * scale * _PARTIAL_STEP * np.maximum(np.abs(x), 1e-3)
        axes = [(None, x_order, hx)] + [(i, k, factor * scale * _step(theta[i])) for i, k in counts.items()]

        def apply(level, dx, dtheta):
            if level == len(axes):
                return func(x + dx, theta + dtheta)
            idx, k, h = axes[level]

            def shifted(s):
                if idx is None:
                    return apply(level + 1, dx + s, dtheta)
                e = np.zeros_like(theta)
                e[idx] = s
                return apply(level + 1, dx, dtheta + e)

            return _central(shifted, k, h)

        return apply(0, 0.0, np.zeros_like(theta))

    coarse = estimate(1.0)
    fine = estimate(0.5)
    return (4.0 * fine - coarse) / 3.0


class DiffusionModel:
    """Base class for scalar diffusions.

    Subclasses must define ``name``, ``param_names``, ``drift_idx``,
    ``domain`` and the ``drift`` / ``diffusion`` functions (vectorised in
    ``x``).  Every other capability is optional; the defaults either
    synthesise it numerically or raise :class:`UnsupportedCapability`.
    """

    name = "custom"
    param_names: tuple = ()
    drift_idx: tuple = ()
    domain = (-math.inf, math.inf)

    # -- parameters -----------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.param_names)

    @property
    def diffusion_idx(self) -> tuple:
        return tuple(i for i in range(self.dim) if i not in self.drift_idx)

    def params(self, values) -> ParamVector:
        return ParamVector(values, tuple(self.param_names), tuple(self.drift_idx))

    def admissible(self, theta) -> bool:
        """True when ``theta`` is inside the model's hard parameter region."""
        return bool(np.all(np.isfinite(np.asarray(theta, dtype=float))))

    def check_theta(self, theta):
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.dim,):
            raise DomainError(f"{self.name} expects {self.dim} parameters, got shape {theta.shape}")
        if not self.admissible(theta):
            raise DomainError(f"parameters {theta.tolist()} are outside the {self.name} parameter region")
        return theta

    def in_domain(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        lo, hi = self.domain
        return bool(np.all((x > lo) & (x < hi)))

    # -- coefficients ---------------------------------------------------
    def drift(self, x, theta):
        raise NotImplementedError

    def diffusion(self, x, theta):
        raise NotImplementedError

    def drift_dx(self, x, theta):
        return mixed_partial(self.drift, x, theta, 1)

    def diffusion_dx(self, x, theta):
        return mixed_partial(self.diffusion, x, theta, 1)

    def diffusion_dxx(self, x, theta):
        return mixed_partial(self.diffusion, x, theta, 2)

    def drift_partials(self, x, theta) -> dict:
        """mu, mu_x and drift-parameter partials mu_i, mu_ij, mu_xij.

        Index ``i`` runs over ``drift_idx``; arrays carry ``x`` as the
        leading axis.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        eta = self.drift_idx
        d1 = len(eta)
        f = self.drift
        out = {
            "mu": f(x, theta),
            "mu_x": self.drift_dx(x, theta),
            "mu_i": np.stack([mixed_partial(f, x, theta, 0, (i,)) for i in eta], -1),
            "mu_ij": np.empty(x.shape + (d1, d1)),
            "mu_xij": np.empty(x.shape + (d1, d1)),
        }
        for a in range(d1):
            for b in range(a, d1):
                pair = (eta[a], eta[b])
                for key, xo in (("mu_ij", 0), ("mu_xij", 1)):
                    v = mixed_partial(f, x, theta, xo, pair)
                    out[key][..., a, b] = v
                    out[key][..., b, a] = v
        return out

    def diffusion_partials(self, x, theta) -> dict:
        """sigma and its x / diffusion-parameter partials used by the Fisher approximation."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        xi = self.diffusion_idx
        d2 = len(xi)
        g = self.diffusion
        out = {
            "s": g(x, theta),
            "s_x": self.diffusion_dx(x, theta),
            "s_xx": self.diffusion_dxx(x, theta),
        }
        for key, xo in (("s_i", 0), ("s_xi", 1), ("s_xxi", 2)):
            out[key] = np.stack([mixed_partial(g, x, theta, xo, (i,)) for i in xi], -1)
        for key, xo in (("s_ij", 0), ("s_xij", 1), ("s_xxij", 2)):
            arr = np.empty(x.shape + (d2, d2))
            for a in range(d2):
                for b in range(a, d2):
                    v = mixed_partial(g, x, theta, xo, (xi[a], xi[b]))
                    arr[..., a, b] = v
                    arr[..., b, a] = v
            out[key] = arr
        return out

    # -- optional capabilities ------------------------------------------
    def exact_logdensity(self, x, x0, delta, theta):
        raise UnsupportedCapability(f"{self.name} has no exact transition density")

    @property
    def has_exact_density(self) -> bool:
        return type(self).exact_logdensity is not DiffusionModel.exact_logdensity

    def stationary_law(self, theta):
        """Frozen ``scipy.stats`` distribution of the stationary law."""
        raise UnsupportedCapability(f"{self.name} has no stationary law")

    def stationary_sample(self, rng, theta, size=None):
        raise UnsupportedCapability(f"{self.name} has no stationary sampler")

    def stationary_mean(self, theta):
        return None

    def simulate_path(self, rng, x0, n, delta, theta):
        raise UnsupportedCapability(f"{self.name} has no exact path sampler")

    # closed-form expansion hooks: a model that sets coeff_table must also
    # provide gamma, gamma_inv, a2 and coeff_scalars
    coeff_table = None

    def gamma(self, x, theta):
        return None

    def gamma_inv(self, y, theta):
        return None

    def a2(self, x, x0, theta):
        return None

    def coeff_scalars(self, theta):
        return None

    @property
    def has_closed_transform(self) -> bool:
        return type(self).gamma is not DiffusionModel.gamma

    # -- estimation support ---------------------------------------------
    def param_bounds(self, x) -> list:
        return [(-math.inf, math.inf)] * self.dim

    def initial_guess(self, x, delta):
        raise UnsupportedCapability(f"{self.name} cannot derive starting values")

    def __repr__(self):
        return f"{type(self).__name__}()"


def _moment_init(x, delta):
    """Moment-matching starting values (kappa, alpha, stationary variance)."""
    x = np.asarray(x, dtype=float)
    alpha = float(np.mean(x))
    xc = x - alpha
    denom = float(np.dot(xc[:-1], xc[:-1]))
    rho = float(np.dot(xc[1:], xc[:-1]) / denom) if denom > 0 else 0.0
    kappa = -math.log(min(max(rho, 1e-3), 1.0 - 1e-9)) / delta
    var = float(np.var(x))
    return kappa, alpha, var


def _mean_reverting_bounds(x, sigma_scale):
    x = np.asarray(x, dtype=float)
    lo, hi = float(np.min(x)), float(np.max(x))
    mid, half = 0.5 * (lo + hi), 2.5 * max(hi - lo, 1e-12)
    return [(1e-4, 50.0), (mid - half, mid + half), (1e-6, 10.0 * sigma_scale)]


class Vasicek(DiffusionModel):
    """dX = kappa (alpha - X) dt + sigma dB."""

    name = "vasicek"
    param_names = ("kappa", "alpha", "sigma")
    drift_idx = (0, 1)
    coeff_table = _coeffs.VASICEK

    def admissible(self, theta):
        k, a, s = theta
        return bool(k > 0 and s > 0 and math.isfinite(a))

    def drift(self, x, theta):
        return theta[0] * (theta[1] - np.asarray(x, dtype=float))

    def diffusion(self, x, theta):
        return np.full_like(np.asarray(x, dtype=float), theta[2])

    def drift_dx(self, x, theta):
        return np.full_like(np.asarray(x, dtype=float), -theta[0])

    def diffusion_dx(self, x, theta):
        return np.zeros_like(np.asarray(x, dtype=float))

    def diffusion_dxx(self, x, theta):
        return np.zeros_like(np.asarray(x, dtype=float))

    def drift_partials(self, x, theta):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        k, a, _ = theta
        n = x.shape
        mu_ij = np.zeros(n + (2, 2))
        mu_ij[..., 0, 1] = mu_ij[..., 1, 0] = 1.0
        return {
            "mu": k * (a - x),
            "mu_x": np.full(n, -k),
            "mu_i": np.stack([a - x, np.full(n, k)], -1),
            "mu_ij": mu_ij,
            "mu_xij": np.zeros(n + (2, 2)),
        }

    def diffusion_partials(self, x, theta):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        n = x.shape
        zero = np.zeros(n)
        return {
            "s": np.full(n, theta[2]),
            "s_x": zero,
            "s_xx": zero,
            "s_i": np.ones(n + (1,)),
            "s_xi": np.zeros(n + (1,)),
            "s_xxi": np.zeros(n + (1,)),
            "s_ij": np.zeros(n + (1, 1)),
            "s_xij": np.zeros(n + (1, 1)),
            "s_xxij": np.zeros(n + (1, 1)),
        }

    def exact_logdensity(self, x, x0, delta, theta):
        k, a, s = theta
        if not (k > 0 and s > 0):
            raise DomainError("Vasicek requires kappa > 0 and sigma > 0")
        if not delta > 0:
            raise DomainError("delta must be positive")
        x = np.asarray(x, dtype=float)
        x0 = np.asarray(x0, dtype=float)
        decay = math.exp(-k * delta)
        mean = x0 * decay + a * (1.0 - decay)
        var = s * s * (-math.expm1(-2.0 * k * delta)) / (2.0 * k)
        return -0.5 * (_LOG_2PI + math.log(var)) - (x - mean) ** 2 / (2.0 * var)

    def stationary_law(self, theta):
        k, a, s = theta
        return stats.norm(loc=a, scale=s / math.sqrt(2.0 * k))

    def stationary_sample(self, rng, theta, size=None):
        k, a, s = theta
        return rng.normal(a, s / math.sqrt(2.0 * k), size=size)

    def stationary_mean(self, theta):
        return float(theta[1])

    def simulate_path(self, rng, x0, n, delta, theta):
        from .kernels import ar1_path

        k, a, s = theta
        decay = math.exp(-k * delta)
        sd = s * math.sqrt(-math.expm1(-2.0 * k * delta) / (2.0 * k))
        z = rng.standard_normal(n)
        return ar1_path(float(x0), a * (1.0 - decay), decay, sd, z)

    # closed-form expansion pieces, centred at alpha: u = (x - alpha) / sigma
    def gamma(self, x, theta):
        return (np.asarray(x, dtype=float) - theta[1]) / theta[2]

    def gamma_inv(self, y, theta):
        return theta[1] + theta[2] * np.asarray(y, dtype=float)

    def a2(self, x, x0, theta):
        u = self.gamma(x, theta)
        u0 = self.gamma(x0, theta)
        return -0.5 * theta[0] * (u * u - u0 * u0)

    def coeff_scalars(self, theta):
        return float(theta[0]), 0.0

    def param_bounds(self, x):
        return _mean_reverting_bounds(x, float(np.std(x)))

    def initial_guess(self, x, delta):
        k, a, var = _moment_init(x, delta)
        sigma = math.sqrt(max(2.0 * k * var, 1e-12))
        return np.array([k, a, sigma])


class CIR(DiffusionModel):
    """dX = kappa (alpha - X) dt + sigma sqrt(X) dB, with 2 kappa alpha > sigma^2."""

    name = "cir"
    param_names = ("kappa", "alpha", "sigma")
    drift_idx = (0, 1)
    domain = (0.0, math.inf)
    coeff_table = _coeffs.CIR

    def admissible(self, theta):
        k, a, s = theta
        return bool(k > 0 and a > 0 and s > 0 and 2.0 * k * a > s * s)

    def drift(self, x, theta):
        return theta[0] * (theta[1] - np.asarray(x, dtype=float))

    def diffusion(self, x, theta):
        return theta[2] * np.sqrt(np.asarray(x, dtype=float))

    def drift_dx(self, x, theta):
        return np.full_like(np.asarray(x, dtype=float), -theta[0])

    def diffusion_dx(self, x, theta):
        return 0.5 * theta[2] / np.sqrt(np.asarray(x, dtype=float))

    def diffusion_dxx(self, x, theta):
        x = np.asarray(x, dtype=float)
        return -0.25 * theta[2] / (x * np.sqrt(x))

    drift_partials = Vasicek.drift_partials

    def diffusion_partials(self, x, theta):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        s = theta[2]
        r = np.sqrt(x)
        zero2 = np.zeros(x.shape + (1, 1))
        return {
            "s": s * r,
            "s_x": 0.5 * s / r,
            "s_xx": -0.25 * s / (x * r),
            "s_i": r[..., None],
            "s_xi": (0.5 / r)[..., None],
            "s_xxi": (-0.25 / (x * r))[..., None],
            "s_ij": zero2,
            "s_xij": zero2,
            "s_xxij": zero2,
        }

    def _transition_constants(self, delta, theta):
        k, a, s = theta
        c = 4.0 * k / (s * s * (-math.expm1(-k * delta)))
        q = 2.0 * k * a / (s * s) - 1.0
        return c, q, math.exp(-k * delta)

    def exact_logdensity(self, x, x0, delta, theta):
        k, a, s = theta
        if not (k > 0 and a > 0 and s > 0):
            raise DomainError("CIR requires kappa, alpha, sigma > 0")
        if 2.0 * k * a < s * s:
            raise DomainError("CIR boundary condition violated: 2 kappa alpha < sigma^2 (q < 0)")
        if not delta > 0:
            raise DomainError("delta must be positive")
        scalar = np.ndim(x) == 0 and np.ndim(x0) == 0
        x, x0 = np.broadcast_arrays(np.atleast_1d(np.asarray(x, dtype=float)), np.atleast_1d(np.asarray(x0, dtype=float)))
        if np.any(x <= 0) or np.any(x0 <= 0):
            raise DomainError("CIR transition density needs strictly positive states")
        c, q, decay = self._transition_constants(delta, theta)
        u = 0.5 * c * x0 * decay
        v = 0.5 * c * x
        z = 2.0 * np.sqrt(u * v)
        from .kernels import log_bessel_i_vec

        out = math.log(0.5 * c) - u - v + 0.5 * q * np.log(v / u) + log_bessel_i_vec(q, z)
        return float(out[0]) if scalar else out

    def stationary_law(self, theta):
        k, a, s = theta
        return stats.gamma(2.0 * k * a / (s * s), scale=s * s / (2.0 * k))

    def stationary_sample(self, rng, theta, size=None):
        k, a, s = theta
        return rng.gamma(2.0 * k * a / (s * s), s * s / (2.0 * k), size=size)

    def stationary_mean(self, theta):
        return float(theta[1])

    def simulate_path(self, rng, x0, n, delta, theta):
        k, a, s = theta
        c, _, decay = self._transition_constants(delta, theta)
        nu = 4.0 * k * a / (s * s)
        out = np.empty(n + 1)
        out[0] = x0
        x = float(x0)
        for t in range(1, n + 1):
            x = float(sample_noncentral_chisq(rng, nu, c * x * decay)) / c
            out[t] = x
        return out

    # y = 2 sqrt(x) / sigma, b = 2 kappa alpha / sigma^2 - 1/2
    def gamma(self, x, theta):
        return 2.0 * np.sqrt(np.asarray(x, dtype=float)) / theta[2]

    def gamma_inv(self, y, theta):
        y = np.asarray(y, dtype=float)
        return 0.25 * theta[2] ** 2 * y * y

    def a2(self, x, x0, theta):
        k, _, _ = theta
        b = self.coeff_scalars(theta)[1]
        y = self.gamma(x, theta)
        y0 = self.gamma(x0, theta)
        return b * np.log(y / y0) - 0.25 * k * (y * y - y0 * y0)

    def coeff_scalars(self, theta):
        k, a, s = theta
        return float(k), 2.0 * k * a / (s * s) - 0.5

    def param_bounds(self, x):
        x = np.asarray(x, dtype=float)
        bounds = _mean_reverting_bounds(x, float(np.std(x)) / math.sqrt(max(float(np.mean(x)), 1e-12)))
        lo, hi = bounds[1]
        bounds[1] = (max(lo, 1e-8), hi)
        return bounds

    def initial_guess(self, x, delta):
        k, a, var = _moment_init(x, delta)
        a = max(a, 1e-8)
        # stationary variance alpha sigma^2 / (2 kappa)
        sigma = math.sqrt(max(2.0 * k * var / a, 1e-12))
        if 2.0 * k * a <= sigma * sigma:
            sigma = 0.9 * math.sqrt(2.0 * k * a)
        return np.array([k, a, sigma])


def vasicek_exact_logdensity(x, x0, delta, theta):
    return Vasicek().exact_logdensity(x, x0, delta, theta)


def cir_exact_logdensity(x, x0, delta, theta):
    return CIR().exact_logdensity(x, x0, delta, theta)


_I11_SERIES = (  # kappa^2 * I11 as a polynomial in t = kappa * delta
    (1, 1 / 2), (3, -1 / 6), (4, 1 / 18), (5, 1 / 90), (6, -1 / 135), (7, -1 / 945),
    (8, 1 / 1050), (9, 1 / 9450), (10, -1 / 8505), (11, -1 / 93555),
)
_I13_SERIES = (  # sigma * kappa * I13
    (1, -1.0), (2, 1 / 3), (4, -1 / 45), (6, 2 / 945), (8, -1 / 4725), (10, 2 / 93555),
)


def vasicek_fisher_exact(theta, delta) -> np.ndarray:
    """Per-observation Fisher information of (kappa, alpha, sigma) for Vasicek.

    Evaluated with e^{-2 kappa delta} so large kappa*delta cannot overflow;
    for kappa*delta < 0.05 the two cancelling entries use their power series.
    """
    k, _, s = (float(v) for v in theta)
    if not (k > 0 and s > 0):
        raise DomainError("Vasicek requires kappa > 0 and sigma > 0")
    if not delta > 0:
        raise DomainError("delta must be positive")
    t = k * delta
    if t < 0.05:
        i11 = sum(c * t**p for p, c in _I11_SERIES) / k**2
        i13 = sum(c * t**p for p, c in _I13_SERIES) / (s * k)
    else:
        e = math.exp(-2.0 * t)
        one_m = -math.expm1(-2.0 * t)
        i11 = 1.0 / (2.0 * k * k) + delta * e * (t * (1.0 + e) - 2.0 * one_m) / (k * one_m**2)
        i13 = (e * (1.0 + 2.0 * t) - 1.0) / (s * k * one_m)
    one_m1 = -math.expm1(-t)
    i22 = 2.0 * k * one_m1**2 / (s * s * (-math.expm1(-2.0 * t)))
    i33 = 2.0 / (s * s)
    return symmetrize([[i11, 0.0, i13], [0.0, i22, 0.0], [i13, 0.0, i33]])


def cir_fisher_first_order(theta, delta) -> np.ndarray:
    """Closed-form leading-order Fisher information ``-N(theta, 1, delta)`` for CIR.

    Stationary Gamma expectations of the first-order N entries; every
    integrand is a Laurent polynomial in x, so the moments are exact.
    """
    k, a, s = (float(v) for v in theta)
    g = 2.0 * k * a - s * s
    if not (k > 0 and a > 0 and s > 0 and g > 0):
        raise DomainError("CIR requires kappa, alpha, sigma > 0 and 2 kappa alpha > sigma^2")
    c = delta / g
    return np.array(
        [
            [c * a, c * k, -2.0 * c * k * a / s],
            [c * k, 2.0 * c * k**3 / (s * s), -2.0 * c * k * k / s],
            [-2.0 * c * k * a / s, -2.0 * c * k * k / s, 2.0 / (s * s) + 1.5 * c * k],
        ]
    )


MODELS = {"vasicek": Vasicek, "cir": CIR}


def register_model(name: str, factory):
    """Make a custom model class available to configs under ``name``."""
    MODELS[name] = factory


def get_model(name_or_model) -> DiffusionModel:
    if isinstance(name_or_model, DiffusionModel):
        return name_or_model
    try:
        return MODELS[str(name_or_model).lower()]()
    except KeyError:
        raise DomainError(f"unknown model {name_or_model!r}; known: {sorted(MODELS)}") from None
