"""Log-likelihoods of discretely sampled paths, their scores and diagnostics."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnsupportedCapability
from .expansion import J_MAX, _check_order, logdensity_terms
from .models import get_model
from .numerics.finite_diff import finite_diff_gradient, finite_diff_hessian

EXACT = "exact"


@dataclass(frozen=True)
class SamplePath:
    """Observations X_0, ..., X_n at equal spacing ``delta``.

    ``metadata`` is free-form (model id, seed, true theta for simulated
    paths) and does not take part in any computation.
    """

    observations: np.ndarray
    delta: float
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        obs = np.asarray(self.observations, dtype=float).ravel().copy()
        obs.setflags(write=False)
        object.__setattr__(self, "observations", obs)
        if obs.size < 2:
            raise DomainError("a sample path needs at least two observations")
        if not np.all(np.isfinite(obs)):
            raise DomainError("sample path contains non-finite observations")
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise DomainError(f"delta must be finite and positive, got {self.delta!r}")

    @property
    def n(self) -> int:
        """Number of transitions."""
        return self.observations.size - 1

    @property
    def x(self) -> np.ndarray:
        return self.observations[1:]

    @property
    def x0(self) -> np.ndarray:
        return self.observations[:-1]

    def check_model(self, model):
        if not model.in_domain(self.observations):
            lo, hi = model.domain
            bad = np.flatnonzero(~((self.observations > lo) & (self.observations < hi)))
            raise DomainError(
                f"observation {int(bad[0])} = {self.observations[bad[0]]!r} is outside the {model.name} state domain"
            )


def _kind(kind):
    if kind is None or (isinstance(kind, str) and kind.lower() == EXACT):
        return EXACT
    return _check_order(kind)


def transition_logdensities(path: SamplePath, theta, kind, model, closed_form=True) -> np.ndarray:
    """Per-transition log-densities, exact or J-term (``kind`` = "exact" or J)."""
    model = get_model(model)
    theta = model.check_theta(theta)
    path.check_model(model)
    kind = _kind(kind)
    if kind == EXACT:
        if not model.has_exact_density:
            raise UnsupportedCapability(f"{model.name} has no exact transition density")
        return np.asarray(model.exact_logdensity(path.x, path.x0, path.delta, theta), dtype=float)
    return logdensity_terms(path.x, path.x0, path.delta, theta, kind, model, closed_form=closed_form)


def _total(values) -> float:
    # fixed-order reduction: np.sum's pairwise order depends only on length
    return float(np.sum(values))


def approx_loglik(path: SamplePath, theta, J, model, closed_form=True) -> float:
    """J-term approximate log-likelihood; -inf if the truncated sum breaks down anywhere."""
    return _total(transition_logdensities(path, theta, _check_order(J), model, closed_form))


def exact_loglik(path: SamplePath, theta, model) -> float:
    """Exact log-likelihood from the model's transition density."""
    return _total(transition_logdensities(path, theta, EXACT, model))


def loglik(path: SamplePath, theta, kind, model, closed_form=True) -> float:
    return _total(transition_logdensities(path, theta, kind, model, closed_form))


def _guarded(f):
    def wrapped(theta):
        try:
            return f(theta)
        except DomainError:
            return -math.inf

    return wrapped


def _stencil_failure(exc):
    return DomainError(
        f"{exc}: the log-likelihood is -inf or undefined next to theta; "
        "move theta away from the parameter bounds or shrink them"
    )


def score(path: SamplePath, theta, kind, model, normalize=False, h=None, closed_form=True) -> np.ndarray:
    """Central-difference gradient of the log-likelihood in theta.

    Parameters
    ----------
    kind : "exact" or int
        Exact likelihood or the J-term approximation.
    normalize : bool
        Divide by the number of transitions.
    """
    model = get_model(model)
    theta = model.check_theta(theta)
    f = _guarded(lambda th: loglik(path, th, kind, model, closed_form))
    try:
        g = finite_diff_gradient(f, theta, h)
    except DomainError as exc:
        raise _stencil_failure(exc) from None
    return g / path.n if normalize else g


def transition_scores(path: SamplePath, theta, kind, model, h=None, closed_form=True) -> np.ndarray:
    """Per-transition score vectors, shape ``(n, d)``."""
    model = get_model(model)
    theta = model.check_theta(theta)

    def f(th):
        try:
            return transition_logdensities(path, th, kind, model, closed_form)
        except DomainError:
            return np.full(path.n, -math.inf)

    try:
        return finite_diff_gradient(f, theta, h)
    except DomainError as exc:
        raise _stencil_failure(exc) from None


def hessian(path: SamplePath, theta, kind, model, normalize=False, h=None, closed_form=True) -> np.ndarray:
    model = get_model(model)
    theta = model.check_theta(theta)
    f = _guarded(lambda th: loglik(path, th, kind, model, closed_form))
    try:
        H = finite_diff_hessian(f, theta, h)
    except DomainError as exc:
        raise _stencil_failure(exc) from None
    return H / path.n if normalize else H


def default_j_star(J: int) -> int:
    """Order of the truncation used in place of the infinite series."""
    return min(max(J + 2, 4), J_MAX)


@dataclass(frozen=True)
class DiagnosticSet:
    """Averages N_n, U_n, F_n evaluated at ``theta``."""

    N_n: np.ndarray
    U_n: np.ndarray
    F_n: np.ndarray
    J: int
    J_star: int
    delta: float
    theta: np.ndarray


def diagnostics(path: SamplePath, theta, J, model, J_star=None, closed_form=True) -> DiagnosticSet:
    """Mean Hessian of log f^(J) and mean gradient/Hessian of A3^(J*) - A3^(J).

    A3^(J*) stands in for the untruncated series; ``J_star`` defaults to
    ``max(J + 2, 4)`` capped at the largest supported order.
    """
    model = get_model(model)
    theta = model.check_theta(theta)
    path.check_model(model)
    J = _check_order(J)
    J_star = default_j_star(J) if J_star is None else _check_order(J_star)
    if J_star < J:
        raise DomainError(f"J_star={J_star} must be at least J={J}")
    n = path.n

    def mean_loglik(th):
        try:
            model.check_theta(th)
            return _total(logdensity_terms(path.x, path.x0, path.delta, th, J, model, closed_form=closed_form)) / n
        except DomainError:
            return -math.inf

    def mean_gap(th):
        try:
            model.check_theta(th)
            _, a_lo, a_hi = logdensity_terms(
                path.x, path.x0, path.delta, th, J, model, closed_form=closed_form, extra_orders=(J, J_star)
            )
        except DomainError:
            return math.inf
        return _total(a_hi - a_lo) / n

    d = theta.size
    try:
        N_n = finite_diff_hessian(mean_loglik, theta)
        if J_star == J:
            U_n, F_n = np.zeros(d), np.zeros((d, d))
        else:
            U_n = finite_diff_gradient(mean_gap, theta)
            F_n = finite_diff_hessian(mean_gap, theta)
    except DomainError as exc:
        raise _stencil_failure(exc) from None
    return DiagnosticSet(N_n, U_n, F_n, J, J_star, path.delta, theta.copy())
