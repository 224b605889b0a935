"""J-term closed-form approximation of the transition density.

The process is moved to unit diffusion with ``y = gamma(x) = int du / sigma(u)``.
The log-density is then

    -log sqrt(2 pi delta) + A1 + A2 + A3

with ``A1 = -log sigma(x) - (y - y0)^2 / (2 delta)``,
``A2 = int_{x0}^{x} mu_Y(gamma(u)) / sigma(u) du`` and
``A3 = log sum_{j<=J} c_j(y | y0) delta^j / j!``.

Two routes are provided.  The generic route evaluates everything by
quadrature (and root finding for gamma^{-1}).  Models that ship closed-form
pieces (``gamma``, ``a2`` and a coefficient table) get a vectorised path
that evaluates whole sample paths at once.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy import optimize

from . import kernels
from .errors import ConvergenceError, DomainError, TruncationBreakdown, UnsupportedCapability
from .numerics.quadrature import DEFAULT_SPEC, QuadratureSpec, integrate

J_MAX = 6
DIFF2_STEP = 1e-2
BREAKDOWN_FLOOR = 1e-12
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _check_order(J):
    if int(J) != J or not 0 <= J <= J_MAX:
        raise UnsupportedCapability(f"expansion order must be an integer in [0, {J_MAX}], got {J!r}")
    return int(J)


class TransformCache:
    """Per-(model, theta) memo of gamma values.

    ``closed_form`` selects the model's closed-form transform and
    coefficients when it has them; with ``closed_form=False`` every piece
    is computed by quadrature.  ``closed_coeffs=False`` keeps the
    closed-form transform but runs the c_j recursion by quadrature.  Changing theta through :meth:`set_theta`
    drops the memo.  Not thread-safe: use one cache per worker.
    """

    def __init__(
        self, model, theta, x_ref=None, closed_form=True, quad: QuadratureSpec = DEFAULT_SPEC, closed_coeffs=True
    ):
        self.model = model
        self.closed_form = bool(closed_form) and model.has_closed_transform
        self.closed_coeffs = self.closed_form and bool(closed_coeffs) and model.coeff_table is not None
        self.quad = quad
        self._x_ref_arg = x_ref
        self.theta = None
        self.set_theta(theta)

    def set_theta(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.theta is not None and np.array_equal(theta, self.theta):
            return self
        self.theta = theta.copy()
        self._gamma = {}
        x_ref = self._x_ref_arg
        if x_ref is None:
            x_ref = self.model.stationary_mean(theta)
        if x_ref is None or not self.model.in_domain(x_ref):
            lo, hi = self.model.domain
            x_ref = 0.0 if lo < 0.0 < hi else (1.0 if lo < 1.0 < hi else 0.5 * (lo + hi))
        self.x_ref = float(x_ref)
        return self

    def gamma(self, x: float) -> float:
        x = float(x)
        if self.closed_form:
            return float(self.model.gamma(x, self.theta))
        if x not in self._gamma:
            if not self.model.in_domain(x):
                raise DomainError(f"x={x!r} is outside the state domain {self.model.domain}")
            model, theta = self.model, self.theta
            self._gamma[x] = integrate(
                lambda u: 1.0 / model.diffusion(u, theta), self.x_ref, x, self.quad, vectorized=True
            )
        return self._gamma[x]

    def gamma_inv(self, y: float) -> float:
        y = float(y)
        if self.closed_form:
            return float(self.model.gamma_inv(y, self.theta))
        x = self._newton_inv(y)
        if x is not None:
            return x
        return self._bracket_inv(y)

    def _newton_inv(self, y: float):
        # Newton on gamma with gamma' = 1/sigma; gamma is carried forward by
        # short incremental integrals instead of re-integrating from x_ref
        model, theta = self.model, self.theta
        lo, hi = model.domain
        inv_sigma = lambda u: 1.0 / model.diffusion(u, theta)
        x, g = self.x_ref, 0.0
        tol = 1e-14 * max(1.0, abs(y))
        for _ in range(60):
            r = g - y
            if abs(r) <= tol:
                return x
            step = -r * float(model.diffusion(x, theta))
            if not math.isfinite(step):
                return None
            for _ in range(60):
                cand = x + step
                if lo < cand < hi:
                    break
                step *= 0.5
            else:
                return None
            try:
                g_new = g + integrate(inv_sigma, x, cand, self.quad, vectorized=True)
            except (DomainError, ArithmeticError):
                return None
            if not math.isfinite(g_new):
                return None
            if abs(step) <= 1e-15 * max(1.0, abs(x)):
                return cand
            x, g = cand, g_new
        return None

    def _bracket_inv(self, y: float) -> float:
        lo, hi = self.model.domain
        ref = self.x_ref
        target = lambda x: self.gamma(x) - y
        f_ref = target(ref)
        if f_ref == 0.0:
            return ref
        # expand a bracket away from x_ref; gamma is increasing
        step = max(1.0, abs(ref)) * 0.1
        a = b = ref
        for _ in range(200):
            if f_ref < 0:
                b = b + step if math.isinf(hi) else b + 0.5 * (hi - b)
                if target(b) > 0:
                    break
            else:
                a = a - step if math.isinf(lo) else a - 0.5 * (a - lo)
                if target(a) < 0:
                    break
            step *= 2.0
        else:
            raise ConvergenceError(f"could not bracket gamma^-1 at y={y!r}")
        if f_ref < 0:
            a = ref
        else:
            b = ref
        try:
            return optimize.brentq(target, a, b, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
        except (RuntimeError, ValueError) as exc:
            raise ConvergenceError(f"gamma^-1 root-finding failed at y={y!r}: {exc}") from exc


def _cache(model, theta, cache):
    if cache is None:
        return TransformCache(model, theta)
    return cache.set_theta(theta)


def gamma_transform(x, theta, model, cache=None) -> float:
    return _cache(model, theta, cache).gamma(x)


def mu_lambda_y(y, theta, model, cache=None):
    """Transformed drift mu_Y(y) and lambda_Y(y) = -(mu_Y^2 + mu_Y') / 2.

    mu_Y' comes from the chain rule with dx/dy = sigma(x), using the
    model's x-partials of mu and sigma.
    """
    cache = _cache(model, theta, cache)
    theta = cache.theta
    x = cache.gamma_inv(y)
    mu = float(model.drift(x, theta))
    s = float(model.diffusion(x, theta))
    s_x = float(model.diffusion_dx(x, theta))
    s_xx = float(model.diffusion_dxx(x, theta))
    mu_x = float(model.drift_dx(x, theta))
    mu_y = mu / s - 0.5 * s_x
    dmu_y = s * ((mu_x * s - mu * s_x) / (s * s) - 0.5 * s_xx)
    return mu_y, -0.5 * (mu_y * mu_y + dmu_y)


def _lambda_y(w, theta, model, cache):
    return mu_lambda_y(w, theta, model, cache)[1]


def _lambda_y_vec(w, theta, model, cache):
    """lambda_Y over an array of y values (one pass when gamma^-1 is closed form)."""
    w = np.asarray(w, dtype=float)
    if not cache.closed_form:
        return np.array([_lambda_y(v, theta, model, cache) for v in w.ravel()]).reshape(w.shape)
    x = model.gamma_inv(w, theta)
    mu = model.drift(x, theta)
    s = model.diffusion(x, theta)
    s_x = model.diffusion_dx(x, theta)
    mu_y = mu / s - 0.5 * s_x
    dmu_y = s * ((model.drift_dx(x, theta) * s - mu * s_x) / (s * s) - 0.5 * model.diffusion_dxx(x, theta))
    return -0.5 * (mu_y * mu_y + dmu_y)


def _coeff_quadrature(j, y, y0, theta, model, cache):
    """c_j by the recursion, written over s in [0, 1] with w = y0 + s (y - y0).

    In that form the (y - y0)^{-j} prefactor cancels, so y == y0 needs no
    special handling and gives the exact limit.
    """
    if j == 0:
        return 1.0
    span = y - y0
    if j == 1:
        return integrate(
            lambda s: _lambda_y_vec(y0 + s * span, theta, model, cache), 0.0, 1.0, cache.quad, vectorized=True
        )
    def prev(w):
        return np.array([_coeff_quadrature(j - 1, v, y0, theta, model, cache) for v in w.ravel()]).reshape(w.shape)

    def g(w):
        h = DIFF2_STEP * np.maximum(1.0, np.abs(w))
        # fourth-order five-point stencil; a 3-point one at h=1e-4 amplifies
        # rounding in c_{j-1} to ~1e-8
        m2, m1, mid, p1, p2 = (prev(w + k * h) for k in (-2, -1, 0, 1, 2))
        d2 = (-p2 + 16.0 * p1 - 30.0 * mid + 16.0 * m1 - m2) / (12.0 * h * h)
        return _lambda_y_vec(w, theta, model, cache) * mid + 0.5 * d2

    return j * integrate(lambda s: s ** (j - 1) * g(y0 + s * span), 0.0, 1.0, cache.quad, vectorized=True)


@lru_cache(maxsize=None)
def _flatten_table(table_id, table, J):
    rows = []
    for j in range(J + 1):
        for p, q, scal in table[j]:
            for i, l, num, den in scal:
                rows.append((j, p, q, i, l, num / den))
    arr = np.array(rows, dtype=float)
    return {
        "j": arr[:, 0].astype(int),
        "p": arr[:, 1].astype(int),
        "q": arr[:, 2].astype(int),
        "i": arr[:, 3],
        "l": arr[:, 4],
        "val": arr[:, 5],
    }


def laurent_coefficients(model, theta, weights):
    """Collapse ``sum_j weights[j] * c_j`` into one Laurent coefficient grid.

    Returns ``(C, pmin, qmin)`` with ``sum_j w_j c_j(y|y0) =
    sum C[p - pmin, q - qmin] y^p y0^q``.
    """
    J = len(weights) - 1
    flat = _flatten_table(id(model.coeff_table), model.coeff_table, J)
    k, b = model.coeff_scalars(theta)
    w = np.asarray(weights, dtype=float)[flat["j"]]
    vals = w * flat["val"] * k ** flat["i"] * b ** flat["l"]
    pmin, qmin = int(flat["p"].min()), int(flat["q"].min())
    C = np.zeros((int(flat["p"].max()) - pmin + 1, int(flat["q"].max()) - qmin + 1))
    np.add.at(C, (flat["p"] - pmin, flat["q"] - qmin), vals)
    return C, pmin, qmin


def coeff_closed(j, y, y0, theta, model):
    """c_j from the model's closed-form table (vectorised in y, y0)."""
    j = _check_order(j)
    if model.coeff_table is None:
        raise UnsupportedCapability(f"{model.name} has no closed-form coefficients")
    weights = np.zeros(j + 1)
    weights[j] = 1.0
    C, pmin, qmin = laurent_coefficients(model, theta, weights)
    y, y0 = np.broadcast_arrays(np.atleast_1d(np.asarray(y, float)), np.atleast_1d(np.asarray(y0, float)))
    out = kernels.laurent_eval(y, y0, C, pmin, qmin)
    return float(out[0]) if out.size == 1 and np.ndim(y) <= 1 and y.size == 1 else out


def coeff_c(j, y, y0, theta, model, cache=None) -> float:
    """Expansion coefficient c_j(y | y0; theta).

    Uses the model's closed form when the cache allows it, otherwise the
    quadrature recursion with central second differences.
    """
    j = _check_order(j)
    cache = _cache(model, theta, cache)
    if j == 0:
        return 1.0
    if cache.closed_coeffs:
        return float(coeff_closed(j, float(y), float(y0), cache.theta, model))
    return _coeff_quadrature(j, float(y), float(y0), cache.theta, model, cache)


def _weights(J, delta):
    return np.array([delta**j / math.factorial(j) for j in range(J + 1)])


def approx_logdensity(x, x0, delta, theta, J, model, cache=None) -> float:
    """log f^{(J)}(x | x0, delta; theta) for a single transition."""
    J = _check_order(J)
    if not delta > 0:
        raise DomainError("delta must be positive")
    cache = _cache(model, theta, cache)
    theta = cache.theta
    x, x0 = float(x), float(x0)
    y, y0 = cache.gamma(x), cache.gamma(x0)
    a1 = -math.log(float(model.diffusion(x, theta))) - (y - y0) ** 2 / (2.0 * delta)
    a2 = _a2(x, x0, theta, model, cache)
    total = sum(coeff_c(j, y, y0, theta, model, cache) * w for j, w in enumerate(_weights(J, delta)))
    if not total > 0:
        raise TruncationBreakdown(total)
    return -_HALF_LOG_2PI - 0.5 * math.log(delta) + a1 + a2 + math.log(total)


def _a2(x, x0, theta, model, cache):
    if cache.closed_form:
        return float(model.a2(x, x0, theta))

    def integrand(u):
        s = model.diffusion(u, theta)
        return model.drift(u, theta) / (s * s) - 0.5 * model.diffusion_dx(u, theta) / s

    return integrate(integrand, x0, x, cache.quad, vectorized=True)


def logdensity_terms(x, x0, delta, theta, J, model, x_ref=None, closed_form=True, extra_orders=()):
    """Vectorised per-transition log f^{(J)}.

    Returns an array of the same length as ``x``; entries where the
    truncated sum drops to ``BREAKDOWN_FLOOR`` or below are ``-inf``.
    With ``extra_orders`` the function also returns, for each order in it,
    the array ``A3^{(order)}``, sharing the transform work.
    """
    J = _check_order(J)
    theta = np.asarray(theta, dtype=float)
    x = np.asarray(x, dtype=float)
    x0 = np.asarray(x0, dtype=float)
    if closed_form and model.coeff_table is not None and model.has_closed_transform:
        y = model.gamma(x, theta)
        y0 = model.gamma(x0, theta)
        base = (
            -_HALF_LOG_2PI
            - 0.5 * math.log(delta)
            - np.log(model.diffusion(x, theta))
            - (y - y0) ** 2 / (2.0 * delta)
            + model.a2(x, x0, theta)
        )
        a3s = []
        for order in (J, *extra_orders):
            C, pmin, qmin = laurent_coefficients(model, theta, _weights(_check_order(order), delta))
            S = kernels.laurent_eval(y, y0, C, pmin, qmin)
            with np.errstate(invalid="ignore", divide="ignore"):
                a3s.append(np.where(S > BREAKDOWN_FLOOR, np.log(np.maximum(S, BREAKDOWN_FLOOR)), -np.inf))
        out = base + a3s[0]
        return (out, *a3s[1:]) if extra_orders else out

    cache = TransformCache(model, theta, x_ref=x_ref, closed_form=closed_form)
    orders = (J, *extra_orders)
    top = max(orders)
    out = np.empty(x.shape)
    a3s = [np.empty(x.shape) for _ in extra_orders]
    w = _weights(top, delta)
    for t, (xt, x0t) in enumerate(zip(x, x0)):
        y, y0 = cache.gamma(xt), cache.gamma(x0t)
        cs = [coeff_c(j, y, y0, theta, model, cache) for j in range(top + 1)]
        partial = np.cumsum(np.array(cs) * w)
        logs = [math.log(partial[o]) if partial[o] > BREAKDOWN_FLOOR else -math.inf for o in orders]
        a1 = -math.log(float(model.diffusion(xt, theta))) - (y - y0) ** 2 / (2.0 * delta)
        out[t] = -_HALF_LOG_2PI - 0.5 * math.log(delta) + a1 + _a2(xt, x0t, theta, model, cache) + logs[0]
        for k in range(len(extra_orders)):
            a3s[k][t] = logs[k + 1]
    return (out, *a3s) if extra_orders else out
