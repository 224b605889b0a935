"""Maximum likelihood fits, observed information, Wald statistics and
asymptotic bias/variance of the approximate estimators."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import partial

import numpy as np
from scipy import optimize

from .errors import ConvergenceError, DomainError
from .likelihood import EXACT, SamplePath, _kind, default_j_star, diagnostics, loglik, score, transition_scores
from .models import Vasicek, get_model, vasicek_fisher_exact
from .numerics.finite_diff import finite_diff_hessian
from .numerics.linalg import sym_eigen, symmetrize
from .numerics.random import make_rng
from .parallel import ordered_map

SCORE_TOL = 1e-6
STEP_TOL = 1e-9
POLISH_TARGET = 0.1


@dataclass(frozen=True)
class FitOptions:
    """Optimizer settings.

    ``score_tol`` is the convergence criterion on ``||score||_2 / n``;
    ``step_tol`` only stops the Newton polish early.
    """

    multistart: int = 5
    score_tol: float = SCORE_TOL
    step_tol: float = STEP_TOL
    simplex_maxiter: int = 2000
    quasi_newton_maxiter: int = 200
    newton_maxiter: int = 40
    start_spread: float = 0.25
    bounds: tuple = None
    closed_form: bool = True
    with_info: bool = False


@dataclass
class FitResult:
    theta_hat: object
    loglik: float
    converged: bool
    iterations: int
    gradient_norm: float
    kind: object
    n: int
    observed_info: np.ndarray = None
    std_errors: np.ndarray = None
    at_bounds: tuple = ()
    start: int = -1
    message: str = ""

    @property
    def label(self) -> str:
        return "MLE" if self.kind == EXACT else f"AMLE(J={self.kind})"

    @property
    def theta(self) -> np.ndarray:
        return np.asarray(self.theta_hat, dtype=float)


def _projected(grad, theta, bounds, rtol=1e-10):
    """Zero the components that push against an active bound (ascent direction)."""
    g = np.array(grad, dtype=float)
    for i, (lo, hi) in enumerate(bounds):
        width = hi - lo if math.isfinite(hi - lo) else max(1.0, abs(theta[i]))
        if theta[i] <= lo + rtol * width and g[i] < 0:
            g[i] = 0.0
        if theta[i] >= hi - rtol * width and g[i] > 0:
            g[i] = 0.0
    return g


def _active(theta, bounds, names, rtol=1e-6):
    out = []
    for i, (lo, hi) in enumerate(bounds):
        width = hi - lo if math.isfinite(hi - lo) else max(1.0, abs(theta[i]))
        if theta[i] <= lo + rtol * width or theta[i] >= hi - rtol * width:
            out.append(names[i])
    return tuple(out)


def _starts(init, bounds, k, spread):
    """``init`` followed by deterministic multiplicative perturbations."""
    init = np.asarray(init, dtype=float)
    d = init.size
    patterns = [np.zeros(d)]
    for i in range(d):
        e = np.zeros(d)
        e[i] = 1.0
        patterns += [e, -e]
    patterns += [np.ones(d), -np.ones(d)]
    lo = np.array([b[0] for b in bounds])
    hi = np.array([b[1] for b in bounds])
    out = []
    for p in patterns[:k]:
        x = init * (1.0 + spread * p)
        out.append(np.clip(x, lo + 1e-9 * (hi - lo), hi - 1e-9 * (hi - lo)))
    return out


class _Objective:
    """Negative mean log-likelihood with a memo of the last evaluations."""

    def __init__(self, path, kind, model, closed_form):
        self.path, self.kind, self.model, self.closed_form = path, kind, model, closed_form
        self.calls = 0

    def loglik(self, theta):
        self.calls += 1
        theta = np.asarray(theta, dtype=float)
        if not self.model.admissible(theta):
            return -math.inf
        try:
            v = loglik(self.path, theta, self.kind, self.model, self.closed_form)
        except (DomainError, ArithmeticError):
            return -math.inf
        return v if math.isfinite(v) else -math.inf

    def __call__(self, theta):
        v = self.loglik(theta)
        return -v / self.path.n if math.isfinite(v) else math.inf


def _score_norm(obj, theta, bounds):
    try:
        g = score(obj.path, theta, obj.kind, obj.model, normalize=True, closed_form=obj.closed_form)
    except DomainError:
        return math.inf
    return float(np.linalg.norm(_projected(g, theta, bounds)))


def _newton_polish(obj, theta, bounds, opts, names):
    lo = np.array([b[0] for b in bounds])
    hi = np.array([b[1] for b in bounds])
    f = obj(theta)
    gnorm = math.inf
    its = 0
    for its in range(1, opts.newton_maxiter + 1):
        try:
            g = -score(obj.path, theta, obj.kind, obj.model, normalize=True, closed_form=obj.closed_form)
        except DomainError:
            break
        pg = -_projected(-g, theta, bounds)
        gnorm = float(np.linalg.norm(pg))
        free = pg != 0.0
        # aim below the tolerance so converged fits are not marginal
        if gnorm <= POLISH_TARGET * opts.score_tol or not free.any():
            break
        try:
            H = finite_diff_hessian(obj, theta, f0=f)
        except DomainError:
            break
        Hf = symmetrize(H[np.ix_(free, free)])
        eig = sym_eigen(Hf)
        vals = np.abs(eig.values)
        vals = np.maximum(vals, 1e-8 * max(vals.max(), 1e-300))
        step = np.zeros_like(theta)
        step[free] = -(eig.vectors @ ((eig.vectors.T @ pg[free]) / vals))
        t = 1.0
        noise = 1e3 * np.finfo(float).eps * max(abs(f), 1.0)
        while t > 1e-10:
            cand = np.clip(theta + t * step, lo, hi)
            fc = obj(cand)
            if fc <= f + 1e-4 * t * float(pg @ step) or (fc <= f and t < 1.0):
                break
            # f is flat to rounding here; judge the step by the score instead
            if math.isfinite(fc) and abs(fc - f) <= noise and _score_norm(obj, cand, bounds) < gnorm:
                break
            t *= 0.5
        else:
            break
        moved = float(np.linalg.norm(cand - theta))
        theta, f = cand, fc
        if moved < opts.step_tol:
            gnorm = _score_norm(obj, theta, bounds)
            break
    return theta, f, gnorm, its


def _single_start(obj, start, bounds, opts, names):
    scale = np.maximum(np.abs(start), 1e-8)
    zb = [(lo / s, hi / s) for (lo, hi), s in zip(bounds, scale)]
    fz = lambda z: obj(z * scale)
    iterations = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = optimize.minimize(
            fz, start / scale, method="Nelder-Mead", bounds=zb,
            options={"maxiter": opts.simplex_maxiter, "xatol": 1e-7, "fatol": 1e-12, "adaptive": False},
        )
        iterations += int(res.nit)
        z = res.x
        if math.isfinite(res.fun):

            def fz_safe(zz):
                v = fz(zz)
                return v if math.isfinite(v) else 1e300

            def jac(zz):
                h = 1e-7 * np.maximum(1.0, np.abs(zz))
                out = np.empty_like(zz)
                for i in range(zz.size):
                    e = np.zeros_like(zz)
                    e[i] = h[i]
                    out[i] = (fz_safe(zz + e) - fz_safe(zz - e)) / (2.0 * h[i])
                return out

            qn = optimize.minimize(
                fz_safe, z, jac=jac, method="L-BFGS-B", bounds=zb,
                options={"maxiter": opts.quasi_newton_maxiter, "ftol": 1e-15, "gtol": 1e-12},
            )
            iterations += int(qn.nit)
            if qn.fun <= res.fun:
                z = qn.x
    theta = np.clip(z * scale, [b[0] for b in bounds], [b[1] for b in bounds])
    if not math.isfinite(obj(theta)):
        return theta, math.inf, math.inf, iterations
    theta, f, gnorm, its = _newton_polish(obj, theta, bounds, opts, names)
    return theta, f, gnorm, iterations + its


def fit(path: SamplePath, model, kind=EXACT, init=None, opts: FitOptions = None) -> FitResult:
    """Maximise the exact (``kind="exact"``) or J-term (``kind=J``) log-likelihood.

    Simplex search in init-scaled coordinates, quasi-Newton refinement,
    then a Newton polish on finite-difference derivatives.  Starts are
    tried in order (``init`` first) until one meets the score criterion;
    if none does the best point is returned with ``converged=False``.
    """
    opts = FitOptions() if opts is None else opts
    model = get_model(model)
    kind = _kind(kind)
    path.check_model(model)
    bounds = list(opts.bounds) if opts.bounds is not None else model.param_bounds(path.observations)
    if init is None:
        init = model.initial_guess(path.observations, path.delta)
    init = np.asarray(init, dtype=float)
    lo = np.array([b[0] for b in bounds])
    hi = np.array([b[1] for b in bounds])
    init = np.clip(init, lo, hi)
    obj = _Objective(path, kind, model, opts.closed_form)
    names = tuple(model.param_names)

    best = None
    iterations = 0
    for k, start in enumerate(_starts(init, bounds, max(1, opts.multistart), opts.start_spread)):
        if not math.isfinite(obj(start)):
            continue
        theta, f, gnorm, its = _single_start(obj, start, bounds, opts, names)
        iterations += its
        cand = (gnorm <= opts.score_tol, -f, theta, gnorm, k)
        if best is None or (cand[0], cand[1]) > (best[0], best[1]):
            best = cand
        if cand[0]:
            break
    if best is None:
        return FitResult(
            model.params(init), -math.inf, False, iterations, math.inf, kind, path.n,
            message="log-likelihood not finite at any start",
        )
    ok, negf, theta, gnorm, k = best
    at_b = _active(theta, bounds, names)
    result = FitResult(
        theta_hat=model.params(theta),
        loglik=negf * path.n,
        converged=bool(ok),
        iterations=iterations,
        gradient_norm=gnorm * path.n,
        kind=kind,
        n=path.n,
        at_bounds=at_b,
        start=k,
        message=("converged" if ok else "score criterion not met") + (f"; at bounds: {', '.join(at_b)}" if at_b else ""),
    )
    if opts.with_info:
        attach_info(result, path, model, opts.closed_form)
    return result


def attach_info(result: FitResult, path, model, closed_form=True):
    """Fill ``observed_info`` and ``std_errors`` (from info^{-1} / n)."""
    info = observed_info(path, result.theta, result.kind, model, closed_form)
    result.observed_info = info
    try:
        eig = sym_eigen(info)
        cov = eig.inverse() / path.n
        result.std_errors = np.sqrt(np.maximum(np.diag(cov), 0.0))
    except DomainError:
        result.std_errors = np.full(info.shape[0], math.nan)
    return result


def observed_info(path: SamplePath, theta, kind, model, closed_form=True) -> np.ndarray:
    """Average outer product of per-transition scores (PSD by construction)."""
    model = get_model(model)
    G = transition_scores(path, theta, kind, model, closed_form=closed_form)
    return symmetrize(G.T @ G / path.n)


def wald_statistic(theta_hat, theta0, info, n) -> float:
    """n (theta_hat - theta0)' info (theta_hat - theta0)."""
    theta_hat = np.asarray(theta_hat, dtype=float)
    theta0 = np.asarray(theta0, dtype=float)
    info = np.asarray(info, dtype=float)
    if theta_hat.ndim != 1 or theta0.shape != theta_hat.shape or info.shape != (theta_hat.size,) * 2:
        raise DomainError(f"dimension mismatch: theta_hat {theta_hat.shape}, theta0 {theta0.shape}, info {info.shape}")
    diff = theta_hat - theta0
    return max(0.0, float(n) * float(diff @ symmetrize(info) @ diff))


def select_J(n: int, delta: float, epsilon: float = 0.0) -> int:
    """Smallest adequate expansion order for n observations at spacing delta.

    Integer part of ``-(1 + eps) / (2 log delta) * log n - 1`` plus one,
    clamped below at 1.
    """
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta must lie in (0, 1), got {delta!r}")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n!r}")
    if epsilon < 0:
        raise DomainError("epsilon must be non-negative")
    bound = -(1.0 + epsilon) / (2.0 * math.log(delta)) * math.log(n) - 1.0
    return max(1, math.floor(bound) + 1)


# ---------------------------------------------------------------------------
# asymptotic moments

@dataclass
class AsymptoticMoments:
    bias: np.ndarray
    variance: np.ndarray
    R: int
    long_n: int
    excluded: int
    J: int
    J_star: int
    heuristic: bool
    names: tuple = field(default_factory=tuple)

    @property
    def sd(self) -> np.ndarray:
        return np.sqrt(np.maximum(np.diag(self.variance), 0.0))


def combine_moments(N, U, info, theta0, draws):
    """Bias B and variance V from long-run (N, U), I(delta) and per-path (theta_n, N_n, F_n)."""
    Ninv = np.linalg.inv(N)
    eye = np.eye(len(theta0))
    terms = [(eye - Ninv @ (Nn - N)) @ Ninv @ (Nn + Fn) @ (th - theta0) for th, Nn, Fn in draws]
    bias = Ninv @ U + np.mean(terms, axis=0)
    cov = np.atleast_2d(np.cov(np.array([d[0] for d in draws]), rowvar=False))
    return bias, symmetrize(Ninv @ info @ cov @ info @ Ninv)


def _moment_replication(rep, model_name, theta0, J, J_star, delta, n, seed, fit_opts):
    from .simulate import SimSpec, simulate_exact

    model = get_model(model_name)
    spec = SimSpec(model_name, tuple(theta0), n, delta, seed=seed)
    path = simulate_exact(spec, make_rng(seed, 1, rep))
    res = fit(path, model, EXACT, opts=fit_opts)
    if not res.converged:
        return None
    D = diagnostics(path, theta0, J, model, J_star)
    return res.theta, D.N_n, D.F_n


def asymptotic_moments(
    model, theta0, J, delta, R, n, long_n=200_000, seed=0, workers=1, J_star=None, fit_opts=None
) -> AsymptoticMoments:
    """Monte-Carlo evaluation of the asymptotic bias B and variance V.

    N and U come from the diagnostics of one path of length ``long_n`` at
    theta0.  Over ``R`` replications of length ``n`` the exact MLE and the
    per-path N_n, F_n feed

        B = N^-1 U + mean{ [I - N^-1 (N_n - N)] N^-1 (N_n + F_n) (theta_n - theta0) }
        V = N^-1 I(delta) Cov(theta_n) I(delta) N^-1

    with I(delta) exact for Vasicek and -N at J=6 otherwise.  For J=1 the
    result is flagged heuristic.
    """
    from .simulate import SimSpec, simulate_exact

    model = get_model(model)
    theta0 = model.check_theta(theta0)
    J_star = default_j_star(J) if J_star is None else J_star
    long_path = simulate_exact(SimSpec(model.name, tuple(theta0), long_n, delta, seed=seed), make_rng(seed, 0))
    D = diagnostics(long_path, theta0, J, model, J_star)
    N, U = D.N_n, D.U_n
    if isinstance(model, Vasicek):
        info = vasicek_fisher_exact(theta0, delta)
    else:
        info = -diagnostics(long_path, theta0, 6, model, 6).N_n

    job = partial(
        _moment_replication, model_name=model.name, theta0=tuple(theta0), J=J, J_star=J_star,
        delta=delta, n=n, seed=seed, fit_opts=fit_opts,
    )
    results = ordered_map(job, range(R), workers)
    kept = [r for r in results if r is not None]
    excluded = R - len(kept)
    if excluded > 0.1 * R:
        raise ConvergenceError(f"{excluded} of {R} replications failed to converge")
    bias, V = combine_moments(N, U, info, theta0, kept)
    return AsymptoticMoments(bias, V, R, long_n, excluded, J, J_star, J == 1, tuple(model.param_names))
