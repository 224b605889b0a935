"""Sample-path generation and path files.

Exact samplers cover Vasicek (Gaussian AR(1)) and CIR (scaled noncentral
chi-square).  Other models fall back to Euler-Maruyama.  Randomness always
comes from a caller-supplied ``numpy.random.Generator``; :func:`spec_rng`
derives it from the seed of a :class:`SimSpec`.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, UnsupportedCapability
from .likelihood import SamplePath
from .models import get_model
from .numerics.random import make_rng

EULER_FLOOR = 1e-12
EXPLOSION = 1e12
STATIONARY = "stationary"


@dataclass(frozen=True)
class SimSpec:
    """What to simulate.

    ``x0`` is a number or ``"stationary"`` (draw X_0 from the stationary
    law).  ``substeps`` only matters for the Euler scheme.
    """

    model: str
    theta: tuple
    n: int
    delta: float
    x0: object = STATIONARY
    seed: int = 0
    substeps: int = 1

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(float(v) for v in self.theta))
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise DomainError(f"delta must be positive, got {self.delta!r}")
        if int(self.substeps) != self.substeps or self.substeps < 1:
            raise DomainError(f"substeps must be a positive integer, got {self.substeps!r}")
        if self.n * self.substeps > 2**40:
            raise DomainError("n * substeps is too large")
        if self.x0 != STATIONARY:
            model = get_model(self.model)
            if not model.in_domain(float(self.x0)):
                raise DomainError(f"x0={self.x0!r} is outside the {model.name} state domain")


def spec_rng(spec: SimSpec, *keys) -> np.random.Generator:
    return make_rng(spec.seed, *keys)


def _metadata(spec, model, method):
    return {
        "model": model.name,
        "theta": list(spec.theta),
        "delta": spec.delta,
        "seed": spec.seed,
        "n": spec.n,
        "method": method,
    }


def _initial(spec, model, theta, rng):
    if spec.x0 == STATIONARY:
        return float(model.stationary_sample(rng, theta))
    return float(spec.x0)


def simulate_exact(spec: SimSpec, rng=None) -> SamplePath:
    """Draw a path from the exact transition law.

    Raises
    ------
    UnsupportedCapability
        The model has no exact sampler.
    DomainError
        Parameters outside the model's region (CIR needs 2 kappa alpha > sigma^2).
    """
    model = get_model(spec.model)
    theta = model.check_theta(np.array(spec.theta))
    rng = spec_rng(spec) if rng is None else rng
    x0 = _initial(spec, model, theta, rng)
    obs = model.simulate_path(rng, x0, spec.n, spec.delta, theta)
    return SamplePath(obs, spec.delta, _metadata(spec, model, "exact"))


def simulate_euler(spec: SimSpec, model=None, rng=None, increments=None) -> SamplePath:
    """Euler-Maruyama with ``spec.substeps`` steps per observation interval.

    Only the n+1 observation-time values are kept.  On a bounded-below
    domain the state is reflected at ``lower + 1e-12``, which biases the
    scheme near the boundary.  ``increments`` (standard normals, shape
    ``(n, substeps)``) can be passed to couple two runs.
    """
    model = get_model(spec.model if model is None else model)
    theta = np.array(spec.theta)
    if theta.shape != (model.dim,):
        raise DomainError(f"{model.name} expects {model.dim} parameters")
    rng = spec_rng(spec) if rng is None else rng
    m = int(spec.substeps)
    h = spec.delta / m
    x = _initial(spec, model, theta, rng)
    if increments is None:
        increments = rng.standard_normal((spec.n, m))
    z = np.asarray(increments, dtype=float).reshape(spec.n, m)
    lo = model.domain[0]
    floor = lo + EULER_FLOOR if math.isfinite(lo) else None
    sq = math.sqrt(h)
    out = np.empty(spec.n + 1)
    out[0] = x
    for t in range(spec.n):
        for k in range(m):
            x = x + float(model.drift(x, theta)) * h + float(model.diffusion(x, theta)) * sq * z[t, k]
            if floor is not None and x < floor:
                x = 2.0 * floor - x
            if not abs(x) <= EXPLOSION:
                raise DomainError(f"Euler path exploded at observation {t}, substep {k} (x={x!r})")
        out[t + 1] = x
    return SamplePath(out, spec.delta, _metadata(spec, model, "euler"))


def simulate(spec: SimSpec, rng=None) -> SamplePath:
    """Exact sampler when available, otherwise Euler."""
    try:
        return simulate_exact(spec, rng)
    except UnsupportedCapability:
        return simulate_euler(spec, rng=rng)


def write_path(path: SamplePath, csv_file) -> Path:
    """Write ``t,x`` rows and a ``.json`` metadata sidecar next to the CSV."""
    csv_file = Path(csv_file)
    with csv_file.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "x"])
        for i, v in enumerate(path.observations):
            w.writerow([repr(i * path.delta), repr(float(v))])
    meta = dict(path.metadata)
    meta.setdefault("delta", path.delta)
    meta["n"] = path.n
    csv_file.with_suffix(".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return csv_file


def read_path(csv_file, delta=None) -> SamplePath:
    """Read a ``t,x`` CSV.  ``delta`` comes from the sidecar, the argument, or the time column.

    Raises
    ------
    DomainError
        Malformed file; the message names the offending line.
    """
    csv_file = Path(csv_file)
    if not csv_file.is_file():
        raise DomainError(f"cannot read path file {csv_file}")
    sidecar = csv_file.with_suffix(".json")
    meta = json.loads(sidecar.read_text()) if sidecar.exists() else {}
    ts, xs = [], []
    with csv_file.open(newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows, None)
        if header is None or [h.strip() for h in header] != ["t", "x"]:
            raise DomainError(f"{csv_file}: line 1: expected header 't,x', got {header!r}")
        for lineno, row in enumerate(rows, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise DomainError(f"{csv_file}: line {lineno}: expected 2 fields, got {len(row)}")
            try:
                ts.append(float(row[0]))
                xs.append(float(row[1]))
            except ValueError:
                raise DomainError(f"{csv_file}: line {lineno}: non-numeric value in {row!r}") from None
    if len(xs) < 2:
        raise DomainError(f"{csv_file}: need at least two observations")
    if delta is None:
        delta = meta.get("delta")
    if delta is None:
        steps = np.diff(ts)
        delta = float(np.mean(steps))
        if not np.allclose(steps, delta, rtol=1e-9, atol=0.0):
            raise DomainError(f"{csv_file}: observation times are not equally spaced")
    return SamplePath(np.array(xs), float(delta), meta)
