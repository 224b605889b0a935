"""Experiment configuration files (TOML).

Schema (every key optional unless the experiment needs it; unknown keys
are rejected)::

    kind    = "estimator_study"   # table1 | estimator_study | wald_study | single_fit | simulate
    model   = "vasicek"           # vasicek | cir | any registered name
    theta   = [0.858, 0.0891, 0.0468]
    seed    = 1                   # master seed (u64)
    workers = 1
    out     = "results"
    R       = 200

    [grid]
    n        = [500]
    delta    = ["1/12"]           # numbers or "a/b" strings
    schedule = "fixed"            # fixed | n^-1/6 | n^-1/2 (wald_study)
    J        = [1, 2]

    [asymptotic]                  # estimator_study only
    enabled = false
    J       = [1]
    long_n  = 200000

    [wald]
    info = "exact"                # exact | observed

    [fit]                         # single_fit
    path       = "path.csv"
    J          = 2                # omitted: chosen by select_J
    estimators = ["exact", "amle"]
    theta0     = [0.858, 0.0891, 0.0468]

    [simulate]
    n        = 500
    delta    = "1/12"
    x0       = "stationary"       # or a number
    method   = "exact"            # exact | euler
    substeps = 1
"""
from __future__ import annotations

import dataclasses
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ConfigError
from .expansion import J_MAX

KINDS = ("table1", "estimator_study", "wald_study", "single_fit", "simulate")
SCHEDULES = ("fixed", "n^-1/6", "n^-1/2")

VASICEK_TABLE2 = (0.858, 0.0891, 0.0468)
CIR_TABLE3 = (0.892, 0.09, 0.1817)
# the diminishing-delta study uses the Vasicek model at these values
WALD_THETA = (0.892, 0.09, 0.1817)


def parse_delta(value, bounded=True) -> float:
    """A sampling interval from a number or an ``"a/b"`` string.

    With ``bounded`` the value must lie in (0, 1), as the study grids and
    the J-selection rule require; otherwise any positive value passes.
    """
    try:
        d = float(Fraction(value)) if isinstance(value, str) else float(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"cannot read delta from {value!r}") from None
    if not (d > 0.0 and (d < 1.0 or not bounded)):
        raise ConfigError(f"delta must lie in {'(0, 1)' if bounded else '(0, inf)'}, got {value!r}")
    return d


def schedule_delta(schedule: str, n: int) -> float:
    if schedule == "n^-1/6":
        return n ** (-1.0 / 6.0)
    if schedule == "n^-1/2":
        return n ** (-0.5)
    raise ConfigError(f"schedule {schedule!r} does not define delta from n")


@dataclass(frozen=True)
class Grid:
    n: tuple = (500,)
    delta: tuple = ("1/12",)
    schedule: str = "fixed"
    J: tuple = (1, 2)

    def deltas(self) -> tuple:
        return tuple(parse_delta(d) for d in self.delta)

    def cells(self) -> list:
        """(n, delta label, delta) in row-major order."""
        if self.schedule == "fixed":
            return [(n, str(d), parse_delta(d)) for n in self.n for d in self.delta]
        return [(n, self.schedule, schedule_delta(self.schedule, n)) for n in self.n]


@dataclass(frozen=True)
class Asymptotic:
    enabled: bool = False
    J: tuple = (1,)
    long_n: int = 200_000


@dataclass(frozen=True)
class WaldOpts:
    info: str = "exact"


@dataclass(frozen=True)
class FitOpts:
    path: str = ""
    J: int = None
    estimators: tuple = ("exact", "amle")
    theta0: tuple = None


@dataclass(frozen=True)
class SimulateOpts:
    n: int = 500
    delta: object = "1/12"
    x0: object = "stationary"
    method: str = "exact"
    substeps: int = 1


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str = "estimator_study"
    model: str = "vasicek"
    theta: tuple = VASICEK_TABLE2
    seed: int = 1
    workers: int = 1
    out: str = "results"
    R: int = 200
    grid: Grid = field(default_factory=Grid)
    asymptotic: Asymptotic = field(default_factory=Asymptotic)
    wald: WaldOpts = field(default_factory=WaldOpts)
    fit: FitOpts = field(default_factory=FitOpts)
    simulate: SimulateOpts = field(default_factory=SimulateOpts)

    def replace(self, **kw) -> "ExperimentConfig":
        return validate(dataclasses.replace(self, **kw))

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


_SECTIONS = {"grid": Grid, "asymptotic": Asymptotic, "wald": WaldOpts, "fit": FitOpts, "simulate": SimulateOpts}


def _tuple(v):
    return tuple(v) if isinstance(v, (list, tuple)) else v


def _build(cls, data: dict, where: str):
    if not isinstance(data, dict):
        raise ConfigError(f"[{where}] must be a table")
    names = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(data) - names)
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(unknown)}")
    return cls(**{k: _tuple(v) for k, v in data.items()})


def from_dict(data: dict) -> ExperimentConfig:
    data = dict(data)
    sections = {k: _build(cls, data.pop(k), k) for k, cls in _SECTIONS.items() if k in data}
    top = _build(ExperimentConfig, data, "top level") if data else ExperimentConfig()
    return validate(dataclasses.replace(top, **sections))


def defaults_for(kind: str) -> ExperimentConfig:
    """Built-in defaults reproducing the corresponding published study cell."""
    if kind == "wald_study":
        return ExperimentConfig(
            kind=kind, theta=WALD_THETA, R=500,
            grid=Grid(n=(500, 1000, 2000, 4000, 8000), delta=(), schedule="n^-1/6", J=(1, 2)),
        )
    return ExperimentConfig(kind=kind)


def load(path) -> ExperimentConfig:
    """Read and validate a TOML configuration file."""
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    kind = data.get("kind", "estimator_study")
    if kind not in KINDS:
        raise ConfigError(f"kind must be one of {KINDS}, got {kind!r}")
    base = defaults_for(kind).as_dict()
    for key, value in data.items():
        if key in _SECTIONS and isinstance(value, dict) and isinstance(base.get(key), dict):
            base[key] = {**base[key], **value}
        else:
            base[key] = value
    return from_dict(base)


def _int(v, name, lo=None):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"{name} must be an integer, got {v!r}")
    if lo is not None and v < lo:
        raise ConfigError(f"{name} must be >= {lo}, got {v}")
    return v


def validate(cfg: ExperimentConfig) -> ExperimentConfig:
    from .models import MODELS

    if cfg.kind not in KINDS:
        raise ConfigError(f"kind must be one of {KINDS}, got {cfg.kind!r}")
    if str(cfg.model).lower() not in MODELS:
        raise ConfigError(f"unknown model {cfg.model!r}; known: {sorted(MODELS)}")
    try:
        theta = tuple(float(v) for v in cfg.theta)
    except (TypeError, ValueError):
        raise ConfigError(f"theta must be a list of numbers, got {cfg.theta!r}") from None
    _int(cfg.seed, "seed", 0)
    if cfg.seed >= 2**64:
        raise ConfigError("seed must fit in 64 bits")
    _int(cfg.workers, "workers", 1)
    _int(cfg.R, "R", 1)
    g = cfg.grid
    if g.schedule not in SCHEDULES:
        raise ConfigError(f"grid.schedule must be one of {SCHEDULES}, got {g.schedule!r}")
    for n in g.n:
        _int(n, "grid.n entries", 2)
    g.deltas()
    if g.schedule == "fixed" and cfg.kind in ("estimator_study", "wald_study") and not g.delta:
        raise ConfigError("grid.delta is empty")
    for J in (*g.J, *cfg.asymptotic.J):
        _int(J, "J entries", 0)
        if J > J_MAX:
            raise ConfigError(f"J entries must be <= {J_MAX}, got {J}")
    _int(cfg.asymptotic.long_n, "asymptotic.long_n", 2)
    if cfg.wald.info not in ("exact", "observed"):
        raise ConfigError(f"wald.info must be 'exact' or 'observed', got {cfg.wald.info!r}")
    if cfg.kind == "wald_study" and str(cfg.model).lower() != "vasicek" and cfg.wald.info == "exact":
        raise ConfigError("the exact-information Wald study needs the vasicek model")
    f = cfg.fit
    if f.J is not None:
        _int(f.J, "fit.J", 0)
        if f.J > J_MAX:
            raise ConfigError(f"fit.J must be <= {J_MAX}")
    for e in f.estimators:
        if e not in ("exact", "amle"):
            raise ConfigError(f"fit.estimators entries must be 'exact' or 'amle', got {e!r}")
    s = cfg.simulate
    _int(s.n, "simulate.n", 1)
    if s.method not in ("exact", "euler"):
        raise ConfigError(f"simulate.method must be 'exact' or 'euler', got {s.method!r}")
    _int(s.substeps, "simulate.substeps", 1)
    parse_delta(s.delta, bounded=False)
    if s.x0 != "stationary" and (isinstance(s.x0, bool) or not isinstance(s.x0, (int, float))):
        raise ConfigError(f"simulate.x0 must be a number or 'stationary', got {s.x0!r}")
    if len(theta) != len(MODELS[str(cfg.model).lower()].param_names):
        raise ConfigError(f"theta has {len(theta)} entries; {cfg.model} takes {len(MODELS[str(cfg.model).lower()].param_names)}")
    return dataclasses.replace(cfg, theta=theta, model=str(cfg.model).lower())
