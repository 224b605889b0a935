"""Simulation studies: J-selection table, estimator study, Wald study, single fits.

Every replication draws from the stream ``make_rng(seed, cell, rep)``, so a
single cell can be re-run in isolation and the results do not depend on
the worker count.  Reports are plain CSV; each run also writes a JSON
manifest.
"""
from __future__ import annotations

import csv
import io
import json
import math
import platform
import time
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path

import numpy as np
import scipy
from scipy import stats

from . import __version__
from .config import ExperimentConfig, parse_delta
from .errors import DomainError
from .estimation import EXACT, FitOptions, combine_moments, fit, observed_info, select_J, wald_statistic
from .kernels import BACKEND
from .likelihood import default_j_star, diagnostics
from .models import get_model, vasicek_fisher_exact
from .numerics.gof import ks_test
from .numerics.linalg import sym_eigen
from .numerics.random import make_rng
from .parallel import ordered_map
from .simulate import SimSpec, read_path, simulate_euler, simulate_exact, write_path

TABLE1_DELTAS = ("1/252", "1/52", "1/12", "1/4", "1/2", "3/4")
TABLE1_NS = (500, 1000, 2000, 4000)
MAX_FAIL_FRACTION = 0.1


@dataclass
class ExperimentReport:
    kind: str
    columns: list
    rows: list
    failures: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    runtime: float = 0.0

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_fmt(r.get(c)) for c in self.columns])
        return buf.getvalue()

    def column(self, name):
        return [r.get(name) for r in self.rows]


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


# -- table 1 ------------------------------------------------------------------

def run_table1(cfg: ExperimentConfig = None, epsilon: float = 0.0) -> ExperimentReport:
    """select_J over the published delta x n grid, one row per delta."""
    t0 = time.perf_counter()
    cols = ["delta"] + [f"n={n}" for n in TABLE1_NS]
    rows = []
    for d in TABLE1_DELTAS:
        row = {"delta": d}
        for n in TABLE1_NS:
            row[f"n={n}"] = select_J(n, parse_delta(d), epsilon)
        rows.append(row)
    return ExperimentReport("table1", cols, rows, runtime=time.perf_counter() - t0)


# -- shared replication job --------------------------------------------------

def _fit_record(res, path, model, names):
    rec = {
        "converged": res.converged,
        "theta": res.theta,
        "grad_per_n": res.gradient_norm / path.n,
        "min_eig": math.nan,
    }
    if res.converged:
        try:
            info = observed_info(path, res.theta, res.kind, model)
            rec["min_eig"] = float(sym_eigen(info).values[-1])
        except DomainError:
            pass
    return rec


def _study_replication(key, model_name, theta, cells, Js, asym_Js, seed):
    cell, rep = key
    n, _, delta = cells[cell]
    model = get_model(model_name)
    path = simulate_exact(SimSpec(model_name, theta, n, delta, seed=seed), make_rng(seed, cell, rep))
    names = model.param_names
    out = {}
    for kind in (EXACT, *Js):
        res = fit(path, model, kind)
        out[kind] = _fit_record(res, path, model, names)
    diag = {}
    for J in asym_Js:
        try:
            D = diagnostics(path, np.array(theta), J, model)
            diag[J] = (D.N_n, D.F_n)
        except DomainError:
            diag[J] = None
    return {"cell": cell, "rep": rep, "fits": out, "diag": diag}


def _label(kind):
    return "MLE" if kind == EXACT else f"AMLE_J{kind}"


def _long_run_terms(model_name, theta, J, delta, long_n, seed, cell):
    model = get_model(model_name)
    long_path = simulate_exact(
        SimSpec(model_name, theta, long_n, delta, seed=seed), make_rng(seed, cell, 2**32 - 1)
    )
    D = diagnostics(long_path, np.array(theta), J, model, default_j_star(J))
    if model.name == "vasicek":
        info = vasicek_fisher_exact(theta, delta)
    else:
        info = -diagnostics(long_path, np.array(theta), 6, model, 6).N_n
    return D.N_n, D.U_n, info


STUDY_COLUMNS = ["cell", "n", "delta", "estimator", "param", "true", "bias", "sd", "a_bias", "a_sd", "rmsd", "used", "failed"]
REPLICATION_COLUMNS = ["cell", "n", "delta", "rep", "estimator", "converged", "grad_norm_per_n", "min_eig_info"]


def run_estimator_study(cfg: ExperimentConfig) -> ExperimentReport:
    """Bias, SD and RMSD of the MLE and AMLE(J) per (n, delta) cell."""
    t0 = time.perf_counter()
    model = get_model(cfg.model)
    names = model.param_names
    theta = np.array(cfg.theta)
    model.check_theta(theta)
    cells = cfg.grid.cells()
    Js = tuple(cfg.grid.J)
    asym_Js = tuple(cfg.asymptotic.J) if cfg.asymptotic.enabled else ()
    keys = [(c, r) for c in range(len(cells)) for r in range(cfg.R)]
    job = partial(
        _study_replication, model_name=model.name, theta=tuple(cfg.theta), cells=cells,
        Js=Js, asym_Js=asym_Js, seed=cfg.seed,
    )
    results = ordered_map(job, keys, cfg.workers)

    rows, reps, failures = [], [], []
    for c, (n, dlabel, delta) in enumerate(cells):
        cell_res = [r for r in results if r["cell"] == c]
        mle_ok = np.array([r["fits"][EXACT]["converged"] for r in cell_res])
        mle_theta = np.array([r["fits"][EXACT]["theta"] for r in cell_res])
        asym = {}
        for J in asym_Js:
            draws = [
                (r["fits"][EXACT]["theta"], *r["diag"][J])
                for r in cell_res
                if r["fits"][EXACT]["converged"] and r["diag"].get(J) is not None
            ]
            if len(draws) >= 2:
                N, U, info = _long_run_terms(model.name, tuple(cfg.theta), J, delta, cfg.asymptotic.long_n, cfg.seed, c)
                bias, V = combine_moments(N, U, info, theta, draws)
                asym[J] = (bias, np.sqrt(np.maximum(np.diag(V), 0.0)))
        for kind in (EXACT, *Js):
            ok = np.array([r["fits"][kind]["converged"] for r in cell_res])
            th = np.array([r["fits"][kind]["theta"] for r in cell_res])
            failed = int((~ok).sum())
            if failed > MAX_FAIL_FRACTION * len(cell_res):
                failures.append({"cell": c, "n": n, "delta": dlabel, "estimator": _label(kind), "failed": failed})
            used = th[ok]
            both = ok & mle_ok
            for i, name in enumerate(names):
                row = {
                    "cell": c, "n": n, "delta": dlabel, "estimator": _label(kind), "param": name,
                    "true": float(theta[i]), "used": int(ok.sum()), "failed": failed,
                }
                if used.shape[0] >= 2:
                    row["bias"] = float(np.mean(used[:, i]) - theta[i])
                    row["sd"] = float(np.std(used[:, i], ddof=1))
                if kind != EXACT:
                    if both.any():
                        row["rmsd"] = float(np.sqrt(np.mean((th[both, i] - mle_theta[both, i]) ** 2)))
                    if kind in asym:
                        row["a_bias"] = float(asym[kind][0][i])
                        row["a_sd"] = float(asym[kind][1][i])
                rows.append(row)
            if kind != EXACT and both.any():
                rows.append({
                    "cell": c, "n": n, "delta": dlabel, "estimator": _label(kind), "param": "all",
                    "rmsd": float(np.sqrt(np.mean(np.sum((th[both] - mle_theta[both]) ** 2, axis=1)))),
                    "used": int(both.sum()), "failed": failed,
                })
        for r in cell_res:
            for kind in (EXACT, *Js):
                f = r["fits"][kind]
                rec = {
                    "cell": c, "n": n, "delta": dlabel, "rep": r["rep"], "estimator": _label(kind),
                    "converged": f["converged"], "grad_norm_per_n": f["grad_per_n"], "min_eig_info": f["min_eig"],
                }
                rec.update({name: float(v) for name, v in zip(names, f["theta"])})
                reps.append(rec)
    rep_report = ExperimentReport("replications", REPLICATION_COLUMNS + list(names), reps)
    return ExperimentReport(
        "estimator_study", STUDY_COLUMNS, rows, failures,
        extra={"replications": rep_report, "heuristic_J1": 1 in asym_Js},
        runtime=time.perf_counter() - t0,
    )


# -- wald study ----------------------------------------------------------------

def _wald_replication(key, theta, cells, Js, seed, info_kind):
    cell, rep = key
    n, _, delta = cells[cell]
    model = get_model("vasicek")
    path = simulate_exact(SimSpec("vasicek", theta, n, delta, seed=seed), make_rng(seed, cell, rep))
    exact_info = vasicek_fisher_exact(theta, delta)
    out = {}
    for J in Js:
        res = fit(path, model, J)
        rec = _fit_record(res, path, model, model.param_names)
        if res.converged:
            info = exact_info if info_kind == "exact" else observed_info(path, res.theta, J, model)
            rec["wald"] = wald_statistic(res.theta, theta, info, n)
        else:
            rec["wald"] = math.nan
        out[J] = rec
    return {"cell": cell, "rep": rep, "fits": out}


WALD_COLUMNS = ["cell", "n", "delta", "schedule", "J", "used", "failed", "mean_wald", "ks_stat", "p_value"]


def run_wald_study(cfg: ExperimentConfig) -> ExperimentReport:
    """K-S test of W_n(J) against chi-square(3) for each n with delta from the schedule."""
    t0 = time.perf_counter()
    model = get_model(cfg.model)
    if model.name != "vasicek":
        raise DomainError("the Wald study is defined for the vasicek model")
    theta = tuple(cfg.theta)
    cells = cfg.grid.cells()
    Js = tuple(cfg.grid.J)
    keys = [(c, r) for c in range(len(cells)) for r in range(cfg.R)]
    job = partial(_wald_replication, theta=theta, cells=cells, Js=Js, seed=cfg.seed, info_kind=cfg.wald.info)
    results = ordered_map(job, keys, cfg.workers)
    chi2 = stats.chi2(len(theta)).cdf
    rows, reps, failures = [], [], []
    for c, (n, label, delta) in enumerate(cells):
        cell_res = [r for r in results if r["cell"] == c]
        for J in Js:
            w = np.array([r["fits"][J]["wald"] for r in cell_res])
            ok = np.array([r["fits"][J]["converged"] for r in cell_res])
            failed = int((~ok).sum())
            row = {"cell": c, "n": n, "delta": float(delta), "schedule": label, "J": J, "used": int(ok.sum()), "failed": failed}
            if failed > MAX_FAIL_FRACTION * len(cell_res):
                failures.append({"cell": c, "n": n, "J": J, "failed": failed})
            if ok.any():
                stat, p = ks_test(w[ok], chi2)
                row.update(mean_wald=float(np.mean(w[ok])), ks_stat=stat, p_value=p)
            rows.append(row)
        for r in cell_res:
            for J in Js:
                f = r["fits"][J]
                rec = {
                    "cell": c, "n": n, "delta": float(delta), "rep": r["rep"], "estimator": _label(J),
                    "converged": f["converged"], "grad_norm_per_n": f["grad_per_n"], "min_eig_info": f["min_eig"],
                    "wald": f["wald"],
                }
                rec.update({name: float(v) for name, v in zip(model.param_names, f["theta"])})
                reps.append(rec)
    rep_report = ExperimentReport("replications", REPLICATION_COLUMNS + ["wald", *model.param_names], reps)
    return ExperimentReport(
        "wald_study", WALD_COLUMNS, rows, failures, extra={"replications": rep_report},
        runtime=time.perf_counter() - t0,
    )


# -- single fit ------------------------------------------------------------------

def run_single_fit(cfg: ExperimentConfig, path=None) -> ExperimentReport:
    """Fit the configured estimators to a path file (or an in-memory path)."""
    t0 = time.perf_counter()
    model = get_model(cfg.model)
    if path is None:
        if not cfg.fit.path:
            raise DomainError("single_fit needs fit.path")
        path = read_path(cfg.fit.path)
    J = cfg.fit.J if cfg.fit.J is not None else select_J(path.n, path.delta, 0.0)
    theta0 = None if cfg.fit.theta0 is None else np.array(cfg.fit.theta0, dtype=float)
    cols = ["estimator", "J", "param", "estimate", "std_error", "converged", "loglik", "grad_norm_per_n"]
    if theta0 is not None:
        cols.append("wald")
    rows, results = [], {}
    for est in cfg.fit.estimators:
        kind = EXACT if est == "exact" else J
        res = fit(path, model, kind, opts=FitOptions(with_info=True))
        results[est] = res
        wald = None
        if theta0 is not None and res.observed_info is not None:
            wald = wald_statistic(res.theta, theta0, res.observed_info, path.n)
        for i, name in enumerate(model.param_names):
            row = {
                "estimator": _label(kind), "J": "" if kind == EXACT else J, "param": name,
                "estimate": float(res.theta[i]),
                "std_error": None if res.std_errors is None else float(res.std_errors[i]),
                "converged": res.converged, "loglik": res.loglik, "grad_norm_per_n": res.gradient_norm / path.n,
            }
            if theta0 is not None:
                row["wald"] = wald
            rows.append(row)
    failures = [{"estimator": k, "message": r.message} for k, r in results.items() if not r.converged]
    return ExperimentReport(
        "single_fit", cols, rows, failures, extra={"J": J, "results": results}, runtime=time.perf_counter() - t0
    )


def run_simulate(cfg: ExperimentConfig, csv_file):
    s = cfg.simulate
    spec = SimSpec(cfg.model, cfg.theta, s.n, parse_delta(s.delta, bounded=False), s.x0, cfg.seed, s.substeps)
    path = simulate_exact(spec) if s.method == "exact" else simulate_euler(spec)
    return write_path(path, csv_file)


# -- output --------------------------------------------------------------------

def manifest(cfg: ExperimentConfig, report: ExperimentReport, outputs: list) -> dict:
    return {
        "kind": report.kind,
        "config": cfg.as_dict(),
        "versions": {
            "amle": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "python": platform.python_version(),
            "kernels": BACKEND,
        },
        "seed": cfg.seed,
        "workers": cfg.workers,
        "wall_time_s": report.runtime,
        "outputs": outputs,
        "failures": report.failures,
    }


def write_report(cfg: ExperimentConfig, report: ExperimentReport, out_dir) -> list:
    """Write ``<kind>.csv`` (plus replications) and ``<kind>_manifest.json``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs = []
    main = out_dir / f"{report.kind}.csv"
    main.write_text(report.to_csv())
    outputs.append(main.name)
    reps = report.extra.get("replications")
    if reps is not None:
        p = out_dir / f"{report.kind}_replications.csv"
        p.write_text(reps.to_csv())
        outputs.append(p.name)
    man = out_dir / f"{report.kind}_manifest.json"
    man.write_text(json.dumps(manifest(cfg, report, outputs), indent=2, default=_json_default) + "\n")
    return [out_dir / o for o in outputs] + [man]


def _json_default(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    return str(o)
