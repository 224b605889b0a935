"""Command-line entry point: ``amle {table1,study,wald,fit,simulate}``.

Exit status is 0 on success, 2 when some study cells failed and 1 for
configuration or input errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from . import config as cfgmod
from . import experiments as ex
from .errors import ConfigError, DomainError

log = logging.getLogger("amle")

EXIT_OK, EXIT_CONFIG, EXIT_PARTIAL = 0, 1, 2

_KIND = {
    "table1": "table1",
    "study": "estimator_study",
    "wald": "wald_study",
    "fit": "single_fit",
    "simulate": "simulate",
}


def _floats(text):
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="TOML experiment configuration")
    common.add_argument("--seed", type=int, help="master seed (overrides the config)")
    common.add_argument("--workers", type=int, help="worker processes (overrides the config)")
    common.add_argument("--out", type=Path, help="output directory (overrides the config)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="amle", description="Approximate MLE for scalar diffusions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("table1", parents=[common], help="expansion order chosen by the selection rule")
    sub.add_parser("study", parents=[common], help="bias / SD / RMSD estimator study")
    sub.add_parser("wald", parents=[common], help="Wald statistic K-S study")

    f = sub.add_parser("fit", parents=[common], help="fit a path CSV (header t,x)")
    f.add_argument("path", nargs="?", type=Path, help="path CSV (overrides fit.path)")
    f.add_argument("--model", help="model id")
    f.add_argument("--J", type=int, help="expansion order (default: selection rule)")
    f.add_argument("--theta0", type=_floats, help="null value for the Wald statistic, comma-separated")

    s = sub.add_parser("simulate", parents=[common], help="simulate a path to CSV")
    s.add_argument("--model", help="model id")
    s.add_argument("--theta", type=_floats, help="parameters, comma-separated")
    s.add_argument("--n", type=int, help="number of transitions")
    s.add_argument("--delta", help="sampling interval, e.g. 1/12")
    s.add_argument("--method", choices=("exact", "euler"))
    s.add_argument("--substeps", type=int)
    return p


def resolve_config(args) -> cfgmod.ExperimentConfig:
    kind = _KIND[args.command]
    cfg = cfgmod.load(args.config) if args.config else cfgmod.defaults_for(kind)
    if args.config and cfg.kind != kind:
        raise ConfigError(f"config kind {cfg.kind!r} does not match subcommand {args.command!r}")
    cfg = cfgmod.validate(cfg.replace(kind=kind))
    top = {}
    if args.seed is not None:
        top["seed"] = args.seed
    if args.workers is not None:
        top["workers"] = args.workers
    if args.out is not None:
        top["out"] = str(args.out)
    if getattr(args, "model", None):
        top["model"] = args.model
    if getattr(args, "theta", None):
        top["theta"] = args.theta
    if args.command == "fit":
        fit = cfg.fit
        repl = {}
        if args.path is not None:
            repl["path"] = str(args.path)
        if args.J is not None:
            repl["J"] = args.J
        if args.theta0 is not None:
            repl["theta0"] = args.theta0
        if repl:
            top["fit"] = cfgmod.FitOpts(**{**fit.__dict__, **repl})
    if args.command == "simulate":
        repl = {k: getattr(args, k) for k in ("n", "delta", "method", "substeps") if getattr(args, k) is not None}
        if repl:
            top["simulate"] = cfgmod.SimulateOpts(**{**cfg.simulate.__dict__, **repl})
    return cfg.replace(**top) if top else cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = Path(cfg.out)
    try:
        if args.command == "simulate":
            out.mkdir(parents=True, exist_ok=True)
            csv_file = ex.run_simulate(cfg, out / "path.csv")
            print(csv_file)
            return EXIT_OK
        if args.command == "table1":
            report = ex.run_table1(cfg)
        elif args.command == "study":
            report = ex.run_estimator_study(cfg)
        elif args.command == "wald":
            report = ex.run_wald_study(cfg)
        else:
            report = ex.run_single_fit(cfg)
    except (ConfigError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    files = ex.write_report(cfg, report, out)
    sys.stdout.write(report.to_csv())
    for f in files:
        log.info("wrote %s", f)
    if report.failures:
        for fail in report.failures:
            print(f"failed: {fail}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
