"""Command-line runner: ``centralweno run --experiment sod --n 200,400``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import ConfigError, MismatchedResolutions, NumericalError
from .experiments import Experiment, build_config, parse_config_text, run_experiment

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="centralweno", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one experiment and write CSV output")
    run.add_argument("--config", type=Path, help="flat key = value settings file")
    run.add_argument("--experiment", choices=[e.value for e in Experiment])
    run.add_argument("--n", help="comma-separated resolutions, e.g. 40,80,160")
    run.add_argument("--t-end", type=float)
    run.add_argument("--cfl", type=float)
    run.add_argument("--p-exponent", type=float)
    run.add_argument("--epsilon", type=float)
    run.add_argument("--nu", type=float, help="viscosity (2D experiments)")
    run.add_argument("--out", type=Path)
    run.add_argument("-v", "--verbose", action="store_true")

    sub.add_parser("list", help="list available experiments")
    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK

    if args.command == "list":
        for e in Experiment:
            print(e.value)
        return EXIT_OK

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        values = {}
        if args.config is not None:
            values.update(parse_config_text(args.config.read_text()))
        cli = {
            "experiment": args.experiment,
            "n": args.n,
            "t_end": args.t_end,
            "cfl": args.cfl,
            "p_exponent": args.p_exponent,
            "epsilon": args.epsilon,
            "nu": args.nu,
            "out": args.out,
        }
        values.update({k: str(v) for k, v in cli.items() if v is not None})
        if "n" in values:
            values.pop("resolutions", None)
        if "out" in values:
            values.pop("output_dir", None)
        config = build_config(values)
    except (ConfigError, OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        paths = run_experiment(config)
    except MismatchedResolutions as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        cell = getattr(exc, "cell", None)
        where = f" (cell {cell})" if cell is not None else ""
        print(f"numerical failure: {exc}{where}", file=sys.stderr)
        return EXIT_NUMERICAL
    for p in paths:
        print(p)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
