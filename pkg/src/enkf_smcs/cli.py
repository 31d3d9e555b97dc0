"""Command line entry point: ``enkf-smcs simulate|infer|compare``.

``--config`` takes a JSON file or the name of a bundled preset.  Exit code 0
means success, 2 a configuration or input error, 3 a numerical failure (the
step index is printed on stderr).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .exceptions import ConfigError, DegenerateEnsemble, EnkfSmcsError
from .experiments import (
    compare,
    dumps,
    infer_to_dir,
    load_config,
    preset_names,
    simulate,
    simulate_to_file,
)
from .model import read_observations
from .smcs import ALGORITHMS

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="enkf-smcs",
        description="Sequential parameter estimation with EnKF-driven SMC samplers.",
        epilog="presets: " + ", ".join(preset_names()),
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate an observation CSV and its sidecar")
    sim.add_argument("--config", required=True)
    sim.add_argument("--seed", type=int, help="data seed (default: first config seed)")
    sim.add_argument("--out", required=True, help="observation CSV path")

    inf = sub.add_parser("infer", help="run one algorithm on an observation file")
    inf.add_argument("--config", required=True)
    inf.add_argument("--data", help="observation CSV (default: simulate from --seed)")
    inf.add_argument("--seed", type=int, help="particle seed (default: first config seed)")
    inf.add_argument("--algorithm", choices=ALGORITHMS)
    inf.add_argument("--particles", type=int)
    inf.add_argument("--out", help="output directory (default: config output)")

    cmp_ = sub.add_parser("compare", help="seed sweep over algorithms on shared data")
    cmp_.add_argument("--config", required=True)
    cmp_.add_argument("--seed", type=int, action="append",
                      help="restrict to this seed (repeatable; default: config seeds)")
    cmp_.add_argument("--algorithm", choices=ALGORITHMS, action="append",
                      help="repeatable; default: all algorithms")
    cmp_.add_argument("--particles", type=int)
    cmp_.add_argument("--out", help="output directory (default: config output)")
    return p


def _out_dir(args, config) -> Path:
    out = args.out or config.output
    if out is None:
        raise ConfigError("no output directory; pass --out", field="output")
    return Path(out)


def _run(args) -> int:
    if args.command == "simulate":
        config = load_config(args.config)
        seed = config.seeds[0] if args.seed is None else args.seed
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        simulate_to_file(config, seed, out)
        print(out)
        return EXIT_OK

    config = load_config(args.config).with_overrides(particles=args.particles)
    if args.command == "infer":
        config = config.with_overrides(algorithm=args.algorithm)
        seed = config.seeds[0] if args.seed is None else args.seed
        if args.data is not None:
            try:
                data = read_observations(args.data)
            except (OSError, ValueError) as exc:
                raise ConfigError(str(exc), field="data") from None
        else:
            data = simulate(config, seed)
        summary = infer_to_dir(config, data, seed, _out_dir(args, config))
        print(json.dumps(summary, sort_keys=True))
        return EXIT_OK

    algorithms = args.algorithm or list(ALGORITHMS)
    report = compare(config, algorithms, seeds=args.seed, out_dir=_out_dir(args, config))
    sys.stdout.write(dumps(report))
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateEnsemble as exc:
        print(f"numerical failure at step {exc.step}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (EnkfSmcsError, FloatingPointError, ArithmeticError) as exc:
        print(f"numerical failure at step {getattr(exc, 'step', None)}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
