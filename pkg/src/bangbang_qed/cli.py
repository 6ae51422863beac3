"""Command-line entry point: run scenarios, figure presets and sweeps to CSV."""
import argparse
import csv
import io
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .dynamics import evolve_reduced
from .errors import ModelError
from .measures import correlations
from .oracle import joint_reduced_matrix
from .scenario import PRESETS, ScenarioConfig, preset, with_value

log = logging.getLogger(__name__)

ORACLE_TOL = 1e-8
PSD_TOL = 1e-10
ADDITIVITY_TOL = 1e-9

EXIT_OK, EXIT_CONFIG, EXIT_INVARIANT = 0, 1, 2


class InvariantViolation(RuntimeError):
    pass


def _fmt(x):
    return f"{float(x):.17g}"


def evaluate(config):
    """Rows of ``(t, Q, I, C, CE[, max_oracle_deviation])`` for every grid point."""
    scenario = config.scenario()
    rows = []
    for t in config.times():
        t = float(t)
        rho = evolve_reduced(scenario, t)
        rep = correlations(rho)
        row = [t, rep.Q, rep.I, rep.C, rep.CE]
        if config.verify:
            dense = rho.to_array()
            dev = float(np.max(np.abs(dense - joint_reduced_matrix(scenario, t))))
            row.append(dev)
            _check_invariants(t, dense, rep, dev)
        rows.append(row)
    return rows


def _check_invariants(t, dense, rep, dev):
    problems = []
    if dev > ORACLE_TOL:
        problems.append(f"oracle deviation {dev:.3g}")
    if abs(np.trace(dense).real - 1) > 1e-12:
        problems.append("trace")
    if np.linalg.eigvalsh(dense).min() < -PSD_TOL:
        problems.append("positivity")
    if abs(rep.I - rep.Q - rep.C) > ADDITIVITY_TOL or rep.C < -ADDITIVITY_TOL or rep.I < rep.C - ADDITIVITY_TOL:
        problems.append("I = Q + C ordering")
    if problems:
        raise InvariantViolation(f"t={t}: " + ", ".join(problems))


def write_csv(config, stream):
    writer = csv.writer(stream, lineterminator="\n")
    header = ["t", "Q", "I", "C", "CE"] + (["max_oracle_deviation"] if config.verify else [])
    writer.writerow(header)
    for row in evaluate(config):
        writer.writerow([_fmt(x) for x in row])


def render_csv(config):
    buf = io.StringIO()
    write_csv(config, buf)
    return buf.getvalue()


def load_config(path):
    return ScenarioConfig.from_json(Path(path).read_text())


def _emit(config, out):
    text = render_csv(config)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_run(args):
    config = load_config(args.config)
    if args.verify:
        config = replace(config, verify=True)
    _emit(config, args.out)


def cmd_preset(args):
    configs = preset(args.name)
    if args.out_dir is None:
        sys.stdout.write("[\n" + ",\n".join(c.to_json() for c in configs.values()) + "\n]\n")
        return
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for tag, config in configs.items():
        log.info("running %s", tag)
        (out_dir / f"{tag}.json").write_text(config.to_json() + "\n")
        (out_dir / f"{tag}.csv").write_text(render_csv(config))


def sweep_outputs(base, axis, values):
    """``(suffix, config)`` pairs, one per sweep value."""
    return [(f"{axis}={v:g}", with_value(base, axis, v)) for v in values]


def cmd_sweep(args):
    base = load_config(args.config)
    values = [float(v) for v in args.values.split(",") if v.strip()] if args.values else []
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.config).stem
    for suffix, config in sweep_outputs(base, args.axis, values):
        (out_dir / f"{stem}_{suffix}.csv").write_text(render_csv(config))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bangbang-qed",
        description="Two-atom cavity QED correlations under ideal bang-bang pulses.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="evaluate one JSON scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--verify", action="store_true", help="compare against the full-space oracle")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("preset", help="figure parameter sets")
    p.add_argument("--name", required=True, help=", ".join(PRESETS))
    p.add_argument("--out-dir", default=None,
                   help="run every scenario and write JSON + CSV here (default: print configs)")
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("sweep", help="one CSV per value of a numeric config field")
    p.add_argument("--config", required=True)
    p.add_argument("--axis", required=True, help="dotted field path, e.g. pulses.T")
    p.add_argument("--values", default="", help="comma-separated numbers")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ModelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
