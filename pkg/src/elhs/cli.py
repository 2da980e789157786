"""Command line interface: ``elhs sample|expand|degree|discrepancy|optimal|curve``.

Exit codes: 0 success, 1 runtime error (unreadable or malformed input,
unwritable output), 2 usage error. Commands that draw random numbers take
``--seed``; without it a seed is drawn from system entropy and reported so
the run can be replayed. ``ELHS_THREADS`` caps the worker threads used by
``expand`` and ``curve`` (0 or unset: serial); output does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .degree import degree, fitted_degree, occupancy, predicted_degree
from .design_io import DesignFormatError, format_float, read_design, write_design
from .discrepancy import centered_l2, centered_l2_squared, geometric
from .expansion import (
    ExpansionConfig,
    Optimize,
    expand,
    optimal_expansion,
    parallel_map,
    worker_count,
)
from .rng import MASK64, RngStream, derive_seed, entropy_seed
from .sampler import sample_lhs


class CommandError(Exception):
    """Runtime failure reported with exit code 1."""


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _seed(text):
    value = _non_negative_int(text)
    if value > MASK64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _int_list(text):
    values = [_positive_int(part) for part in text.split(",") if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")
    return values


def _load(path):
    try:
        return read_design(path)
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror or exc}") from None
    except DesignFormatError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _write_text(path, text):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc.strerror or exc}") from None


def _save(design, path, meta=None):
    try:
        write_design(design, path, meta)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc.strerror or exc}") from None


def _emit_report(report, path):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        _write_text(path, text)


def cmd_sample(args):
    seed = entropy_seed() if args.seed is None else args.seed
    design = sample_lhs(args.p, args.n, RngStream(seed))
    _save(design, args.out, {"seed": seed})
    _emit_report({"n": args.n, "p": args.p, "seed": seed, "degree": degree(design)},
                 args.report)
    return 0


def cmd_expand(args):
    design = _load(args.input)
    seed = entropy_seed() if args.seed is None else args.seed
    config = ExpansionConfig(m=args.m, optimize=args.optimize, candidates=args.candidates,
                             tolerance=args.tolerance, seed=seed)
    result = expand(design, config)
    mode = config.optimize
    if mode is Optimize.NONE:
        metric = Optimize.CENTERED
        value = centered_l2(result.expanded)
    else:
        metric = mode
        value = result.metric_value
    _save(result.expanded, args.out, {"seed": seed})
    _emit_report({
        "n": design.n,
        "p": design.p,
        "m": args.m,
        "optimize": mode.value,
        "degree": result.measured_degree,
        "metric": metric.value,
        "metric_value": value,
        "candidates_evaluated": result.candidates_evaluated,
        "seed": seed,
    }, args.report)
    return 0


def cmd_degree(args):
    print(f"{degree(_load(args.input)):.12f}")
    return 0


def cmd_discrepancy(args):
    design = _load(args.input)
    if args.metric == "geometric":
        if design.n < 2:
            raise CommandError("geometric discrepancy needs at least two samples")
        value = geometric(design)
    elif args.metric == "centered-squared":
        value = centered_l2_squared(design)
    else:
        value = centered_l2(design)
    print(f"{value:#.12g}")
    return 0


def cmd_optimal(args):
    design = _load(args.input)
    if args.m_min > args.m_max:
        raise CommandError(f"empty range: --m-min {args.m_min} > --m-max {args.m_max}")
    if args.verify:
        seed = entropy_seed() if args.seed is None else args.seed
        for m in range(args.m_min, args.m_max + 1):
            measured = expand(design, ExpansionConfig(m=m, seed=derive_seed(seed, m)))
            predicted = predicted_degree(design, m)
            if measured.measured_degree != predicted:
                raise CommandError(
                    f"m={m}: expansion gave degree {measured.measured_degree!r}, "
                    f"predicted {predicted!r}")
        print(f"# verified {args.m_max - args.m_min + 1} expansions (seed {seed})",
              file=sys.stderr)
    ranked = optimal_expansion(design, (args.m_min, args.m_max), verbose=args.verbose)
    if not args.verbose:
        ranked = [ranked]
    print(f"{'m':>8}  degree")
    for m, value in ranked:
        print(f"{m:>8}  {value:.12f}")
    return 0


def _curve_rows(n_list, p_list, m_min, m_max, realizations, seed):
    """Mean predicted degree per (p, n, m) over fresh LHS draws."""
    cells = [(p, n) for p in p_list for n in n_list]
    root = RngStream(seed)
    m_values = np.arange(m_min, m_max + 1)

    def occupied_sums(job):
        cell_index, r = job
        p, n = cells[cell_index]
        design = sample_lhs(p, n, root.spawn(cell_index).spawn(r))
        return [int(occupancy(design, n + m).occupied.sum()) for m in m_values]

    jobs = [(c, r) for c in range(len(cells)) for r in range(realizations)]
    sums = parallel_map(occupied_sums, jobs, worker_count())
    rows = []
    for c, (p, n) in enumerate(cells):
        block = sums[c * realizations:(c + 1) * realizations]
        totals = np.sum(np.array(block, dtype=np.int64), axis=0)
        for i, m in enumerate(m_values.tolist()):
            # exact: sum over realizations of (occupied + m p) / ((n + m) p)
            mean = (int(totals[i]) + realizations * m * p) / (realizations * (n + m) * p)
            rows.append((p, n, m, mean, fitted_degree(m / n)))
    return rows


def cmd_curve(args):
    if args.m_min > args.m_max:
        raise CommandError(f"empty range: --m-min {args.m_min} > --m-max {args.m_max}")
    seed = entropy_seed() if args.seed is None else args.seed
    rows = _curve_rows(args.n, args.p, args.m_min, args.m_max, args.realizations, seed)
    lines = [f"# seed: {seed}", "p,n,m,mean_degree,fitted_degree"]
    lines += [f"{p},{n},{m},{format_float(d)},{format_float(f)}" for p, n, m, d, f in rows]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write_text(args.out, text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="elhs", description="Latin hypercube sampling and LHS expansion.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw a Latin hypercube design")
    p.add_argument("--p", type=_positive_int, required=True, help="dimensions")
    p.add_argument("--n", type=_positive_int, required=True, help="samples")
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out", required=True, help="output design (.csv or .json)")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("expand", help="add M samples to an existing design")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--m", type=_non_negative_int, required=True, help="samples to add")
    p.add_argument("--optimize", default="none",
                   choices=["none", "centered", "discrepancy", "geometric"])
    p.add_argument("--candidates", type=_positive_int, default=100)
    p.add_argument("--tolerance", type=_positive_float)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out", required=True)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("degree", help="print the LHS degree of a design")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("discrepancy", help="print a uniformity metric of a design")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--metric", default="centered",
                   choices=["centered", "centered-squared", "geometric"])
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("optimal", help="rank expansion sizes by resulting degree")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--m-min", type=_non_negative_int, required=True)
    p.add_argument("--m-max", type=_non_negative_int, required=True)
    p.add_argument("--verbose", action="store_true", help="print every size, best first")
    p.add_argument("--verify", action="store_true",
                   help="also run every expansion and check its degree")
    p.add_argument("--seed", type=_seed, help="seed for --verify")
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("curve", help="mean degree versus expansion size")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated sizes")
    p.add_argument("--p", type=_int_list, required=True, help="comma-separated dimensions")
    p.add_argument("--m-min", type=_non_negative_int, default=1)
    p.add_argument("--m-max", type=_non_negative_int, required=True)
    p.add_argument("--realizations", type=_positive_int, default=100)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out")
    p.set_defaults(func=cmd_curve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"elhs: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"elhs: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
