"""Command line frontend: generate, solve, bench, report, check.

Exit codes follow one convention everywhere: 0 on success (solution found,
check passed, constraints hold), 1 for a negative answer (no solution,
mask mismatch, tradeoff violation), 2 for errors (malformed input, caps,
I/O). All configuration is via flags; no environment variables.
"""

from __future__ import annotations

import argparse
import sys

from .bench import (BENCH_ALGOS, fit_growth, group_records, read_records_csv,
                    run_scaling_experiment)
from .generators import (FAMILIES, FAMILY_PLANTED, GeneratorSpec, dumps_meta,
                         generate)
from .ledger import ComparisonLedger, Mode, dump_trace, tradeoff_report
from .model import (InstanceFormatError, read_instance, subset_sum, verify,
                    write_instance)
from .solvers import CapExceededError, brute_force_solve, dp_solve, mitm_solve

SOLVE_ALGOS = ("brute", "mitm", "dp")


class CliError(Exception):
    """User-facing error that maps to exit code 2."""


def meta_path_for(out_path: str) -> str:
    if out_path.endswith(".json"):
        return out_path[: -len(".json")] + ".meta.json"
    return out_path + ".meta.json"


def _parse_seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < (1 << 64):
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned decimal")
    return seed


def cmd_gen(args) -> int:
    if args.size is not None and args.family != FAMILY_PLANTED:
        raise CliError("--size is only valid with --family planted")
    spec = GeneratorSpec(family=args.family, n=args.n, seed=args.seed,
                         planted_size=args.size)
    instance, meta = generate(spec)
    write_instance(instance, args.out)
    meta_path = meta_path_for(args.out)
    with open(meta_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_meta(meta))
    print(f"wrote {args.out}")
    print(f"wrote {meta_path}")
    return 0


def cmd_solve(args) -> int:
    instance = read_instance(args.in_path)
    if args.algo == "dp":
        if args.trace:
            raise CliError("--trace is not supported for the uninstrumented dp solver")
        solution = dp_solve(instance)
        ledger = ComparisonLedger()
    else:
        mode = Mode.FULL_TRACE if args.trace else Mode.COUNTERS_ONLY
        ledger = ComparisonLedger(mode)
        solver = brute_force_solve if args.algo == "brute" else mitm_solve
        solution = solver(instance, ledger).solution
        if args.trace:
            with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(dump_trace(ledger.trace))
    if solution is not None:
        print(f"SOLUTION {solution:x} {subset_sum(instance, solution)}")
    else:
        print("NOSOLUTION")
    print(f"C={ledger.compare_count} M={ledger.peak_sorted_len} T={ledger.elementary_ops}")
    return 0 if solution is not None else 1


def cmd_bench(args) -> int:
    if args.size is not None and args.family != FAMILY_PLANTED:
        raise CliError("--size is only valid with --family planted")
    records = run_scaling_experiment(
        args.algo, args.family, args.n_min, args.n_max, args.step,
        args.trials, args.seed, csv_path=args.out,
        planted_size=args.size, force=args.force)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def cmd_report(args) -> int:
    records = read_records_csv(args.csv)
    if not records:
        raise CliError("CSV contains no rows")
    groups = group_records(records)
    any_tm_violation = False
    for (algo, family), rows in sorted(groups.items()):
        distinct_n = len({r.n for r in rows})
        if distinct_n < 4:
            raise CliError(f"group algo={algo} family={family} has only "
                           f"{distinct_n} distinct n values, need at least 4")
        fit_c = fit_growth((r.n, r.compare_count) for r in rows)
        fit_t = fit_growth((r.n, r.elementary_ops) for r in rows)
        report = tradeoff_report(rows)
        any_tm_violation |= bool(report.t_ge_m_violations)
        print(f"group algo={algo} family={family} rows={len(rows)} distinct_n={distinct_n}")
        print(f"  log2(C) vs n: slope={fit_c.slope:.4f} "
              f"intercept={fit_c.intercept:.4f} rmse={fit_c.residual:.4f}")
        print(f"  log2(T) vs n: slope={fit_t.slope:.4f} "
              f"intercept={fit_t.intercept:.4f} rmse={fit_t.residual:.4f}")
        for line in report.summary().splitlines():
            print(f"  {line}")
    print("TRADEOFF VIOLATION" if any_tm_violation else "TRADEOFF OK")
    return 1 if any_tm_violation else 0


def cmd_check(args) -> int:
    instance = read_instance(args.in_path)
    try:
        mask = int(args.mask, 16)
    except ValueError as exc:
        raise CliError(f"mask must be hexadecimal: {exc}") from exc
    if mask < 0 or mask >> instance.n:
        raise CliError(f"mask {args.mask} out of range for n={instance.n}")
    total = subset_sum(instance, mask)
    if verify(instance, mask):
        print(f"MATCH {mask:x} {total}")
        return 0
    print(f"NOMATCH {mask:x} {total}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subsum",
        description="Exact subset-sum solvers with comparison-count instrumentation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file plus metadata sidecar")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", type=_parse_seed, default=0)
    p.add_argument("--size", type=int, default=None,
                   help="planted subset size (planted family only; default n//2)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--algo", required=True, choices=SOLVE_ALGOS)
    p.add_argument("--trace", default=None,
                   help="write a full event trace to this path (n <= 24)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a scaling experiment to CSV")
    p.add_argument("--algo", required=True, choices=BENCH_ALGOS)
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n-min", required=True, type=int)
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=_parse_seed, default=0)
    p.add_argument("--size", type=int, default=None,
                   help="planted subset size (planted family only)")
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true",
                   help="overwrite an existing CSV instead of refusing")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="growth fits and tradeoff checks over a bench CSV")
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check", help="verify a solution mask against an instance")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--mask", required=True, help="candidate mask in hex")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, CapExceededError, InstanceFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
