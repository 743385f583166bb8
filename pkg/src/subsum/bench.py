"""Scaling experiments: run solvers over an n-grid and record C/M/T rows.

Rows are deterministic except for the wall_time column, which is reported
for context but never asserted on. Growth is summarized as the least
squares slope of log2(count) against n, so a count proportional to 2^n
fits slope 1.0 and one proportional to sqrt(2^n) fits slope 0.5.
"""

from __future__ import annotations

import csv
import math
import statistics
import sys
import time
from dataclasses import dataclass

from .generators import (FAMILY_PLANTED, FAMILY_POWERS2, FAMILY_RANDOM,
                         gen_planted, gen_powers_of_two, gen_random_wide)
from .ledger import ComparisonLedger
from .model import Instance
from .rng import derive_seed
from .solvers import CapExceededError, brute_force_solve, mitm_solve

ALGO_BRUTE = "brute"
ALGO_MITM = "mitm"
BENCH_ALGOS = (ALGO_BRUTE, ALGO_MITM)

CSV_FIELDS = ["n", "family", "algo", "seed", "trial", "C", "M", "T", "wall_time"]


@dataclass(frozen=True)
class ExperimentRecord:
    """One benchmark row; C/M/T are the ledger counters of a single run."""
    n: int
    family: str
    algo: str
    seed: int
    trial: int
    compare_count: int
    peak_sorted_len: int
    elementary_ops: int
    wall_time: float


@dataclass(frozen=True)
class GrowthFit:
    """Least squares fit of log2(count) against n."""
    slope: float
    intercept: float
    residual: float


def fit_growth(points) -> GrowthFit:
    """Fit (n, count) pairs; requires at least 4 distinct n and counts > 0."""
    points = list(points)
    if len({n for n, _ in points}) < 4:
        raise ValueError("need at least 4 distinct n values to fit growth")
    for n, count in points:
        if count <= 0:
            raise ValueError(f"count must be positive to fit log growth, got {count} at n={n}")
    xs = [float(n) for n, _ in points]
    ys = [math.log2(count) for _, count in points]
    slope, intercept = statistics.linear_regression(xs, ys)
    rmse = math.sqrt(sum((y - (slope * x + intercept)) ** 2
                         for x, y in zip(xs, ys)) / len(xs))
    return GrowthFit(slope, intercept, rmse)


def _build_instance(family: str, n: int, seed: int, planted_size: int | None) -> Instance:
    if family == FAMILY_POWERS2:
        return gen_powers_of_two(n)
    if family == FAMILY_RANDOM:
        return gen_random_wide(n, seed)
    if family == FAMILY_PLANTED:
        size = planted_size if planted_size is not None else n // 2
        if size > n:
            raise CapExceededError(f"planted size {size} exceeds n={n}")
        return gen_planted(n, seed, size)[0]
    raise ValueError(f"unknown family {family!r}")


def _solver_for(algo: str):
    if algo == ALGO_BRUTE:
        return brute_force_solve
    if algo == ALGO_MITM:
        return mitm_solve
    raise ValueError(f"unknown benchmark algorithm {algo!r}, expected one of {BENCH_ALGOS}")


def run_scaling_experiment(algo: str, family: str, n_min: int, n_max: int,
                           step: int, trials: int, master_seed: int,
                           csv_path=None, *, planted_size: int | None = None,
                           force: bool = False) -> list[ExperimentRecord]:
    """One record per (n, trial); optionally written to a fresh CSV file.

    Per-row seeds are derived statelessly from (master_seed, n, trial), so
    the rows a run produces never depend on which other rows ran. A row
    whose solver cap is exceeded is skipped with a warning on stderr.
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    solver = _solver_for(algo)
    records = []
    for n in range(n_min, n_max + 1, step):
        for trial in range(trials):
            seed = derive_seed(master_seed, n, trial)
            try:
                instance = _build_instance(family, n, seed, planted_size)
                ledger = ComparisonLedger()
                start = time.perf_counter()
                result = solver(instance, ledger)
                elapsed = time.perf_counter() - start
            except CapExceededError as exc:
                print(f"warning: skipping n={n} trial={trial}: {exc}", file=sys.stderr)
                continue
            records.append(ExperimentRecord(
                n=n, family=family, algo=algo, seed=seed, trial=trial,
                compare_count=result.compare_count,
                peak_sorted_len=result.peak_sorted_len,
                elementary_ops=result.elementary_ops,
                wall_time=round(elapsed, 6),  # matches the CSV's precision
            ))
    records.sort(key=lambda r: (r.n, r.trial))
    if csv_path is not None:
        write_records_csv(records, csv_path, force=force)
    return records


def write_records_csv(records, path, *, force: bool = False) -> None:
    """Write rows to a fresh CSV file; refuses to touch an existing one."""
    mode = "w" if force else "x"
    with open(path, mode, encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for r in sorted(records, key=lambda r: (r.n, r.trial)):
            writer.writerow([r.n, r.family, r.algo, r.seed, r.trial,
                             r.compare_count, r.peak_sorted_len, r.elementary_ops,
                             f"{r.wall_time:.6f}"])


def read_records_csv(path) -> list[ExperimentRecord]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_FIELDS:
            raise ValueError(f"unexpected CSV header {header!r}")
        records = []
        for row in reader:
            if len(row) != len(CSV_FIELDS):
                raise ValueError(f"malformed CSV row {row!r}")
            records.append(ExperimentRecord(
                n=int(row[0]), family=row[1], algo=row[2], seed=int(row[3]),
                trial=int(row[4]), compare_count=int(row[5]),
                peak_sorted_len=int(row[6]), elementary_ops=int(row[7]),
                wall_time=float(row[8]),
            ))
    return records


def group_records(records) -> dict[tuple[str, str], list[ExperimentRecord]]:
    """Group rows by (algo, family), preserving row order."""
    groups: dict[tuple[str, str], list[ExperimentRecord]] = {}
    for r in records:
        groups.setdefault((r.algo, r.family), []).append(r)
    return groups
