"""Deterministic exact subset-sum solvers.

Three independent routes to the same answer:

  * brute_force_solve: enumerate all masks in ascending order, one
    instrumented comparison per candidate sum. The Theta(2^n) baseline.
  * mitm_solve: split the elements into a front and back half, enumerate
    each half's subset sums, sort both candidate lists, and run a linear
    two-pointer scan for a crossing pair. Theta(sqrt(2^n) * n) time.
  * dp_solve: pseudo-polynomial reachability table over the sum range,
    uninstrumented; a cross-check oracle for small-magnitude instances.

All solvers are sequential and deterministic: identical instances produce
identical results and identical counters on every run.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .ledger import (ENCODING_SPLIT_SUM, ENCODING_SUM_VS_TARGET,
                     FULL_TRACE_MAX_N, ComparisonLedger, Mode, Ordering)
from .model import Instance, verify

BRUTE_FORCE_MAX_N = 30
MITM_MAX_N = 50
HALF_LIST_MAX_ENTRIES = 1 << 26
DP_MAX_RANGE = 10 ** 7


class CapExceededError(RuntimeError):
    """A configured size cap was hit; the solver refuses rather than degrade."""


class Half(enum.Enum):
    FRONT = "front"
    BACK = "back"


class HalfSumEntry(NamedTuple):
    sum: int
    mask: int


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solver run plus its ledger counter snapshot."""
    solution: int | None
    compare_count: int
    peak_sorted_len: int
    elementary_ops: int

    @property
    def found(self) -> bool:
        return self.solution is not None


def _result(instance: Instance, ledger: ComparisonLedger, solution) -> SolveResult:
    if solution is not None:
        assert verify(instance, solution)
    return SolveResult(solution, ledger.compare_count, ledger.peak_sorted_len,
                       ledger.elementary_ops)


def _check_trace_cap(instance: Instance, ledger: ComparisonLedger) -> None:
    if ledger.mode is Mode.FULL_TRACE and instance.n > FULL_TRACE_MAX_N:
        raise CapExceededError(
            f"full tracing is capped at n={FULL_TRACE_MAX_N}, got n={instance.n}")


def brute_force_solve(instance: Instance, ledger: ComparisonLedger | None = None,
                      *, max_n: int = BRUTE_FORCE_MAX_N) -> SolveResult:
    """Try every mask in ascending numeric order until one hits the target.

    Each candidate costs one generation charge and one comparison; the
    lowest matching mask wins. No sorted lists are built, so the ledger's
    peak stays at its floor of 1. On an unsolvable instance the comparison
    count is exactly 2^n.
    """
    if instance.n > max_n:
        raise CapExceededError(
            f"brute force is capped at n={max_n}, got n={instance.n}")
    if ledger is None:
        ledger = ComparisonLedger()
    _check_trace_cap(instance, ledger)
    ledger.encoding = ENCODING_SUM_VS_TARGET

    elements = instance.elements
    target = instance.target
    # Prefix sums make the ascending-mask walk incremental: stepping from
    # mask-1 to mask clears the trailing one-bits and sets one new bit.
    prefix = [0]
    for a in elements:
        prefix.append(prefix[-1] + a)

    compare = ledger.compare
    charge = ledger.charge_generated
    eq = Ordering.EQ
    total = 0
    charge(1)
    if compare(total, target) is eq:
        ledger.emit(0)
        return _result(instance, ledger, 0)
    for mask in range(1, 1 << instance.n):
        low_index = (mask & -mask).bit_length() - 1
        total += elements[low_index] - prefix[low_index]
        charge(1)
        if compare(total, target) is eq:
            ledger.emit(mask)
            return _result(instance, ledger, mask)
    return _result(instance, ledger, None)


def half_sums(instance: Instance, half: Half,
              ledger: ComparisonLedger | None = None,
              *, max_entries: int = HALF_LIST_MAX_ENTRIES) -> list[HalfSumEntry]:
    """All subset sums of one half of the instance, in ascending mask order.

    The front half covers element indices [0, ceil(n/2)); the back half
    covers the rest. Masks use absolute bit positions so a front mask and a
    back mask combine with a plain OR. Every generated entry charges one
    elementary op.
    """
    if ledger is None:
        ledger = ComparisonLedger()
    split = (instance.n + 1) // 2
    if half is Half.FRONT:
        indices = range(0, split)
    else:
        indices = range(split, instance.n)
    if (1 << len(indices)) > max_entries:
        raise CapExceededError(
            f"half list would hold 2^{len(indices)} entries, cap is {max_entries}")
    entries = [HalfSumEntry(0, 0)]
    for i in indices:
        a = instance.elements[i]
        bit = 1 << i
        entries += [HalfSumEntry(e.sum + a, e.mask | bit) for e in entries]
    ledger.charge_generated(len(entries))
    return entries


def mitm_solve(instance: Instance, ledger: ComparisonLedger | None = None,
               *, max_n: int = MITM_MAX_N,
               max_entries: int = HALF_LIST_MAX_ENTRIES) -> SolveResult:
    """Meet-in-the-middle: sorted half-sum lists plus a two-pointer scan.

    The front list holds (front sum, mask) ascending; the back list holds
    (target - back sum, mask) ascending, ties broken by mask. The scan
    compares the heads: equal means the two halves combine to the target,
    so emit the OR of the masks and stop; otherwise advance the pointer on
    the smaller side. When either list runs out there is no solution.
    Complete because both halves are enumerated exhaustively.
    """
    if instance.n > max_n:
        raise CapExceededError(
            f"meet-in-the-middle is capped at n={max_n}, got n={instance.n}")
    if ledger is None:
        ledger = ComparisonLedger()
    _check_trace_cap(instance, ledger)
    ledger.encoding = ENCODING_SPLIT_SUM

    target = instance.target
    front = half_sums(instance, Half.FRONT, ledger, max_entries=max_entries)
    back = half_sums(instance, Half.BACK, ledger, max_entries=max_entries)
    lo = sorted(front)
    hi = sorted((target - e.sum, e.mask) for e in back)
    ledger.record_sorted_list(len(lo))
    ledger.charge_sort(len(lo))
    ledger.record_sorted_list(len(hi))
    ledger.charge_sort(len(hi))

    i = j = 0
    len_lo, len_hi = len(lo), len(hi)
    scanned = 0
    solution = None
    while i < len_lo and j < len_hi:
        scanned += 1
        outcome = ledger.compare(lo[i][0], hi[j][0])
        if outcome is Ordering.EQ:
            solution = lo[i][1] | hi[j][1]
            ledger.emit(solution)
            break
        if outcome is Ordering.LT:
            i += 1
        else:
            j += 1
    # Each miss advances exactly one pointer, so the scan is linear.
    assert scanned <= len_lo + len_hi - 1
    return _result(instance, ledger, solution)


def dp_solve(instance: Instance, *, max_range: int = DP_MAX_RANGE) -> int | None:
    """Reachability table over the sum range; returns a mask or None.

    Negative elements are handled by offsetting sums by the most negative
    reachable total. Kept uninstrumented on purpose: it exists to cross-check
    the enumerating solvers on small-magnitude instances, through a code
    path that shares nothing with them.
    """
    elements = instance.elements
    min_sum = sum(a for a in elements if a < 0)
    max_sum = sum(a for a in elements if a > 0)
    if max_sum - min_sum > max_range:
        raise CapExceededError(
            f"sum range {max_sum - min_sum} exceeds the DP cap {max_range}")
    target = instance.target
    if target < min_sum or target > max_sum:
        return None

    offset = -min_sum
    # reachable[i] has bit (s + offset) set iff some subset of the first i
    # elements sums to s.
    reachable = [1 << offset]
    for a in elements:
        prev = reachable[-1]
        shifted = prev << a if a >= 0 else prev >> -a
        reachable.append(prev | shifted)
    if not (reachable[-1] >> (target + offset)) & 1:
        return None

    mask = 0
    remaining = target
    for i in range(instance.n, 0, -1):
        if (reachable[i - 1] >> (remaining + offset)) & 1:
            continue
        mask |= 1 << (i - 1)
        remaining -= elements[i - 1]
    assert remaining == 0
    return mask
