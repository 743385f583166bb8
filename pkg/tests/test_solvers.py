"""Solver behavior: contracts, frozen reference runs, and cross-oracle properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_matching_masks, oracle_solvable, simulate_mitm_scan
from subsum import (CapExceededError, ComparisonLedger, CompareEvent,
                    EmitEvent, Half, HalfSumEntry, Instance, Mode,
                    brute_force_solve, dp_solve, gen_powers_of_two, half_sums,
                    mitm_solve, solution_witness_check, subset_sum, verify)
from subsum.ledger import ENCODING_SPLIT_SUM, ENCODING_SUM_VS_TARGET


@st.composite
def small_instances(draw, max_n=10, magnitude=30):
    elements = tuple(draw(st.lists(st.integers(-magnitude, magnitude),
                                   max_size=max_n)))
    n = len(elements)
    if n and draw(st.booleans()):
        mask = draw(st.integers(0, (1 << n) - 1))
        target = sum(elements[i] for i in range(n) if mask >> i & 1)
    else:
        target = draw(st.integers(-2 * magnitude, 2 * magnitude))
    return Instance(elements, target)


# -- brute force -----------------------------------------------------------

def test_brute_empty_instance_solved_by_empty_mask():
    res = brute_force_solve(Instance((), 0))
    assert res.solution == 0
    assert res.compare_count == 1


def test_brute_lowest_mask_wins_tie():
    res = brute_force_solve(Instance((1, 1), 1))
    assert res.solution == 0b01


def test_brute_powers2_exhausts_exactly():
    res = brute_force_solve(gen_powers_of_two(10))
    assert res.solution is None
    assert res.compare_count == 1024
    assert res.peak_sorted_len == 1
    assert res.elementary_ops == 2048


def test_brute_ascending_order_and_events():
    led = ComparisonLedger(Mode.FULL_TRACE)
    inst = Instance((2, 3), 3)
    res = brute_force_solve(inst, led)
    assert res.solution == 0b10
    compares = [e for e in led.trace if isinstance(e, CompareEvent)]
    # masks 0, 1, 2 in order: sums 0, 2, 3
    assert [e.lhs for e in compares] == [0, 2, 3]
    assert led.trace[-1] == EmitEvent(0b10)


def test_brute_cap_refusal():
    inst = Instance((0,) * 31, 1)
    with pytest.raises(CapExceededError, match="30"):
        brute_force_solve(inst)
    small = Instance((1, 2, 3, 4, 5), 40)
    with pytest.raises(CapExceededError, match="4"):
        brute_force_solve(small, max_n=4)
    assert brute_force_solve(small, max_n=5).solution is None  # max sum is 15


def test_full_trace_cap_refusal():
    inst = Instance((1,) * 25, 100)
    for solver in (brute_force_solve, mitm_solve):
        with pytest.raises(CapExceededError, match="24"):
            solver(inst, ComparisonLedger(Mode.FULL_TRACE))


@given(st.integers(0, 10), st.lists(st.integers(-20, 20), max_size=10))
def test_brute_exact_count_on_no_instance(odd_target_seed, halves):
    # all-even elements with an odd target can never match
    inst = Instance(tuple(2 * x for x in halves), 2 * odd_target_seed + 1)
    res = brute_force_solve(inst)
    assert res.solution is None
    assert res.compare_count == 1 << inst.n
    assert res.peak_sorted_len == 1


# -- half sums -------------------------------------------------------------

def test_half_sums_empty_instance():
    inst = Instance((), 0)
    assert half_sums(inst, Half.FRONT) == [HalfSumEntry(0, 0)]
    assert half_sums(inst, Half.BACK) == [HalfSumEntry(0, 0)]


def test_half_sums_three_elements():
    inst = Instance((3, 4, 5), 0)
    front = half_sums(inst, Half.FRONT)
    assert front == [HalfSumEntry(0, 0), HalfSumEntry(3, 1),
                     HalfSumEntry(4, 2), HalfSumEntry(7, 3)]
    back = half_sums(inst, Half.BACK)
    assert back == [HalfSumEntry(0, 0), HalfSumEntry(5, 0b100)]


def test_half_sums_single_element_back_is_empty_set_only():
    inst = Instance((9,), 9)
    assert half_sums(inst, Half.BACK) == [HalfSumEntry(0, 0)]


def test_half_sums_charges_one_op_per_entry():
    led = ComparisonLedger()
    half_sums(Instance((1, 2, 3, 4), 0), Half.FRONT, led)
    assert led.elementary_ops == 4


def test_half_sums_cap_refusal():
    inst = Instance((1, 2, 3, 4, 5, 6), 0)
    with pytest.raises(CapExceededError, match="cap"):
        half_sums(inst, Half.FRONT, max_entries=4)


@given(small_instances(max_n=10))
def test_half_sums_integrity(inst):
    split = (inst.n + 1) // 2
    for half, lo_bit, hi_bit in [(Half.FRONT, 0, split), (Half.BACK, split, inst.n)]:
        entries = half_sums(inst, half)
        assert len(entries) == 1 << (hi_bit - lo_bit)
        masks = [e.mask for e in entries]
        assert masks == sorted(masks)
        assert len(set(masks)) == len(masks)
        for e in entries:
            assert e.mask >> hi_bit == 0 and e.mask & ((1 << lo_bit) - 1) == 0
            assert e.sum == subset_sum(inst, e.mask)
        # sorting for the scan is a permutation of the generated entries
        assert sorted(sorted(entries)) == sorted(entries)
        assert set(sorted(entries)) == set(entries)


# -- meet in the middle ----------------------------------------------------

def test_mitm_matches_independent_simulation_on_worked_example():
    elements = (3, 34, 4, 12, 5, 2)
    inst = Instance(elements, 9)
    expected_mask, expected_count = simulate_mitm_scan(elements, 9)
    res = mitm_solve(inst)
    assert res.solution == expected_mask
    assert res.compare_count == expected_count
    assert verify(inst, res.solution)
    assert expected_mask in oracle_matching_masks(elements, 9)


def test_mitm_empty_instance_unsolvable_one_comparison():
    res = mitm_solve(Instance((), 7))
    assert res.solution is None
    assert res.compare_count == 1


def test_mitm_single_element():
    res = mitm_solve(Instance((9,), 9))
    assert res.solution == 0b1


def test_mitm_powers2_frozen_reference_run():
    res = mitm_solve(gen_powers_of_two(10))
    assert res.solution is None
    assert res.compare_count == 32
    assert res.compare_count <= 2 ** 5 + 2 ** 5 - 1
    assert res.peak_sorted_len == 32
    # charging model: 64 generated + 2 list builds of 32 + 2 sorts at 160 + 32 compares
    assert res.elementary_ops == 480


def test_mitm_cap_refusal():
    inst = Instance((0,) * 51, 1)
    with pytest.raises(CapExceededError, match="50"):
        mitm_solve(inst)


def test_mitm_trace_shape():
    inst = Instance((4, 5), 9)
    led = ComparisonLedger(Mode.FULL_TRACE)
    res = mitm_solve(inst, led)
    assert res.solution == 0b11
    lists = [e for e in led.trace if not isinstance(e, (CompareEvent, EmitEvent))]
    assert [e.length for e in lists] == [2, 2]
    assert led.trace[-1] == EmitEvent(0b11)
    assert solution_witness_check(led.trace, inst, led.encoding)
    assert led.encoding == ENCODING_SPLIT_SUM


@given(small_instances())
@settings(max_examples=300)
def test_mitm_equals_independent_simulation(inst):
    expected_mask, expected_count = simulate_mitm_scan(inst.elements, inst.target)
    res = mitm_solve(inst)
    assert res.solution == expected_mask
    assert res.compare_count == expected_count


@given(small_instances())
def test_mitm_scan_bound_and_monotonicity(inst):
    led = ComparisonLedger(Mode.FULL_TRACE)
    res = mitm_solve(inst, led)
    split = (inst.n + 1) // 2
    assert res.compare_count <= (1 << split) + (1 << (inst.n - split)) - 1
    compares = [e for e in led.trace if isinstance(e, CompareEvent)]
    lhs = [e.lhs for e in compares]
    rhs = [e.rhs for e in compares]
    assert lhs == sorted(lhs)
    assert rhs == sorted(rhs)


# -- dp cross-oracle -------------------------------------------------------

def test_dp_worked_example():
    inst = Instance((3, 34, 4, 12, 5, 2), 9)
    mask = dp_solve(inst)
    assert mask is not None and verify(inst, mask)


def test_dp_unreachable_target():
    assert dp_solve(Instance((1, 2), 4)) is None


def test_dp_negative_elements():
    inst = Instance((-2, 2), 0)
    mask = dp_solve(inst)
    assert mask is not None and verify(inst, mask)
    neg = Instance((-3, 5), -3)
    assert verify(neg, dp_solve(neg))
    assert dp_solve(Instance((-3, 5), -4)) is None


def test_dp_empty_instance():
    assert dp_solve(Instance((), 0)) == 0
    assert dp_solve(Instance((), 1)) is None


def test_dp_range_cap_refusal():
    with pytest.raises(CapExceededError, match="cap"):
        dp_solve(Instance((10 ** 8, 1), 5))
    assert dp_solve(Instance((10 ** 8, 1), 5), max_range=2 * 10 ** 8) is None


# -- cross-solver properties -----------------------------------------------

def test_three_way_agreement_exhaustive_tiny():
    import itertools
    for n in range(0, 4):
        for elements in itertools.product(range(-4, 5), repeat=n):
            for target in range(-4, 5):
                inst = Instance(elements, target)
                brute = brute_force_solve(inst)
                mitm = mitm_solve(inst)
                dp_mask = dp_solve(inst)
                assert brute.found == mitm.found == (dp_mask is not None)
                for mask in (brute.solution, mitm.solution, dp_mask):
                    if mask is not None:
                        assert verify(inst, mask)


@given(small_instances(max_n=8))
@settings(max_examples=300)
def test_three_way_oracle_agreement(inst):
    expected = oracle_solvable(inst.elements, inst.target)
    brute = brute_force_solve(inst)
    mitm = mitm_solve(inst)
    dp_mask = dp_solve(inst)
    assert brute.found == expected
    assert mitm.found == expected
    assert (dp_mask is not None) == expected
    for mask in (brute.solution, mitm.solution, dp_mask):
        if mask is not None:
            assert verify(inst, mask)


@given(small_instances())
def test_counters_identical_across_modes(inst):
    for solver in (brute_force_solve, mitm_solve):
        plain = ComparisonLedger(Mode.COUNTERS_ONLY)
        traced = ComparisonLedger(Mode.FULL_TRACE)
        res_plain = solver(inst, plain)
        res_traced = solver(inst, traced)
        assert res_plain == res_traced
        assert (plain.compare_count, plain.peak_sorted_len, plain.elementary_ops) == \
               (traced.compare_count, traced.peak_sorted_len, traced.elementary_ops)


@given(small_instances())
def test_deterministic_repeat_runs(inst):
    assert brute_force_solve(inst) == brute_force_solve(inst)
    assert mitm_solve(inst) == mitm_solve(inst)


@given(small_instances(max_n=12))
def test_solver_traces_pass_witness_check(inst):
    for solver, encoding in [(brute_force_solve, ENCODING_SUM_VS_TARGET),
                             (mitm_solve, ENCODING_SPLIT_SUM)]:
        led = ComparisonLedger(Mode.FULL_TRACE)
        solver(inst, led)
        assert led.encoding == encoding
        assert solution_witness_check(led.trace, inst, led.encoding)
