"""Seeded, reproducible instance generators.

Three families:

  * powers2: elements 1, 2, 4, ..., 2^(n-1) with target 2^n. Every one of
    the 2^n subset sums is distinct (they are exactly 0..2^n-1) and all
    fall short of the target, so the instance is unsolvable. Seed-free.
  * random: elements uniform in [1, 4^n], target uniform in [1, n*4^n]
    (floor 1). Magnitudes near 2n bits keep the 2^n subset sums distinct
    with high probability; up to n = 20 distinctness is verified outright
    and the generator redraws until it holds, above that it is accepted
    probabilistically and flagged in the metadata sidecar.
  * planted: elements as in the random family, target defined as the sum
    of a uniformly chosen subset of a given size, so a solution is
    guaranteed and returned alongside the instance.

Same spec in, byte-identical files out: all randomness comes from the
pinned stream in subsum.rng.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import Instance, subset_sum
from .rng import SplitMix64

FAMILY_POWERS2 = "powers2"
FAMILY_RANDOM = "random"
FAMILY_PLANTED = "planted"
FAMILIES = (FAMILY_POWERS2, FAMILY_RANDOM, FAMILY_PLANTED)

# Verifying that all 2^n subset sums are distinct costs 2^n time and memory.
DISTINCT_VERIFY_MAX_N = 20


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    seed: int = 0
    planted_size: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.planted_size is not None:
            if self.family != FAMILY_PLANTED:
                raise ValueError("planted_size is only valid for the planted family")
            if not 0 <= self.planted_size <= self.n:
                raise ValueError(f"planted_size must be in [0, {self.n}]")


@dataclass(frozen=True)
class InstanceMeta:
    """Sidecar metadata emitted next to each generated instance file."""
    family: str
    seed: int | None
    distinct_verified: bool
    planted_mask: int | None


def all_subset_sums(elements) -> list[int]:
    """All 2^n subset sums by doubling; order follows ascending masks."""
    sums = [0]
    for a in elements:
        sums += [s + a for s in sums]
    return sums


def has_distinct_subset_sums(elements) -> bool:
    sums = all_subset_sums(elements)
    return len(set(sums)) == len(sums)


def gen_powers_of_two(n: int) -> Instance:
    """The deterministic unsolvable family with all subset sums distinct."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Instance(tuple(1 << i for i in range(n)), 1 << n)


def _draw_elements(rng: SplitMix64, n: int) -> tuple[int, ...]:
    bound = 4 ** n
    return tuple(rng.next_in_range(1, bound) for _ in range(n))


def gen_random_wide(n: int, seed: int) -> Instance:
    """Wide-magnitude random instance; usually unsolvable by counting.

    Stream order per attempt: n element draws, then the target draw, then
    the distinctness check (n <= DISTINCT_VERIFY_MAX_N only). A failed
    check redraws the whole attempt from the continuing stream.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = SplitMix64(seed)
    target_bound = max(1, n * 4 ** n)
    while True:
        elements = _draw_elements(rng, n)
        target = rng.next_in_range(1, target_bound)
        if n > DISTINCT_VERIFY_MAX_N or has_distinct_subset_sums(elements):
            return Instance(elements, target)


def gen_planted(n: int, seed: int, planted_size: int) -> tuple[Instance, int]:
    """Instance whose target is the sum of a random subset of the given size.

    Elements are drawn exactly like the random family (including the
    distinctness retry); the subset is a uniform size-k index set chosen by
    partial Fisher-Yates over the same stream. Returns the instance and the
    planted mask, which always verifies.
    """
    if not 0 <= planted_size <= n:
        raise ValueError(f"planted_size must be in [0, {n}]")
    rng = SplitMix64(seed)
    while True:
        elements = _draw_elements(rng, n)
        if n > DISTINCT_VERIFY_MAX_N or has_distinct_subset_sums(elements):
            break
    indices = list(range(n))
    for i in range(planted_size):
        j = i + rng.next_below(n - i)
        indices[i], indices[j] = indices[j], indices[i]
    mask = 0
    for i in indices[:planted_size]:
        mask |= 1 << i
    instance = Instance(elements, sum(elements[i] for i in indices[:planted_size]))
    assert subset_sum(instance, mask) == instance.target
    return instance, mask


def generate(spec: GeneratorSpec) -> tuple[Instance, InstanceMeta]:
    """Build the instance plus its metadata sidecar for a generator spec."""
    if spec.family == FAMILY_POWERS2:
        instance = gen_powers_of_two(spec.n)
        meta = InstanceMeta(spec.family, None, True, None)
    elif spec.family == FAMILY_RANDOM:
        instance = gen_random_wide(spec.n, spec.seed)
        meta = InstanceMeta(spec.family, spec.seed,
                            spec.n <= DISTINCT_VERIFY_MAX_N, None)
    else:
        size = spec.planted_size if spec.planted_size is not None else spec.n // 2
        instance, mask = gen_planted(spec.n, spec.seed, size)
        meta = InstanceMeta(spec.family, spec.seed,
                            spec.n <= DISTINCT_VERIFY_MAX_N, mask)
    return instance, meta


def dumps_meta(meta: InstanceMeta) -> str:
    doc = {
        "family": meta.family,
        "seed": meta.seed,
        "distinct_verified": meta.distinct_verified,
        "planted_mask": f"{meta.planted_mask:x}" if meta.planted_mask is not None else None,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_meta(text: str) -> InstanceMeta:
    doc = json.loads(text)
    mask = doc["planted_mask"]
    return InstanceMeta(
        family=doc["family"],
        seed=doc["seed"],
        distinct_verified=doc["distinct_verified"],
        planted_mask=int(mask, 16) if mask is not None else None,
    )
