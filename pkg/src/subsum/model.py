"""Exact subset-sum instances, index masks, and the canonical instance file format.

All arithmetic is performed on Python ints, which are arbitrary-precision,
so sums are always exact and overflow cannot occur. Element values and the
target are serialized as decimal strings so the file format carries no
machine word size.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

_DECIMAL_RE = re.compile(r"-?[0-9]+")


class InstanceFormatError(ValueError):
    """Raised when an instance document violates the file format."""


@dataclass(frozen=True)
class Instance:
    """A subset-sum instance: an ordered list of integers and a target.

    Elements are kept in input order and may repeat or be negative; subsets
    are identified by index masks, so duplicates stay unambiguous. n = 0 is
    legal: the only subset is empty and the instance is solvable iff the
    target is zero.
    """

    elements: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for x in self.elements:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"element {x!r} is not an int")
        if not isinstance(self.target, int) or isinstance(self.target, bool):
            raise TypeError(f"target {self.target!r} is not an int")

    @property
    def n(self) -> int:
        return len(self.elements)


def check_mask(instance: Instance, mask: int) -> None:
    """Validate that mask is an n-bit index set for this instance."""
    if not isinstance(mask, int) or isinstance(mask, bool):
        raise TypeError(f"mask {mask!r} is not an int")
    if mask < 0 or mask >> instance.n:
        raise ValueError(f"mask {mask:#x} out of range for n={instance.n}")


def mask_indices(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_sum(instance: Instance, mask: int) -> int:
    """Sum of the elements selected by mask; zero for the empty mask."""
    check_mask(instance, mask)
    total = 0
    elements = instance.elements
    for i in mask_indices(mask):
        total += elements[i]
    return total


def verify(instance: Instance, mask: int) -> bool:
    """True iff the masked subset sums exactly to the target."""
    return subset_sum(instance, mask) == instance.target


def dumps_instance(instance: Instance) -> str:
    """Canonical single-line JSON encoding; byte-stable for identical instances."""
    doc = {
        "n": instance.n,
        "a": [str(x) for x in instance.elements],
        "b": str(instance.target),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _parse_decimal(s, what: str) -> int:
    # int() would accept "1_0" and surrounding whitespace; the format does not.
    if not isinstance(s, str) or not _DECIMAL_RE.fullmatch(s):
        raise InstanceFormatError(f"{what} must be a decimal string, got {s!r}")
    return int(s)


def loads_instance(text: str) -> Instance:
    """Parse the canonical instance document, rejecting malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")
    missing = {"n", "a", "b"} - doc.keys()
    if missing:
        raise InstanceFormatError(f"missing keys: {sorted(missing)}")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InstanceFormatError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(doc["a"], list):
        raise InstanceFormatError("a must be a list of decimal strings")
    elements = tuple(_parse_decimal(s, "element") for s in doc["a"])
    if len(elements) != n:
        raise InstanceFormatError(f"n={n} but {len(elements)} elements given")
    target = _parse_decimal(doc["b"], "target")
    return Instance(elements, target)


def write_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_instance(instance))


def read_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_instance(fh.read())
