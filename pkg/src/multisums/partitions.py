"""Integer partitions in multiplicity encoding, and set partitions.

A partition of m is stored as the multiplicity vector y = (y_1, ..., y_m)
where y_i counts the parts equal to i, so sum(i * y_i) == m and the vector
always has length exactly m. That encoding lines up one slot per possible
part size, which is what the partition-weighted product formulas consume.

Set partitions of {1, ..., m} are kept in a canonical form: each block
ascending, blocks ordered by (size, smallest element).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exact_arith import factorial

__all__ = [
    "PartitionMultiplicities",
    "enumerate_partitions",
    "partition_count",
    "partition_parity",
    "SetPartition",
    "enumerate_set_partitions",
    "set_partition_type",
    "count_set_partitions_of_type",
]

SET_PARTITION_MAX_M = 8  # Bell(8) = 4140; brute enumeration stays cheap


def partition_parity(y: Iterable[int]) -> str:
    """Parity of a partition given its multiplicities: sign of (-1)^(y_1+...+y_m)."""
    return "even" if sum(y) % 2 == 0 else "odd"


@dataclass(frozen=True)
class PartitionMultiplicities:
    """A partition of m as its multiplicity vector, length exactly m."""

    m: int
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))
        if self.m < 0:
            raise ValueError("m must be >= 0")
        if len(self.y) != self.m:
            raise ValueError(f"multiplicity vector must have length {self.m}, got {len(self.y)}")
        if any(v < 0 for v in self.y):
            raise ValueError("multiplicities must be >= 0")
        if sum(i * v for i, v in enumerate(self.y, start=1)) != self.m:
            raise ValueError("multiplicities must weigh to m")

    @property
    def length(self) -> int:
        """Number of parts."""
        return sum(self.y)

    @property
    def parity(self) -> str:
        return partition_parity(self.y)

    def parts(self) -> tuple[int, ...]:
        """The parts in descending order."""
        out: list[int] = []
        for i in range(self.m, 0, -1):
            out.extend([i] * self.y[i - 1])
        return tuple(out)

    @classmethod
    def from_parts(cls, m: int, parts: Iterable[int]) -> "PartitionMultiplicities":
        y = [0] * m
        for part in parts:
            if not 1 <= part <= m:
                raise ValueError(f"part {part} out of range for m={m}")
            y[part - 1] += 1
        return cls(m, tuple(y))


def _descending_part_lists(m: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # Largest part ascending, then recursively; yields descending part tuples
    # in ascending lexicographic order: (1,1,1,1), (2,1,1), (2,2), (3,1), (4).
    if m == 0:
        yield ()
        return
    for first in range(1, min(m, max_part) + 1):
        for rest in _descending_part_lists(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int) -> list[PartitionMultiplicities]:
    """All partitions of m, all-ones first, single part m last.

    The order is ascending lexicographic on the descending part tuples and
    is part of the contract (golden CLI output depends on it). m = 0 yields
    the single empty partition.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return [PartitionMultiplicities.from_parts(m, parts) for parts in _descending_part_lists(m, m)]


_pcounts = [1]  # p(0), extended on demand by the pentagonal recurrence


def partition_count(m: int) -> int:
    """p(m) via Euler's pentagonal-number recurrence (no enumeration)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    while len(_pcounts) <= m:
        n = len(_pcounts)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * _pcounts[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * _pcounts[n - g2]
            k += 1
        _pcounts.append(total)
    return _pcounts[m]


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1, ..., m} in canonical block order."""

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted((tuple(sorted(block)) for block in self.blocks), key=lambda b: (len(b), b)))
        object.__setattr__(self, "blocks", canon)
        seen = [e for block in canon for e in block]
        if sorted(seen) != list(range(1, self.m + 1)):
            raise ValueError("blocks must partition {1, ..., m}")

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def enumerate_set_partitions(m: int) -> list[SetPartition]:
    """All Bell(m) set partitions of {1, ..., m}, 1 <= m <= 8, canonical order."""
    if not 1 <= m <= SET_PARTITION_MAX_M:
        raise ValueError(f"m must be in [1, {SET_PARTITION_MAX_M}]")
    partitions: list[list[list[int]]] = [[[1]]]
    for element in range(2, m + 1):
        grown: list[list[list[int]]] = []
        for blocks in partitions:
            for i in range(len(blocks)):
                grown.append([b + [element] if j == i else list(b) for j, b in enumerate(blocks)])
            grown.append([list(b) for b in blocks] + [[element]])
        partitions = grown
    out = [SetPartition(m, tuple(tuple(b) for b in blocks)) for blocks in partitions]
    out.sort(key=lambda sp: sp.blocks)
    return out


def set_partition_type(sp: SetPartition) -> PartitionMultiplicities:
    """The integer partition of m recording the block sizes of sp."""
    return PartitionMultiplicities.from_parts(sp.m, (len(b) for b in sp.blocks))


def count_set_partitions_of_type(pm: PartitionMultiplicities) -> int:
    """How many set partitions of {1, ..., m} have the given block-size type.

    m! / prod_i ( (i!)^(y_i) * y_i! ), always an exact integer.
    """
    denom = 1
    for i, mult in enumerate(pm.y, start=1):
        denom *= factorial(i) ** mult * factorial(mult)
    count, rem = divmod(factorial(pm.m), denom)
    if rem:
        raise AssertionError("type count must divide m! exactly")
    return count
