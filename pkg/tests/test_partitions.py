from collections import Counter

import pytest

from multisums.partitions import (
    PartitionMultiplicities,
    SetPartition,
    count_set_partitions_of_type,
    enumerate_partitions,
    enumerate_set_partitions,
    partition_count,
    set_partition_type,
)


def test_enumeration_order_m4():
    got = [p.y for p in enumerate_partitions(4)]
    assert got == [(4, 0, 0, 0), (2, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)]


def test_enumeration_edge_cases():
    assert [p.y for p in enumerate_partitions(0)] == [()]
    assert [p.y for p in enumerate_partitions(1)] == [(1,)]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_counts_match_pentagonal_recurrence():
    for m in range(26):
        assert len(list(enumerate_partitions(m))) == partition_count(m)
    assert partition_count(10) == 42
    assert partition_count(25) == 1958


def test_partition_fields():
    part = PartitionMultiplicities.from_parts(4, (2, 1, 1))
    assert part.y == (2, 1, 0, 0)
    assert part.length == 3
    assert part.parity == "odd"
    assert part.parts() == (2, 1, 1)
    with pytest.raises(ValueError):
        PartitionMultiplicities(3, (1, 2, 0))  # sums to 5, not 3


def test_partition_parity_split():
    # the two classes are nonempty from m = 2 on
    for m in range(2, 10):
        parities = Counter(p.parity for p in enumerate_partitions(m))
        assert parities["even"] >= 1 and parities["odd"] >= 1
        assert parities["even"] + parities["odd"] == partition_count(m)


def test_bell_counts():
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    for m in range(1, 9):
        assert len(list(enumerate_set_partitions(m))) == bell[m]
    with pytest.raises(ValueError):
        list(enumerate_set_partitions(9))
    with pytest.raises(ValueError):
        list(enumerate_set_partitions(0))


def test_set_partition_canonical_blocks():
    sp = SetPartition(3, (frozenset({3}), frozenset({1, 2})))
    # blocks ordered by (size, smallest element)
    assert [sorted(b) for b in sp.blocks] == [[3], [1, 2]]
    with pytest.raises(ValueError):
        SetPartition(3, (frozenset({1, 2}),))  # does not cover {1,2,3}
    with pytest.raises(ValueError):
        SetPartition(2, (frozenset({1}), frozenset({1, 2})))  # overlap


def test_type_counts_match_enumeration():
    for m in range(1, 9):
        by_type = Counter(set_partition_type(sp).y for sp in enumerate_set_partitions(m))
        for part in enumerate_partitions(m):
            assert by_type[part.y] == count_set_partitions_of_type(part)
        assert sum(by_type.values()) == len(list(enumerate_set_partitions(m)))


def test_type_count_values():
    # 3 ways to split {1,2,3} into a pair and a singleton
    assert count_set_partitions_of_type(PartitionMultiplicities(3, (1, 1, 0))) == 3
    assert count_set_partitions_of_type(PartitionMultiplicities(4, (0, 2, 0, 0))) == 3
    assert count_set_partitions_of_type(PartitionMultiplicities(5, (5, 0, 0, 0, 0))) == 1
