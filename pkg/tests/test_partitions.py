import pytest
from hypothesis import given, strategies as st

from qcores.eta import euler_f1
from qcores.partitions import (
    Partition,
    count_cores,
    enumerate_partitions,
    hook_numbers,
    is_t_core,
)


partitions_st = st.lists(st.integers(1, 7), max_size=6).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_enumerate_zero_is_empty_partition():
    assert [p.parts for p in enumerate_partitions(0)] == [()]


def test_enumerate_four():
    assert [p.parts for p in enumerate_partitions(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_enumerate_count_matches_series():
    # p(10) = 42, independently from the generating function
    assert len(list(enumerate_partitions(10))) == 42
    assert euler_f1(11).invert().coefficient(10) == 42


def test_enumeration_is_deterministic_and_duplicate_free():
    seen = [p.parts for p in enumerate_partitions(8)]
    assert len(seen) == len(set(seen)) == 22


def test_hook_single_node():
    assert hook_numbers(Partition((1,))) == [1]


def test_hooks_two_by_two():
    assert sorted(hook_numbers(Partition((2, 2)))) == [1, 2, 2, 3]


def test_hooks_221_has_max_four():
    hooks = hook_numbers(Partition((2, 2, 1)))
    assert max(hooks) == 4
    assert 5 not in hooks


@given(partitions_st)
def test_hook_count_equals_weight(p):
    assert len(hook_numbers(p)) == p.weight


@given(partitions_st, st.integers(1, 8))
def test_core_property_is_conjugation_invariant(p, t):
    assert is_t_core(p, t) == is_t_core(p.conjugate(), t)


def test_is_t_core_examples():
    assert is_t_core(Partition(()), 1)
    assert is_t_core(Partition(()), 17)
    assert not is_t_core(Partition((4, 1)), 5)
    assert is_t_core(Partition((3, 2)), 5)
    assert sorted(hook_numbers(Partition((3, 2)))) == [1, 1, 2, 3, 4]


def test_only_empty_partition_is_1_core():
    for n in range(7):
        for p in enumerate_partitions(n):
            assert is_t_core(p, 1) == (p.parts == ())


def test_count_cores_examples():
    assert count_cores(5, 4) == 5
    assert count_cores(5, 5) == 2
    assert count_cores(5, 0, pairs=True) == 1
    assert count_cores(5, 10, pairs=True) == 156


def test_count_cores_validation():
    with pytest.raises(ValueError):
        count_cores(0, 3)
    with pytest.raises(ValueError):
        count_cores(5, -1)
