"""Partition enumeration tests against classical count tables."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compparity import partitions as P


def test_partition_validation():
    p = P.Partition((3, 2, 2))
    assert p.size == 7
    assert p.length == 3
    with pytest.raises(ValueError):
        P.Partition((2, 3))
    with pytest.raises(ValueError):
        P.Partition((1, 0))


def test_unrestricted_counts():
    got = [P.count_partitions(n, P.All()) for n in range(11)]
    assert got == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_distinct_and_odd_counts_agree():
    distinct = [P.count_partitions(n, P.DistinctParts()) for n in range(11)]
    odd = [P.count_partitions(n, P.OddParts()) for n in range(11)]
    assert distinct == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    assert distinct == odd


def test_signed_all_partitions():
    got = [P.signed_count(n, P.All()).diff for n in range(9)]
    assert got == [-1, 1, 0, 1, -1, 1, -1, 1, -2]


def test_distinct_in_residues():
    cls = P.DistinctInResidues(4, frozenset({0, 1, 3}))
    # parts distinct, each congruent to 0, 1 or 3 mod 4
    for p in P.enumerate_partitions(8, cls):
        assert len(set(p.parts)) == p.length
        assert all(x % 4 in (0, 1, 3) for x in p.parts)
    with pytest.raises(ValueError):
        P.DistinctInResidues(4, frozenset({4}))
    with pytest.raises(ValueError):
        P.DistinctInResidues(0, frozenset({0}))


def test_max_multiplicity():
    cls = P.MaxMultiplicity(2)
    for p in P.enumerate_partitions(9, cls):
        assert all(p.parts.count(v) < 2 for v in set(p.parts))


def test_no_part_divisible_by():
    cls = P.NoPartDivisibleBy(3)
    for p in P.enumerate_partitions(9, cls):
        assert all(x % 3 != 0 for x in p.parts)


def test_initial_repetitions_predicate():
    # once some value repeats >= k times, every smaller value must too
    assert P.has_initial_repetitions((3, 2, 1), 2)          # no repeats at all
    assert P.has_initial_repetitions((2, 2, 1, 1), 2)
    assert not P.has_initial_repetitions((2, 2, 1), 2)      # 1 appears once
    assert not P.has_initial_repetitions((3, 3, 2, 1, 1), 2)
    assert P.has_initial_repetitions((5, 2, 2, 2, 1, 1, 1), 3)


def test_initial_two_reps_with_marks():
    cls = P.InitialTwoRepsWithMarks(1)
    # exactly one distinct part value, and initial 2-repetitions hold
    for p in P.enumerate_partitions(6, cls):
        assert len(set(p.parts)) == 1
        assert P.has_initial_repetitions(p.parts, 2)


def test_franklin_classes_small():
    # parts appearing >= m+1 times come only in k multiples vs divisibility class
    a = P.count_partitions(4, P.FranklinRepeated(2, 1))
    b = P.count_partitions(4, P.FranklinDivisible(2, 1))
    assert (a, b) == (3, 3)


@given(st.integers(0, 14))
def test_enumeration_sorted_unique(n):
    # largest part first, then descending lex
    seen = list(P.enumerate_partitions(n, P.All()))
    assert seen == sorted(set(seen), reverse=True)
    assert all(p.size == n for p in seen)


@given(st.integers(0, 14))
def test_partitions_embed_in_compositions(n):
    from compparity import compositions as C

    parts = {p.parts for p in P.enumerate_partitions(n, P.All())}
    comps = {c.parts for c in C.enumerate_compositions(n, C.All())}
    weakly_decreasing = {t for t in comps if tuple(sorted(t, reverse=True)) == t}
    assert parts == weakly_decreasing
