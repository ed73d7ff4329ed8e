"""Enumeration oracle tests.

Frozen count tables below were produced by exhaustive enumeration and
cross-checked against standard references where one exists (powers of
two, Fibonacci, compositions into distinct parts).
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compparity import compositions as C


def test_composition_validation():
    c = C.Composition((2, 1, 2))
    assert c.size == 5
    assert c.length == 3
    with pytest.raises(ValueError):
        C.Composition((2, 0, 1))
    with pytest.raises(ValueError):
        C.Composition((-1,))


def test_empty_composition():
    empty = C.Composition(())
    assert empty.size == 0
    assert empty.length == 0
    assert C.All().contains(empty.parts)
    assert C.MinPart(3).contains(empty.parts)


def test_all_counts_are_powers_of_two():
    got = [C.count_compositions(n, C.All()) for n in range(9)]
    assert got == [1, 1, 2, 4, 8, 16, 32, 64, 128]


def test_signed_all_compositions():
    # size 0: the empty composition has even length
    assert C.signed_count(0, C.All()) == C.SignedCount(0, 1)
    assert C.signed_count(1, C.All()).diff == 1
    for n in range(2, 9):
        assert C.signed_count(n, C.All()).diff == 0


def test_min_part_counts():
    fib = [C.count_compositions(n, C.MinPart(2)) for n in range(2, 11)]
    assert fib == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    got = [C.count_compositions(n, C.MinPart(3)) for n in range(3, 13)]
    assert got == [1, 1, 1, 2, 3, 4, 6, 9, 13, 19]


def test_min_part_congruent_parts():
    cls = C.MinPartCongruent(2, 3, 1)
    # parts come from {3, 6, 9, ...}
    got = [C.count_compositions(n, cls) for n in range(1, 13)]
    assert got == [0, 0, 1, 0, 0, 2, 0, 0, 4, 0, 0, 8]
    with pytest.raises(ValueError):
        C.MinPartCongruent(2, 3, 3)
    with pytest.raises(ValueError):
        C.MinPartCongruent(2, 0, 0)


def test_distinct_part_counts():
    got = [C.count_compositions(n, C.DistinctParts()) for n in range(11)]
    assert got == [1, 1, 1, 3, 3, 5, 11, 13, 19, 27, 57]


def test_odd_part_counts_are_fibonacci():
    got = [C.count_compositions(n, C.OddParts()) for n in range(1, 11)]
    assert got == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_exact_small_counts():
    got = [C.count_compositions(n, C.ExactSmall(2, 1)) for n in range(1, 11)]
    assert got == [1, 0, 2, 2, 5, 8, 15, 26, 46, 80]
    # m = 0 reduces to the min-part class
    for n in range(0, 12):
        assert C.count_compositions(n, C.ExactSmall(3, 0)) == C.count_compositions(
            n, C.MinPart(3)
        )


def test_guard_predicate_examples():
    # a small part counts only when fenced: predecessor >= k and the
    # successor is the final part or exceeds k
    assert C.is_guarded((2, 1, 2), 2)
    assert C.is_guarded((2, 1, 3, 1, 2), 2)
    assert not C.is_guarded((1, 2, 2), 2)       # starts small
    assert not C.is_guarded((2, 2, 1), 2)       # small part is last
    assert not C.is_guarded((2, 1, 1, 2), 2)    # successor small, not final
    assert not C.is_guarded((2, 1, 2, 1, 2, 2), 2)  # non-final successor == k


def test_guarded_small_members():
    got = list(C.enumerate_compositions(5, C.GuardedSmall(2, 1)))
    assert got == [C.Composition((2, 1, 2))]
    got = list(C.enumerate_compositions(6, C.GuardedSmall(2, 1)))
    assert got == [C.Composition((2, 1, 3)), C.Composition((3, 1, 2))]
    got = list(C.enumerate_compositions(9, C.GuardedSmall(2, 2)))
    assert got == [C.Composition((2, 1, 3, 1, 2))]


def test_guarded_small_counts():
    got = [C.count_compositions(n, C.GuardedSmall(2, 1)) for n in range(1, 13)]
    assert got == [0, 0, 0, 0, 1, 2, 4, 8, 15, 28, 51, 92]


def test_mod_one_except_members():
    got = list(C.enumerate_compositions(4, C.ModOneExcept(2, 1)))
    assert got == [C.Composition((4,))]
    got = [C.count_compositions(n, C.ModOneExcept(3, 1)) for n in range(1, 13)]
    assert got == [0, 0, 0, 0, 1, 3, 5, 8, 14, 24, 39, 63]


def test_signed_count_distinct_prefix():
    got = [C.signed_count_distinct(n) for n in range(10)]
    assert got == [1, -1, -1, 1, 1, 3, -3, -1, -7, -11]


@given(st.integers(0, 12))
def test_enumeration_is_sorted_and_unique(n):
    seen = list(C.enumerate_compositions(n, C.All()))
    assert seen == sorted(set(seen))
    assert all(c.size == n for c in seen)


@given(st.integers(0, 12), st.integers(1, 4))
def test_enumeration_respects_class(n, k):
    for cls in (C.MinPart(k), C.ExactSmall(k, 1), C.GuardedSmall(k, 1)):
        for c in C.enumerate_compositions(n, cls):
            assert cls.contains(c.parts)


@given(st.integers(0, 12), st.integers(1, 4))
def test_signed_count_totals(n, k):
    cls = C.MinPart(k)
    sc = C.signed_count(n, cls)
    assert sc.total == C.count_compositions(n, cls)
    assert sc.diff == sc.odd_count - sc.even_count


@given(st.integers(1, 10), st.integers(1, 3), st.integers(0, 2))
def test_small_part_classes_partition_min_part_complement(n, k, m):
    # exact-small classes with m = 0, 1, 2, ... stratify all compositions
    total = sum(
        C.count_compositions(n, C.ExactSmall(k, mm)) for mm in range(n + 1)
    )
    assert total == C.count_compositions(n, C.All())
    # and each guarded class sits inside the matching exact-small class
    guarded = set(C.enumerate_compositions(n, C.GuardedSmall(k, m)))
    exact = set(C.enumerate_compositions(n, C.ExactSmall(k, m)))
    assert guarded <= exact
