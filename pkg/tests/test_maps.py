"""Part-rewriting bijections: round trips, laws, image characterization."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compparity import compositions as C
from compparity import maps as M


def test_shrink_grow_example():
    c = C.Composition((4, 2, 3))
    d = M.shrink_parts(c, 2)
    assert d == C.Composition((3, 1, 2))
    assert M.grow_parts(d, 2) == c


def test_shrink_validates_parts():
    with pytest.raises(ValueError, match="index 1"):
        M.shrink_parts(C.Composition((4, 1, 3)), 2)


def test_shrink_grow_round_trip_exhaustive():
    for k in range(1, 7):
        for n in range(k, 19):
            for c in C.enumerate_compositions(n, C.MinPart(k)):
                d = M.shrink_parts(c, k)
                assert d.length == c.length
                assert d.size == c.size - (k - 1) * c.length
                assert M.grow_parts(d, k) == c


def test_shrink_image_is_all_compositions():
    # parts >= k of n+k-1 with length L map onto parts >= 1 of
    # n+k-1-L(k-1) with length L; over all L the images tile the target
    k, n = 3, 9
    image = {M.shrink_parts(c, k).parts for c in C.enumerate_compositions(n + k - 1, C.MinPart(k))}
    target = set()
    for length in range(0, n + k):
        total = n + k - 1 - length * (k - 1)
        if total < length:
            continue
        # stars and bars: distribute total over length positive slots
        if length == 0:
            if total == 0:
                target.add(())
            continue
        for cuts in itertools.combinations(range(1, total), length - 1):
            bounds = (0,) + cuts + (total,)
            target.add(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    assert image == target


def test_stars_and_bars_matches_enumeration():
    for n in range(0, 13):
        by_len = {}
        for c in C.enumerate_compositions(n, C.All()):
            by_len[c.length] = by_len.get(c.length, 0) + 1
        for length in range(0, n + 2):
            assert M.stars_and_bars_count(n, length) == by_len.get(length, 0)


def test_compress_expand_round_trip():
    for r in range(1, 5):
        for s in range(0, r):
            for k in range(1, 5):
                for n in range(1, 15):
                    cls = C.MinPartCongruent(k, r, s)
                    for c in C.enumerate_compositions(n + k - 1, cls):
                        d = M.compress_congruent(c, k, r, s)
                        assert d.length == c.length
                        assert M.expand_congruent(d, k, r, s) == c


def test_compress_validates_residue():
    with pytest.raises(ValueError, match="index 0"):
        M.compress_congruent(C.Composition((4,)), 2, 3, 1)


@given(st.lists(st.integers(1, 9), max_size=7), st.integers(1, 5))
def test_grow_then_shrink_is_identity(parts, k):
    c = C.Composition(tuple(parts))
    grown = M.grow_parts(c, k)
    assert all(p >= k for p in grown.parts)
    assert M.shrink_parts(grown, k) == c


def test_length_parity_preserved():
    # both bijections keep length, hence length parity; signed counts
    # transport across them unchanged
    k = 3
    for n in range(1, 16):
        sc_big = C.signed_count(n + k - 1, C.MinPart(k))
        small = [M.shrink_parts(c, k) for c in C.enumerate_compositions(n + k - 1, C.MinPart(k))]
        diff = sum(1 if d.length % 2 else -1 for d in small)
        assert diff == sc_big.diff
