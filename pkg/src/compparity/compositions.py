"""Exhaustive enumeration of compositions with restricted parts.

A composition of n is an ordered tuple of positive integers summing to n;
the empty composition is the unique composition of 0.  Each restriction
class pairs a membership predicate (``contains``) with a pruned recursive
generator (``iter_parts``); the test suite checks the two against each
other, and the enumeration here is the ground truth against which every
closed formula, generating function and bijection in this package is
verified.

Enumeration order is lexicographic on part tuples, so golden outputs are
stable.  Signed counting tracks length parity: ``SignedCount.diff`` is the
number of odd-length members minus the number of even-length members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered tuple of positive integer parts; sorts lexicographically."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, p in enumerate(self.parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"part {p!r} at index {i} is not a positive integer")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class SignedCount:
    """Counts of odd-length and even-length members of a finite class."""

    odd_count: int
    even_count: int

    @property
    def diff(self) -> int:
        """Odd-length count minus even-length count."""
        return self.odd_count - self.even_count

    @property
    def total(self) -> int:
        return self.odd_count + self.even_count


class CompositionClass:
    """Base class for part restrictions.

    Subclasses supply ``contains`` (a direct predicate on part tuples) and
    ``iter_parts`` (a generator over all members of given size, in
    lexicographic order, each exactly once).
    """

    def contains(self, parts: tuple[int, ...]) -> bool:
        raise NotImplementedError

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        raise NotImplementedError


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"composition size must be >= 0, got {n}")


def _iter_progression(n: int, start: int, step: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n with parts in {start, start+step, ...}, lex order."""
    if n == 0:
        yield ()
        return
    for first in range(start, n + 1, step):
        for rest in _iter_progression(n - first, start, step):
            yield (first,) + rest


@dataclass(frozen=True)
class All(CompositionClass):
    """No restriction: all 2^(n-1) compositions of n >= 1."""

    def contains(self, parts: tuple[int, ...]) -> bool:
        return True

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_progression(n, 1, 1)


@dataclass(frozen=True)
class MinPart(CompositionClass):
    """Every part at least k."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"MinPart requires k >= 1, got k={self.k}")

    def contains(self, parts: tuple[int, ...]) -> bool:
        return all(p >= self.k for p in parts)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_progression(n, self.k, 1)


@dataclass(frozen=True)
class MinPartCongruent(CompositionClass):
    """Every part at least k and congruent to k+s modulo r.

    With 0 <= s < r the allowed part values are exactly
    {k+s, k+s+r, k+s+2r, ...}.
    """

    k: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"MinPartCongruent requires k >= 1, got k={self.k}")
        if self.r < 1:
            raise ValueError(f"MinPartCongruent requires r >= 1, got r={self.r}")
        if not 0 <= self.s < self.r:
            raise ValueError(
                f"MinPartCongruent requires 0 <= s < r, got s={self.s}, r={self.r}"
            )

    def contains(self, parts: tuple[int, ...]) -> bool:
        k, r, s = self.k, self.r, self.s
        return all(p >= k and p % r == (k + s) % r for p in parts)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_progression(n, self.k + self.s, self.r)


@dataclass(frozen=True)
class OddParts(CompositionClass):
    """Every part odd."""

    def contains(self, parts: tuple[int, ...]) -> bool:
        return all(p % 2 == 1 for p in parts)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_progression(n, 1, 2)


@dataclass(frozen=True)
class DistinctParts(CompositionClass):
    """All parts pairwise distinct."""

    def contains(self, parts: tuple[int, ...]) -> bool:
        return len(set(parts)) == len(parts)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)

        def rec(rem: int, used: frozenset[int]) -> Iterator[tuple[int, ...]]:
            if rem == 0:
                yield ()
                return
            for first in range(1, rem + 1):
                if first in used:
                    continue
                for rest in rec(rem - first, used | {first}):
                    yield (first,) + rest

        return rec(n, frozenset())


@dataclass(frozen=True)
class ExactSmall(CompositionClass):
    """Exactly m parts strictly less than k (the remaining parts are >= k)."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"ExactSmall requires k >= 1, got k={self.k}")
        if self.m < 0:
            raise ValueError(f"ExactSmall requires m >= 0, got m={self.m}")

    def contains(self, parts: tuple[int, ...]) -> bool:
        return sum(1 for p in parts if p < self.k) == self.m

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_exact_small(n, self.k, self.m)


def _iter_exact_small(n: int, k: int, m: int) -> Iterator[tuple[int, ...]]:
    # prune as soon as the small-part budget m is overdrawn
    if n == 0:
        if m == 0:
            yield ()
        return
    for first in range(1, n + 1):
        m2 = m - 1 if first < k else m
        if m2 < 0:
            continue
        for rest in _iter_exact_small(n - first, k, m2):
            yield (first,) + rest


def is_guarded(parts: tuple[int, ...], k: int) -> bool:
    """True when every part < k sits in a guarded position.

    A part < k at index i is guarded when it is preceded by a part >= k
    and has a successor which is either the final part of the composition
    or exceeds k.  In particular a small part can never open or close the
    composition.
    """
    last = len(parts) - 1
    for i, p in enumerate(parts):
        if p >= k:
            continue
        if i == 0 or parts[i - 1] < k:
            return False
        if i == last:
            return False
        if i + 1 != last and parts[i + 1] <= k:
            return False
    return True


@dataclass(frozen=True)
class GuardedSmall(CompositionClass):
    """Exactly m parts < k, each of them guarded (see ``is_guarded``)."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"GuardedSmall requires k >= 1, got k={self.k}")
        if self.m < 0:
            raise ValueError(f"GuardedSmall requires m >= 0, got m={self.m}")

    def contains(self, parts: tuple[int, ...]) -> bool:
        small = sum(1 for p in parts if p < self.k)
        return small == self.m and is_guarded(parts, self.k)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        k = self.k
        return (c for c in _iter_exact_small(n, k, self.m) if is_guarded(c, k))


@dataclass(frozen=True)
class ModOneExcept(CompositionClass):
    """Parts congruent to 1 mod k, except exactly m parts, each > k.

    The m exceptional parts must both exceed k and lie outside the residue
    class 1 mod k.
    """

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"ModOneExcept requires k >= 1, got k={self.k}")
        if self.m < 0:
            raise ValueError(f"ModOneExcept requires m >= 0, got m={self.m}")

    def contains(self, parts: tuple[int, ...]) -> bool:
        k = self.k
        bad = [p for p in parts if p % k != 1 % k]
        return len(bad) == self.m and all(p > k for p in bad)

    def iter_parts(self, n: int) -> Iterator[tuple[int, ...]]:
        _check_size(n)
        return _iter_mod_one_except(n, self.k, self.m)


def _iter_mod_one_except(n: int, k: int, m: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if m == 0:
            yield ()
        return
    res = 1 % k
    for first in range(1, n + 1):
        if first % k == res:
            m2 = m
        elif first > k and m > 0:
            m2 = m - 1
        else:
            continue
        for rest in _iter_mod_one_except(n - first, k, m2):
            yield (first,) + rest


def enumerate_compositions(n: int, cls: CompositionClass) -> list[Composition]:
    """All compositions of n in the class, lexicographic, each once."""
    return [Composition(parts) for parts in cls.iter_parts(n)]


def count_compositions(n: int, cls: CompositionClass) -> int:
    total = 0
    for _ in cls.iter_parts(n):
        total += 1
    return total


def signed_count(n: int, cls: CompositionClass) -> SignedCount:
    """Tally members of the class by length parity, exhaustively.

    The empty composition of 0 has length 0 and counts as even, so
    ``signed_count(0, All()).diff == -1``.
    """
    odd = even = 0
    for parts in cls.iter_parts(n):
        if len(parts) % 2:
            odd += 1
        else:
            even += 1
    return SignedCount(odd, even)


def signed_count_distinct(n: int) -> int:
    """Even-length minus odd-length count over distinct-part compositions.

    Note the reversed orientation relative to ``SignedCount.diff``; this is
    the convention OEIS A339435 uses, with value 1 at n = 0.
    """
    sc = signed_count(n, DistinctParts())
    return sc.even_count - sc.odd_count
