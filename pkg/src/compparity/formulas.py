"""Closed formulas for signed and unsigned restricted-composition counts.

Every formula here is an exact integer expression (alternating binomial
sums, bounded diophantine sums, multinomial specializations).  The
conventions are deliberate and fixed:

* ``binomial(a, b)`` is the combinatorial convention: 1 when b = 0 for any
  a (including negative a), 0 when b < 0, b > a >= 0, or a < 0 with b > 0.
  Generalized binomials with negative upper index are never used.
* Index n is the formula index; the underlying composition class lives on
  size n + k - 1.  Signed values are odd-length minus even-length.
* Diophantine index sets are swept by direct bounded iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


def binomial(a: int, b: int) -> int:
    """Binomial coefficient under the combinatorial convention (see module doc)."""
    if b == 0:
        return 1
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_kn(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"requires k >= 1, got k={k}")
    if n < 1:
        raise ValueError(f"requires n >= 1, got n={n}")


def _check_rs(r: int, s: int) -> None:
    if r < 1:
        raise ValueError(f"requires r >= 1, got r={r}")
    if not 0 <= s < r:
        raise ValueError(f"requires 0 <= s < r, got s={s}, r={r}")


# ---------------------------------------------------------------------------
# minimum part size k
# ---------------------------------------------------------------------------

def min_part_signed(k: int, n: int) -> int:
    """Signed count of compositions of n+k-1 with parts >= k.

    Alternating sum over 0 <= j <= (n-1)/k of (-1)^j C(n-1-j(k-1), j).
    For k = 2 this is the period-6 sequence 1, 1, 0, -1, -1, 0, ...
    """
    _check_kn(k, n)
    return sum(
        (-1) ** j * binomial(n - 1 - j * (k - 1), j)
        for j in range(0, (n - 1) // k + 1)
    )


def min_part_count(k: int, n: int) -> int:
    """Number of compositions of n+k-1 with parts >= k (Munagi).

    Same binomial sum as ``min_part_signed`` without the alternating sign;
    for k = 2 these are Fibonacci numbers.
    """
    _check_kn(k, n)
    return sum(
        binomial(n - 1 - j * (k - 1), j) for j in range(0, (n - 1) // k + 1)
    )


def min_part_signed_sequence(k: int, count: int) -> list[int]:
    """First ``count`` signed values for fixed k, by the recurrence.

    b(n) = 1 for n <= k and b(n) = b(n-1) - b(n-k) afterwards.
    """
    if k < 1:
        raise ValueError(f"requires k >= 1, got k={k}")
    if count < 0:
        raise ValueError(f"requires count >= 0, got {count}")
    vals: list[int] = []
    for n in range(1, count + 1):
        if n <= k:
            vals.append(1)
        else:
            vals.append(vals[n - 2] - vals[n - 1 - k])
    return vals


# ---------------------------------------------------------------------------
# congruence-restricted parts: >= k and = k+s (mod r)
# ---------------------------------------------------------------------------

def congruent_signed(k: int, n: int, r: int, s: int) -> int:
    """Signed count of compositions of n+k-1 with parts >= k, = k+s (mod r).

    Sum of (-1)^j C(i+j, i) over i, j >= 0 with r*i + j*(k+s) = n-1-s.
    """
    _check_kn(k, n)
    _check_rs(r, s)
    target = n - 1 - s
    if target < 0:
        return 0
    total = 0
    for j in range(0, target // (k + s) + 1):
        rem = target - j * (k + s)
        if rem % r == 0:
            i = rem // r
            total += (-1) ** j * binomial(i + j, i)
    return total


def congruent_indicator(k: int, n: int, r: int, s: int) -> int:
    """Special case k = r-s: the signed count is 1 at n = s+1, else 0."""
    _check_kn(k, n)
    _check_rs(r, s)
    if k != r - s:
        raise ValueError(f"requires k = r - s, got k={k}, r={r}, s={s}")
    return 1 if n == s + 1 else 0


def congruent_periodic(k: int, n: int, r: int, s: int) -> int:
    """Special case k = 2r-s: signed count is (-1)^j at n = 3rj+s+1 and
    n = 3rj+r+s+1, else 0.  The sequence in n has period 6r."""
    _check_kn(k, n)
    _check_rs(r, s)
    if k != 2 * r - s:
        raise ValueError(f"requires k = 2r - s, got k={k}, r={r}, s={s}")
    for base in (s + 1, r + s + 1):
        if n >= base and (n - base) % (3 * r) == 0:
            j = (n - base) // (3 * r)
            return (-1) ** j
    return 0


# ---------------------------------------------------------------------------
# partitions inside a box, and monomial counting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxedPartition:
    """A partition constrained to fit in a width x height box.

    Parts are weakly decreasing, each between 1 and ``width``, with at most
    ``height`` of them.  ``multiplicities()[i]`` counts parts equal to i,
    with index 0 holding the slack height - (number of parts).
    """

    parts: tuple[int, ...]
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 0 or self.height < 0:
            raise ValueError(f"box must be nonnegative, got {self.width}x{self.height}")
        if len(self.parts) > self.height:
            raise ValueError(f"{self.parts} has more than {self.height} parts")
        for i, p in enumerate(self.parts):
            if not 1 <= p <= self.width:
                raise ValueError(f"part {p} at index {i} outside 1..{self.width}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> list[int]:
        mult = [0] * (self.width + 1)
        mult[0] = self.height - len(self.parts)
        for p in self.parts:
            mult[p] += 1
        return mult


def boxed_partitions(width: int, height: int) -> Iterator[BoxedPartition]:
    """All partitions fitting in the box, including the empty one."""
    if width < 0 or height < 0:
        raise ValueError(f"box must be nonnegative, got {width}x{height}")

    def rec(max_part: int, slots: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if slots == 0 or max_part == 0:
            return
        for first in range(max_part, 0, -1):
            for rest in rec(first, slots - 1):
                yield (first,) + rest

    for parts in rec(width, height):
        yield BoxedPartition(parts, width, height)


def monomial_specialization(bp: BoxedPartition) -> int:
    """Number of distinct monomials of shape ``bp`` in ``height`` variables.

    Evaluates the monomial symmetric polynomial m_lambda at height many
    ones: the multinomial height! / (m_0! m_1! ... m_width!).
    """
    mult = bp.multiplicities()
    out = math.factorial(bp.height)
    for c in mult:
        out //= math.factorial(c)
    return out


# ---------------------------------------------------------------------------
# exactly m guarded small parts (class on size n+k-1)
# ---------------------------------------------------------------------------

def guarded_signed_boxed(k: int, n: int, m: int) -> int:
    """Signed count over the guarded class, boxed-partition form.

    Sum over partitions lambda in a (k-2) x m box and i, j >= 0 with
    i + (k+1)m + jk + |lambda| = n of
    (-1)^j C(i, m) C(i+j-1, j) m_lambda(1^m).  Requires k >= 2.
    """
    _check_kn(k, n)
    if k < 2:
        raise ValueError(f"boxed form requires k >= 2, got k={k}")
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    total = 0
    for bp in boxed_partitions(k - 2, m):
        base = (k + 1) * m + bp.size
        if base > n:
            continue
        mono = monomial_specialization(bp)
        for j in range(0, (n - base) // k + 1):
            i = n - base - j * k
            total += (-1) ** j * binomial(i, m) * binomial(i + j - 1, j) * mono
    return total


def guarded_signed_sum(k: int, n: int, m: int) -> int:
    """Signed count over the guarded class, quadruple-sum form.

    Sum of (-1)^(l+j) C(i, m) C(i+j-1, j) C(m, l) C(m+h-1, h) over
    i, j, l, h >= 0 with i + (k+1)m + jk + l(k-1) + h = n and l <= m.
    Valid for all k >= 1; agrees with the boxed form for k >= 2.
    """
    _check_kn(k, n)
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    return _guarded_quadruple(k, n, m, signed=True)


def guarded_count_boxed(k: int, n: int, m: int) -> int:
    """Unsigned count: the boxed form without the (-1)^j factor."""
    _check_kn(k, n)
    if k < 2:
        raise ValueError(f"boxed form requires k >= 2, got k={k}")
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    total = 0
    for bp in boxed_partitions(k - 2, m):
        base = (k + 1) * m + bp.size
        if base > n:
            continue
        mono = monomial_specialization(bp)
        for j in range(0, (n - base) // k + 1):
            i = n - base - j * k
            total += binomial(i, m) * binomial(i + j - 1, j) * mono
    return total


def guarded_count_sum(k: int, n: int, m: int) -> int:
    """Unsigned count: the quadruple-sum form keeping only (-1)^l."""
    _check_kn(k, n)
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    return _guarded_quadruple(k, n, m, signed=False)


def _guarded_quadruple(k: int, n: int, m: int, signed: bool) -> int:
    total = 0
    rem0 = n - (k + 1) * m
    if rem0 < 0:
        return 0
    for j in range(0, rem0 // k + 1):
        rem1 = rem0 - j * k
        for l in range(0, m + 1):
            rem2 = rem1 - l * (k - 1)
            if rem2 < 0:
                break
            cl = binomial(m, l)
            if cl == 0:
                continue
            sign_l = (-1) ** l
            sign = sign_l * (-1) ** j if signed else sign_l
            for i in range(0, rem2 + 1):
                h = rem2 - i
                total += (
                    sign
                    * binomial(i, m)
                    * binomial(i + j - 1, j)
                    * cl
                    * binomial(m + h - 1, h)
                )
    return total


# ---------------------------------------------------------------------------
# exactly m small parts, no guard (class on size n+k-1)
# ---------------------------------------------------------------------------

def small_parts_signed(k: int, n: int, m: int) -> int:
    """Signed count of compositions of n+k-1 with exactly m parts < k.

    Sum of (-1)^(i+l+1) C(i+j-1, j) C(i, m) C(m, l) over i, j >= 0 and
    0 <= l <= m <= i with i + j + (k-1)(l + i - m - 1) = n.
    """
    _check_kn(k, n)
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    total = 0
    i_max = n + (k - 1) * (m + 1)
    for i in range(m, i_max + 1):
        ci = binomial(i, m)
        if ci == 0:
            continue
        for l in range(0, m + 1):
            j = n - i - (k - 1) * (l + i - m - 1)
            if j < 0:
                continue
            total += (
                (-1) ** (i + l + 1)
                * binomial(i + j - 1, j)
                * ci
                * binomial(m, l)
            )
    return total
