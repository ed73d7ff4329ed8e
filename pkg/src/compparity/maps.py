"""Bijections behind the signed count formulas.

Both maps act part by part and preserve length, which is why they carry
the length parity along.  Preconditions are checked eagerly; violations
report the offending part index.
"""

from __future__ import annotations

from compparity.compositions import Composition
from compparity.formulas import binomial


def shrink_parts(c: Composition, k: int) -> Composition:
    """Subtract k-1 from each part of a composition with parts >= k.

    Sends a length-l composition of N to a length-l composition of
    N - l(k-1) with parts >= 1.  Inverse of ``grow_parts``.
    """
    if k < 1:
        raise ValueError(f"requires k >= 1, got k={k}")
    for i, p in enumerate(c.parts):
        if p < k:
            raise ValueError(f"part {p} at index {i} is below the minimum {k}")
    return Composition(tuple(p - (k - 1) for p in c.parts))


def grow_parts(c: Composition, k: int) -> Composition:
    """Add k-1 to each part; inverse of ``shrink_parts``."""
    if k < 1:
        raise ValueError(f"requires k >= 1, got k={k}")
    return Composition(tuple(p + (k - 1) for p in c.parts))


def compress_congruent(c: Composition, k: int, r: int, s: int) -> Composition:
    """Send each part p (>= k and = k+s mod r) to (p - (k+s-r)) / r.

    The allowed parts k+s, k+s+r, k+s+2r, ... map to 1, 2, 3, ..., so the
    image is an unrestricted composition.  Inverse of ``expand_congruent``.
    """
    _check_map_params(k, r, s)
    for i, p in enumerate(c.parts):
        if p < k:
            raise ValueError(f"part {p} at index {i} is below the minimum {k}")
        if p % r != (k + s) % r:
            raise ValueError(
                f"part {p} at index {i} is not congruent to {k + s} mod {r}"
            )
    return Composition(tuple((p - (k + s - r)) // r for p in c.parts))


def expand_congruent(c: Composition, k: int, r: int, s: int) -> Composition:
    """Send each part q >= 1 to r*q + k+s-r; inverse of ``compress_congruent``."""
    _check_map_params(k, r, s)
    return Composition(tuple(r * q + k + s - r for q in c.parts))


def _check_map_params(k: int, r: int, s: int) -> None:
    if k < 1:
        raise ValueError(f"requires k >= 1, got k={k}")
    if r < 1 or not 0 <= s < r:
        raise ValueError(f"requires 0 <= s < r and r >= 1, got r={r}, s={s}")


def stars_and_bars_count(n: int, length: int) -> int:
    """Number of compositions of n with exactly ``length`` parts: C(n-1, length-1)."""
    if n < 0 or length < 0:
        raise ValueError(f"requires n >= 0 and length >= 0, got n={n}, length={length}")
    if n == 0:
        return 1 if length == 0 else 0
    return binomial(n - 1, length - 1)
