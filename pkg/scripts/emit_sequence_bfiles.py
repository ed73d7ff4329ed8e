#!/usr/bin/env python3
"""Emit b-files for the named sequences into an output directory.

Covers the standard set (min-part signed/unsigned rows, congruence
classes, guarded and exact small-part rows, distinct compositions,
odd-part partitions, Legendre deltas) plus two OEIS alignment candidates
whose offsets could not be pinned down from published data; those two
carry a warning header and are meant for eyeball comparison, not as
regression fixtures.
"""

import argparse
import pathlib
import sys

from compparity import compositions as C
from compparity import formulas as F
from compparity import partition_theorems as PT
from compparity import sequences as Q


def standard_files(terms: int):
    yield (
        "minpart2_signed.txt",
        "Odd-length minus even-length compositions of n+1 with parts >= 2.",
        1,
        [F.min_part_signed(2, n) for n in range(1, terms + 1)],
    )
    yield (
        "minpart3_signed.txt",
        "Odd-length minus even-length compositions of n+2 with parts >= 3.",
        1,
        [F.min_part_signed(3, n) for n in range(1, terms + 1)],
    )
    yield (
        "minpart2_count.txt",
        "Compositions of n+1 with parts >= 2 (Fibonacci numbers).",
        1,
        [F.min_part_count(2, n) for n in range(1, terms + 1)],
    )
    yield (
        "congruent_2mod3_signed.txt",
        "Signed compositions of n+1, parts >= 2 and congruent to 0 mod 3.",
        1,
        [F.congruent_signed(2, n, 3, 1) for n in range(1, terms + 1)],
    )
    yield (
        "guarded_k2_m1_signed.txt",
        "Signed compositions of n+1 with exactly one guarded part below 2.",
        1,
        [F.guarded_signed_boxed(2, n, 1) for n in range(1, terms + 1)],
    )
    yield (
        "smallparts_k2_m1_signed.txt",
        "Signed compositions of n+1 with exactly one part below 2.",
        1,
        [F.small_parts_signed(2, n, 1) for n in range(1, terms + 1)],
    )
    yield (
        "distinct_compositions_signed.txt",
        "Even-length minus odd-length compositions into distinct parts (OEIS A339435).",
        0,
        [C.signed_count_distinct(n) for n in range(terms)],
    )
    yield (
        "odd_partitions_signed.txt",
        "Even-length minus odd-length partitions into odd parts (OEIS A081360).",
        0,
        [PT.odd_parts_signed(n) for n in range(terms)],
    )
    yield (
        "legendre_delta.txt",
        "Even minus odd distinct partitions (Legendre/pentagonal deltas).",
        0,
        [PT.legendre_closed(n) for n in range(terms)],
    )


def candidate_files(terms: int):
    # offsets here are guesses; compare by eye before trusting an alignment
    yield (
        "candidate_a281862.txt",
        "CANDIDATE alignment for OEIS A281862: signed compositions of n+1 with "
        "exactly two guarded parts below 2; offset not confirmed.",
        1,
        [F.guarded_signed_boxed(2, n, 2) for n in range(1, terms + 1)],
    )
    yield (
        "candidate_a122918.txt",
        "CANDIDATE alignment for OEIS A122918: signed compositions of n with "
        "exactly two parts below 1; identically zero, so the match is dubious.",
        1,
        [F.small_parts_signed(1, n, 2) for n in range(1, terms + 1)],
    )


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("bfiles"))
    ap.add_argument("--terms", type=int, default=60)
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    count = 0
    for name, blurb, offset, values in list(standard_files(args.terms)) + list(
        candidate_files(args.terms)
    ):
        path = args.out / name
        header = f"# {blurb}\n"
        path.write_text(header + Q.emit_bfile(values, offset), encoding="ascii")
        print(f"wrote {path} ({len(values)} terms)")
        count += 1
    print(f"{count} files in {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
