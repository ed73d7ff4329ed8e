"""Command line interface.

Subcommands: count, signed, formula, series, verify, period, bfile.
Exit codes: 0 success, 1 verification or comparison failure, 2 usage or
parameter error.  ``--format plain|csv|bfile`` selects rendering; bfile
rendering only applies to univariate series output.

Formula and verify subcommands index theorems by n while the underlying
composition class lives on size n+k-1; a note restating the actual size
is printed to stderr so stdout stays scriptable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from compparity import compositions, formulas, partition_theorems, sequences, series
from compparity.verify import CHECK_NAMES, SweepConfig, render_report, run_check

CLASS_NAMES = (
    "all",
    "minpart",
    "congruent",
    "distinct",
    "odd",
    "small",
    "guarded",
    "modone",
)


def _require(args: argparse.Namespace, names: tuple[str, ...], context: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"{context} requires {', '.join(missing)}")


def _build_class(args: argparse.Namespace) -> compositions.CompositionClass:
    name = args.class_name
    if name == "all":
        return compositions.All()
    if name == "minpart":
        _require(args, ("k",), "class 'minpart'")
        return compositions.MinPart(args.k)
    if name == "congruent":
        _require(args, ("k", "r", "s"), "class 'congruent'")
        return compositions.MinPartCongruent(args.k, args.r, args.s)
    if name == "distinct":
        return compositions.DistinctParts()
    if name == "odd":
        return compositions.OddParts()
    if name == "small":
        _require(args, ("k", "m"), "class 'small'")
        return compositions.ExactSmall(args.k, args.m)
    if name == "guarded":
        _require(args, ("k", "m"), "class 'guarded'")
        return compositions.GuardedSmall(args.k, args.m)
    if name == "modone":
        _require(args, ("k", "m"), "class 'modone'")
        return compositions.ModOneExcept(args.k, args.m)
    raise ValueError(f"unknown class {name!r}; known: {', '.join(CLASS_NAMES)}")


# ---------------------------------------------------------------------------
# named formulas and sequences
# ---------------------------------------------------------------------------

def _formula_value(args: argparse.Namespace) -> tuple[int, str]:
    """Evaluate the named formula; returns (value, stderr note)."""
    name, n = args.name, args.n
    if name == "thm2":
        _require(args, ("k", "n"), "formula thm2")
        k = args.k
        note = f"n={n}, k={k}: signed compositions of {n + k - 1} with parts >= {k}"
        return formulas.min_part_signed(k, n), note
    if name == "munagi":
        _require(args, ("k", "n"), "formula munagi")
        k = args.k
        note = f"n={n}, k={k}: compositions of {n + k - 1} with parts >= {k}"
        return formulas.min_part_count(k, n), note
    if name == "thm3":
        _require(args, ("k", "r", "s", "n"), "formula thm3")
        k, r, s = args.k, args.r, args.s
        note = (
            f"n={n}, k={k}: signed compositions of {n + k - 1} with parts >= {k} "
            f"congruent to {k + s} mod {r}"
        )
        return formulas.congruent_signed(k, n, r, s), note
    if name == "cor-rs":
        _require(args, ("r", "s", "n"), "formula cor-rs")
        r, s = args.r, args.s
        k = args.k if args.k is not None else r - s
        note = f"n={n}, k={k}=r-s: class on size {n + k - 1}"
        return formulas.congruent_indicator(k, n, r, s), note
    if name == "cor-period":
        _require(args, ("r", "s", "n"), "formula cor-period")
        r, s = args.r, args.s
        k = args.k if args.k is not None else 2 * r - s
        note = f"n={n}, k={k}=2r-s: class on size {n + k - 1}, period {6 * r}"
        return formulas.congruent_periodic(k, n, r, s), note
    if name == "thm4":
        _require(args, ("k", "m", "n"), "formula thm4")
        k, m = args.k, args.m
        note = (
            f"n={n}, k={k}: signed compositions of {n + k - 1} with exactly {m} "
            f"guarded parts < {k}"
        )
        if k >= 2:
            return formulas.guarded_signed_boxed(k, n, m), note
        return formulas.guarded_signed_sum(k, n, m), note
    if name == "thm4a":
        _require(args, ("k", "m", "n"), "formula thm4a")
        k, m = args.k, args.m
        note = (
            f"n={n}, k={k}: compositions of {n + k - 1} with exactly {m} guarded "
            f"parts < {k} (equivalently of {n} with {m} parts > {k} not 1 mod {k})"
        )
        if k >= 2:
            return formulas.guarded_count_boxed(k, n, m), note
        return formulas.guarded_count_sum(k, n, m), note
    if name == "thm4bar":
        _require(args, ("k", "m", "n"), "formula thm4bar")
        k, m = args.k, args.m
        note = (
            f"n={n}, k={k}: signed compositions of {n + k - 1} with exactly {m} "
            f"parts < {k}"
        )
        return formulas.small_parts_signed(k, n, m), note
    raise ValueError(f"unknown formula {name!r}")


def _seq_values(args: argparse.Namespace, first: int, last: int) -> list[int]:
    """Terms of the named sequence for indices first..last (inclusive)."""
    name = args.seq
    if last < first:
        raise ValueError(f"empty index range {first}..{last}")

    def over(fn: Callable[[int], int], lo: int) -> list[int]:
        if first < lo:
            raise ValueError(
                f"sequence {name!r} starts at index {lo}, requested {first}"
            )
        return [fn(i) for i in range(first, last + 1)]

    if name == "thm2":
        _require(args, ("k",), "sequence thm2")
        return over(lambda n: formulas.min_part_signed(args.k, n), 1)
    if name == "munagi":
        _require(args, ("k",), "sequence munagi")
        return over(lambda n: formulas.min_part_count(args.k, n), 1)
    if name == "thm3":
        _require(args, ("k", "r", "s"), "sequence thm3")
        return over(lambda n: formulas.congruent_signed(args.k, n, args.r, args.s), 1)
    if name == "cor-rs":
        _require(args, ("r", "s"), "sequence cor-rs")
        k = args.k if args.k is not None else args.r - args.s
        return over(lambda n: formulas.congruent_indicator(k, n, args.r, args.s), 1)
    if name == "cor-period":
        _require(args, ("r", "s"), "sequence cor-period")
        k = args.k if args.k is not None else 2 * args.r - args.s
        return over(lambda n: formulas.congruent_periodic(k, n, args.r, args.s), 1)
    if name == "thm4":
        _require(args, ("k", "m"), "sequence thm4")
        if args.k >= 2:
            return over(lambda n: formulas.guarded_signed_boxed(args.k, n, args.m), 1)
        return over(lambda n: formulas.guarded_signed_sum(args.k, n, args.m), 1)
    if name == "thm4a":
        _require(args, ("k", "m"), "sequence thm4a")
        if args.k >= 2:
            return over(lambda n: formulas.guarded_count_boxed(args.k, n, args.m), 1)
        return over(lambda n: formulas.guarded_count_sum(args.k, n, args.m), 1)
    if name == "thm4bar":
        _require(args, ("k", "m"), "sequence thm4bar")
        return over(lambda n: formulas.small_parts_signed(args.k, n, args.m), 1)
    if name == "distinct":
        return over(compositions.signed_count_distinct, 0)
    if name == "odd-parts":
        return over(partition_theorems.odd_parts_signed, 0)
    if name == "legendre":
        return over(partition_theorems.legendre_closed, 0)
    raise ValueError(f"unknown sequence {name!r}")


_SEQ_OFFSETS = {
    "thm2": 1,
    "munagi": 1,
    "thm3": 1,
    "cor-rs": 1,
    "cor-period": 1,
    "thm4": 1,
    "thm4a": 1,
    "thm4bar": 1,
    "distinct": 0,
    "odd-parts": 0,
    "legendre": 0,
}


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _no_bfile(args: argparse.Namespace) -> None:
    if args.fmt == "bfile":
        raise ValueError("--format bfile only applies to univariate series output")


def _cmd_count(args: argparse.Namespace) -> int:
    _no_bfile(args)
    cls = _build_class(args)
    value = compositions.count_compositions(args.n, cls)
    if args.fmt == "csv":
        print("class,n,count")
        print(f"{args.class_name},{args.n},{value}")
    else:
        print(value)
    return 0


def _cmd_signed(args: argparse.Namespace) -> int:
    _no_bfile(args)
    cls = _build_class(args)
    sc = compositions.signed_count(args.n, cls)
    if args.fmt == "csv":
        print("class,n,odd,even,diff")
        print(f"{args.class_name},{args.n},{sc.odd_count},{sc.even_count},{sc.diff}")
    else:
        print(f"odd={sc.odd_count} even={sc.even_count} diff={sc.diff}")
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    _no_bfile(args)
    value, note = _formula_value(args)
    print(f"note: {note}", file=sys.stderr)
    if args.fmt == "csv":
        flags = {f: getattr(args, f) for f in ("k", "r", "s", "m")}
        cols = ",".join("" if v is None else str(v) for v in flags.values())
        print("name,k,r,s,m,n,value")
        print(f"{args.name},{cols},{args.n},{value}")
    else:
        print(value)
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    name, order = args.name, args.order
    if order < 0:
        raise ValueError(f"--order must be >= 0, got {order}")
    if name == "thm4bar":
        _require(args, ("k",), "series thm4bar")
        y_order = args.y_order if args.y_order is not None else 3
        bs = series.small_parts_series(args.k, order, y_order)
        if args.fmt == "csv":
            print("x,y,coefficient")
            for a in range(bs.x_order + 1):
                for b in range(bs.y_order + 1):
                    print(f"{a},{b},{bs.coeffs[a][b]}")
        elif args.fmt == "bfile":
            raise ValueError("--format bfile only applies to univariate series output")
        else:
            for b in range(bs.y_order + 1):
                print(f"y^{b}: " + ",".join(str(c) for c in bs.y_slice(b).coeffs))
        return 0

    if name == "thm2":
        _require(args, ("k",), "series thm2")
        ts = series.min_part_series(args.k, order)
    elif name == "thm3":
        _require(args, ("k", "r", "s"), "series thm3")
        ts = series.congruent_series(args.k, args.r, args.s, order)
    elif name == "cor-period":
        _require(args, ("r",), "series cor-period")
        ts = series.periodic_series(args.r, order)
    elif name == "pentagonal":
        ts = series.pentagonal_product(order)
    elif name == "rational":
        _require(args, ("num", "den"), "series rational")
        num = series.IntPolynomial(tuple(int(t) for t in args.num.split(",")))
        den = series.IntPolynomial(tuple(int(t) for t in args.den.split(",")))
        ts = series.expand_rational(num, den, order)
    else:
        raise ValueError(f"unknown series {name!r}")

    if args.fmt == "csv":
        print("index,coefficient")
        for i, c in enumerate(ts.coeffs):
            print(f"{i},{c}")
    elif args.fmt == "bfile":
        sys.stdout.write(sequences.emit_bfile(ts.coeffs, 0))
    else:
        print(",".join(str(c) for c in ts.coeffs))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _no_bfile(args)
    config = SweepConfig(
        max_n=args.max_n,
        max_k=args.max_k,
        max_r=args.max_r,
        max_m=args.max_m,
        jobs=args.jobs,
    )
    report = run_check(args.name, config)
    sys.stdout.write(render_report(report, args.fmt))
    return 0 if report.passed else 1


def _cmd_period(args: argparse.Namespace) -> int:
    _no_bfile(args)
    offset = _SEQ_OFFSETS.get(args.seq)
    if offset is None:
        raise ValueError(f"unknown sequence {args.seq!r}")
    vals = _seq_values(args, offset, args.max_n)
    found = sequences.detect_period(vals)
    if args.fmt == "csv":
        print("preperiod,period")
        if found is None:
            print("aperiodic,aperiodic")
        else:
            print(f"{found[0]},{found[1]}")
    else:
        if found is None:
            print(f"aperiodic within window of {len(vals)} terms")
        else:
            print(f"preperiod={found[0]} period={found[1]}")
    return 0


def _cmd_bfile(args: argparse.Namespace) -> int:
    offset = args.offset
    if offset is None:
        offset = _SEQ_OFFSETS.get(args.seq)
        if offset is None:
            raise ValueError(f"unknown sequence {args.seq!r}")

    if args.action == "emit":
        if args.max_n is None:
            raise ValueError("bfile emit requires --max-n (last index to emit)")
        natural = _SEQ_OFFSETS.get(args.seq)
        if natural is None:
            raise ValueError(f"unknown sequence {args.seq!r}")
        count = args.max_n - offset + 1
        vals = _seq_values(args, natural, natural + count - 1)
        text = sequences.emit_bfile(vals, offset)
        if args.file:
            with open(args.file, "w", encoding="ascii") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    # check
    if not args.file:
        raise ValueError("bfile check requires --file")
    with open(args.file, "r", encoding="ascii") as fh:
        record = sequences.parse_bfile(fh.read())
    natural = _SEQ_OFFSETS.get(args.seq)
    if natural is None:
        raise ValueError(f"unknown sequence {args.seq!r}")
    count = record.last_index - offset + 1
    if count < 1:
        raise ValueError(
            f"file indices end at {record.last_index}, before offset {offset}"
        )
    vals = _seq_values(args, natural, natural + count - 1)
    seq = sequences.IntegerSequence(offset, tuple(vals))
    report = sequences.compare(seq, record)
    print(report.describe())
    return 0 if report.matched else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="fmt",
        choices=("plain", "csv", "bfile"),
        default="plain",
        help="output rendering",
    )
    for flag in ("k", "r", "s", "m"):
        common.add_argument(f"--{flag}", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="compparity",
        description=(
            "Length-parity counting of compositions and partitions with "
            "restricted parts: enumeration, closed formulas, generating "
            "functions and verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count a composition class")
    p.add_argument("--class", dest="class_name", required=True, choices=CLASS_NAMES)
    p.add_argument("--n", type=int, required=True, help="composition size")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser(
        "signed", parents=[common], help="odd/even length tallies for a class"
    )
    p.add_argument("--class", dest="class_name", required=True, choices=CLASS_NAMES)
    p.add_argument("--n", type=int, required=True, help="composition size")
    p.set_defaults(handler=_cmd_signed)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed formula")
    p.add_argument(
        "name",
        choices=(
            "thm2",
            "munagi",
            "thm3",
            "cor-rs",
            "cor-period",
            "thm4",
            "thm4a",
            "thm4bar",
        ),
    )
    p.add_argument("--n", type=int, required=True, help="formula index n")
    p.set_defaults(handler=_cmd_formula)

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument(
        "name", choices=("thm2", "thm3", "cor-period", "thm4bar", "pentagonal", "rational")
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--y-order", type=int, default=None)
    p.add_argument("--num", type=str, default=None, help="comma-separated coefficients")
    p.add_argument("--den", type=str, default=None, help="comma-separated coefficients")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("name", choices=CHECK_NAMES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("period", parents=[common], help="detect a period")
    p.add_argument("--seq", required=True, choices=tuple(_SEQ_OFFSETS))
    p.add_argument("--max-n", type=int, required=True, help="last index of the window")
    p.set_defaults(handler=_cmd_period)

    p = sub.add_parser("bfile", parents=[common], help="emit or check b-files")
    p.add_argument("action", choices=("emit", "check"))
    p.add_argument("--seq", required=True, choices=tuple(_SEQ_OFFSETS))
    p.add_argument("--offset", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None, help="last index to emit")
    p.add_argument("--file", type=str, default=None)
    p.set_defaults(handler=_cmd_bfile)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
