"""Named verification sweeps: formula vs enumeration vs series.

Each check sweeps a parameter grid, re-deriving every quantity along
independent routes (closed formula, recurrence, generating function,
exhaustive enumeration) and comparing exactly.  A sweep may run its
instances in a process pool; instances are pure functions of their
parameters and results are reassembled in parameter order, so reports are
byte-identical regardless of scheduling.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

from compparity import compositions, formulas, partition_theorems, series
from compparity.compositions import (
    GuardedSmall,
    MinPart,
    MinPartCongruent,
    ModOneExcept,
    OddParts,
)


@dataclass(frozen=True)
class SweepConfig:
    """Range overrides for a sweep; None keeps the check's default."""

    max_n: int | None = None
    max_k: int | None = None
    max_r: int | None = None
    max_m: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass(frozen=True)
class Counterexample:
    params: tuple[tuple[str, int], ...]
    expected: object
    actual: object
    detail: str = ""

    def describe(self) -> str:
        where = " ".join(f"{k}={v}" for k, v in self.params)
        out = f"{where}: expected {self.expected}, got {self.actual}"
        if self.detail:
            out += f" ({self.detail})"
        return out


@dataclass(frozen=True)
class VerificationReport:
    name: str
    ranges: str
    instances: int
    passed: bool
    counterexample: Counterexample | None

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValueError("failed report must carry a counterexample")
        if self.passed and self.counterexample is not None:
            raise ValueError("passed report must not carry a counterexample")


def render_report(report: VerificationReport, fmt: str = "plain") -> str:
    status = "pass" if report.passed else "fail"
    if fmt == "plain":
        lines = [
            f"check={report.name} ranges=\"{report.ranges}\" "
            f"instances={report.instances} status={status}"
        ]
        if report.counterexample is not None:
            lines.append(f"counterexample: {report.counterexample.describe()}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        ce = (
            report.counterexample.describe().replace(",", ";")
            if report.counterexample
            else ""
        )
        return (
            "name,ranges,instances,status,counterexample\n"
            f"{report.name},\"{report.ranges}\",{report.instances},{status},{ce}\n"
        )
    raise ValueError(f"unsupported report format {fmt!r}")


# ---------------------------------------------------------------------------
# cached heavy intermediates (per process)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _min_part_gf(k: int, order: int) -> tuple[int, ...]:
    return series.min_part_series(k, order).coeffs


@lru_cache(maxsize=None)
def _congruent_gf(k: int, r: int, s: int, order: int) -> tuple[int, ...]:
    return series.congruent_series(k, r, s, order).coeffs


@lru_cache(maxsize=None)
def _small_parts_gf(k: int, x_order: int, y_order: int) -> series.BivariateSeries:
    return series.small_parts_series(k, x_order, y_order)


@lru_cache(maxsize=None)
def _recurrence_row(k: int, count: int) -> tuple[int, ...]:
    return tuple(formulas.min_part_signed_sequence(k, count))


# ---------------------------------------------------------------------------
# instance checkers (top level so they pickle for the process pool)
# ---------------------------------------------------------------------------

def _check_thm1(params):
    (n, enum_cap) = params
    tag = (("n", n),)
    j = (n - 1) // 3
    pattern = 0 if n % 3 == 0 else (-1) ** j
    val = formulas.min_part_signed(2, n)
    if val != pattern:
        return Counterexample(tag, pattern, val, "period-6 pattern vs formula")
    rec = _recurrence_row(2, n)[n - 1]
    if rec != val:
        return Counterexample(tag, val, rec, "recurrence vs formula")
    if n <= enum_cap:
        diff = compositions.signed_count(n + 1, MinPart(2)).diff
        if diff != val:
            return Counterexample(tag, val, diff, "enumeration vs formula")
    return None


def _check_thm2(params):
    (k, n, order) = params
    tag = (("k", k), ("n", n))
    val = formulas.min_part_signed(k, n)
    diff = compositions.signed_count(n + k - 1, MinPart(k)).diff
    if diff != val:
        return Counterexample(tag, val, diff, "enumeration vs formula")
    rec = _recurrence_row(k, n)[n - 1]
    if rec != val:
        return Counterexample(tag, val, rec, "recurrence vs formula")
    gf = -_min_part_gf(k, order)[n + k - 1]
    if gf != val:
        return Counterexample(tag, val, gf, "series vs formula")
    return None


def _check_thm3(params):
    (k, r, s, n, order) = params
    tag = (("k", k), ("r", r), ("s", s), ("n", n))
    val = formulas.congruent_signed(k, n, r, s)
    diff = compositions.signed_count(n + k - 1, MinPartCongruent(k, r, s)).diff
    if diff != val:
        return Counterexample(tag, val, diff, "enumeration vs formula")
    gf = -_congruent_gf(k, r, s, order)[n + k - 1]
    if gf != val:
        return Counterexample(tag, val, gf, "series vs formula")
    if k == r - s:
        ind = formulas.congruent_indicator(k, n, r, s)
        if ind != val:
            return Counterexample(tag, val, ind, "indicator special case")
    if k == 2 * r - s:
        per = formulas.congruent_periodic(k, n, r, s)
        if per != val:
            return Counterexample(tag, val, per, "periodic special case")
    return None


def _check_cor_rs(params):
    (r, s, n) = params
    k = r - s
    tag = (("r", r), ("s", s), ("n", n))
    val = formulas.congruent_indicator(k, n, r, s)
    form = formulas.congruent_signed(k, n, r, s)
    if form != val:
        return Counterexample(tag, val, form, "general formula vs indicator")
    diff = compositions.signed_count(n + k - 1, MinPartCongruent(k, r, s)).diff
    if diff != val:
        return Counterexample(tag, val, diff, "enumeration vs indicator")
    return None


def _check_cor_period(params):
    if params[0] == "value":
        (_, r, s, n) = params
        k = 2 * r - s
        tag = (("r", r), ("s", s), ("n", n))
        val = formulas.congruent_periodic(k, n, r, s)
        form = formulas.congruent_signed(k, n, r, s)
        if form != val:
            return Counterexample(tag, val, form, "general formula vs periodic form")
        diff = compositions.signed_count(n + k - 1, MinPartCongruent(k, r, s)).diff
        if diff != val:
            return Counterexample(tag, val, diff, "enumeration vs periodic form")
        return None
    (_, r, s, order) = params
    tag = (("r", r), ("s", s))
    report = series.cyclotomic_shift_check(r, s, order)
    if not report.inverse_ok:
        return Counterexample(
            tag, "series inverse of 1-x^r+x^2r", "product differs", "shift check"
        )
    if not report.period_divides:
        return Counterexample(
            tag, f"period dividing {6 * r}", (report.preperiod, report.period),
            "period check",
        )
    return None


def _check_thm4(params):
    (k, m, n) = params
    tag = (("k", k), ("m", m), ("n", n))
    val = formulas.guarded_signed_boxed(k, n, m)
    alt = formulas.guarded_signed_sum(k, n, m)
    if alt != val:
        return Counterexample(tag, val, alt, "quadruple sum vs boxed form")
    diff = compositions.signed_count(n + k - 1, GuardedSmall(k, m)).diff
    if diff != val:
        return Counterexample(tag, val, diff, "enumeration vs boxed form")
    cnt = formulas.guarded_count_boxed(k, n, m)
    cnt_alt = formulas.guarded_count_sum(k, n, m)
    if cnt_alt != cnt:
        return Counterexample(tag, cnt, cnt_alt, "unsigned quadruple vs boxed")
    total = compositions.count_compositions(n + k - 1, GuardedSmall(k, m))
    if total != cnt:
        return Counterexample(tag, cnt, total, "unsigned enumeration vs boxed")
    return None


def _check_thm4bar(params):
    (k, m, n, x_order, y_order) = params
    tag = (("k", k), ("m", m), ("n", n))
    val = formulas.small_parts_signed(k, n, m)
    diff = compositions.signed_count(n + k - 1, compositions.ExactSmall(k, m)).diff
    if diff != val:
        return Counterexample(tag, val, diff, "enumeration vs formula")
    gf = series.bivariate_signed_value(_small_parts_gf(k, x_order, y_order), k, n, m)
    if gf != val:
        return Counterexample(tag, val, gf, "bivariate series vs formula")
    return None


def _check_comp1(params):
    (n,) = params
    tag = (("n", n),)
    a = compositions.count_compositions(n, OddParts())
    b = compositions.count_compositions(n + 1, MinPart(2))
    if a != b:
        return Counterexample(tag, a, b, "odd parts vs parts >= 2")
    return None


def _check_comp2(params):
    (k, n) = params
    tag = (("k", k), ("n", n))
    a = compositions.count_compositions(n, MinPartCongruent(1, k, 0))
    b = compositions.count_compositions(n + k - 1, MinPart(k))
    if a != b:
        return Counterexample(tag, a, b, "parts = 1 mod k vs parts >= k")
    f = formulas.min_part_count(k, n)
    if f != a:
        return Counterexample(tag, a, f, "count formula vs enumeration")
    return None


def _check_comp3(params):
    (k, m, n) = params
    tag = (("k", k), ("m", m), ("n", n))
    a = compositions.count_compositions(n, ModOneExcept(k, m))
    b = compositions.count_compositions(n + k - 1, GuardedSmall(k, m))
    if a != b:
        return Counterexample(tag, a, b, "mod-one-except vs guarded class")
    return None


def _check_legendre(params):
    (n, order) = params
    tag = (("n", n),)
    val = partition_theorems.legendre_closed(n)
    delta = partition_theorems.legendre_delta(n)
    if delta != val:
        return Counterexample(tag, val, delta, "enumeration vs closed form")
    coeff = _pentagonal_coeffs(order)[n]
    if coeff != val:
        return Counterexample(tag, val, coeff, "product coefficient vs closed form")
    return None


@lru_cache(maxsize=None)
def _pentagonal_coeffs(order: int) -> tuple[int, ...]:
    return series.pentagonal_product(order).coeffs


def _check_pentagonal(params):
    (order,) = params
    lhs = series.pentagonal_product(order)
    rhs = series.pentagonal_rhs(order)
    if lhs.coeffs != rhs.coeffs:
        mismatch = next(
            i for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a != b
        )
        return Counterexample(
            (("order", order),),
            rhs.coeffs[mismatch],
            lhs.coeffs[mismatch],
            f"coefficient {mismatch}",
        )
    return None


def _check_euler(params):
    (n,) = params
    d, o, ok = partition_theorems.euler_distinct_odd(n)
    if not ok:
        return Counterexample((("n", n),), d, o, "distinct vs odd")
    signed = partition_theorems.odd_parts_signed(n)
    expected = (-1) ** n * o
    if signed != expected:
        return Counterexample((("n", n),), expected, signed, "signed odd-part count")
    return None


def _check_glaisher(params):
    (k, n) = params
    a, b, ok = partition_theorems.glaisher_check(n, k)
    if not ok:
        return Counterexample((("k", k), ("n", n)), a, b, "multiplicity vs divisibility")
    return None


def _check_franklin(params):
    (k, m, n) = params
    a, b, ok = partition_theorems.franklin_check(n, k, m)
    if not ok:
        return Counterexample(
            (("k", k), ("m", m), ("n", n)), a, b, "repeated vs divisible values"
        )
    return None


def _check_nyirenda_d(params):
    (r, n) = params
    delta, closed, ok = partition_theorems.nyirenda_d(n, r)
    if not ok:
        return Counterexample((("r", r), ("n", n)), closed, delta, "d-class")
    return None


def _check_nyirenda_c(params):
    (r, n) = params
    delta, closed, ok = partition_theorems.nyirenda_c(n, r)
    if not ok:
        return Counterexample((("r", r), ("n", n)), closed, delta, "c-class")
    if r == 1:
        leg = partition_theorems.legendre_closed(n)
        if leg != closed:
            return Counterexample((("r", r), ("n", n)), leg, closed, "r=1 vs Legendre")
    return None


def _check_andrews(params):
    (k, n) = params
    a, b, c, ok = partition_theorems.andrews_counts(n, k)
    if not ok:
        return Counterexample(
            (("k", k), ("n", n)), a, (b, c), "initial reps vs companions"
        )
    return None


def _check_andrews_d(params):
    (m, n) = params
    delta, closed, ok = partition_theorems.andrews_singleton_delta(n, m)
    if not ok:
        return Counterexample((("m", m), ("n", n)), closed, delta, "singleton signs")
    return None


# ---------------------------------------------------------------------------
# sweep definitions
# ---------------------------------------------------------------------------

def _build_thm1(c: SweepConfig):
    max_n = c.max_n or 60
    enum_cap = min(max_n, 20)
    inst = [(n, enum_cap) for n in range(1, max_n + 1)]
    return inst, f"n=1..{max_n} (enumeration to n={enum_cap})"


def _build_thm2(c: SweepConfig):
    max_k = c.max_k or 6
    max_n = c.max_n or 20
    order = max_n + max_k
    inst = [(k, n, order) for k in range(1, max_k + 1) for n in range(1, max_n + 1)]
    return inst, f"k=1..{max_k} n=1..{max_n}"


def _build_thm3(c: SweepConfig):
    max_k = c.max_k or 6
    max_r = c.max_r or 5
    max_n = c.max_n or 18
    order = max_n + max_k
    inst = [
        (k, r, s, n, order)
        for k in range(1, max_k + 1)
        for r in range(1, max_r + 1)
        for s in range(0, r)
        for n in range(1, max_n + 1)
    ]
    return inst, f"k=1..{max_k} r=1..{max_r} s=0..r-1 n=1..{max_n}"


def _build_cor_rs(c: SweepConfig):
    max_r = c.max_r or 5
    max_n = c.max_n or 18
    inst = [
        (r, s, n)
        for r in range(1, max_r + 1)
        for s in range(0, r)
        if r - s >= 1
        for n in range(1, max_n + 1)
    ]
    return inst, f"r=1..{max_r} s=0..r-1 k=r-s n=1..{max_n}"


def _build_cor_period(c: SweepConfig):
    max_r = c.max_r or 5
    max_n = c.max_n or 18
    inst: list[tuple] = []
    for r in range(1, max_r + 1):
        for s in range(0, r):
            inst.append(("shift", r, s, 60))
            for n in range(1, max_n + 1):
                inst.append(("value", r, s, n))
    return inst, f"r=1..{max_r} s=0..r-1 k=2r-s n=1..{max_n}; shift/period to order 60"


def _build_thm4(c: SweepConfig):
    max_k = c.max_k or 4
    max_m = c.max_m if c.max_m is not None else 3
    max_n = c.max_n or 16
    inst = [
        (k, m, n)
        for k in range(2, max_k + 1)
        for m in range(0, max_m + 1)
        for n in range(1, max_n + 1)
    ]
    return inst, f"k=2..{max_k} m=0..{max_m} n=1..{max_n}"


def _build_thm4bar(c: SweepConfig):
    max_k = c.max_k or 4
    max_m = c.max_m if c.max_m is not None else 3
    max_n = c.max_n or 16
    inst = [
        (k, m, n, max_n + k - 1, max_m)
        for k in range(1, max_k + 1)
        for m in range(0, max_m + 1)
        for n in range(1, max_n + 1)
    ]
    return inst, f"k=1..{max_k} m=0..{max_m} n=1..{max_n}"


def _build_comp1(c: SweepConfig):
    max_n = c.max_n or 22
    return [(n,) for n in range(1, max_n + 1)], f"n=1..{max_n}"


def _build_comp2(c: SweepConfig):
    max_k = c.max_k or 5
    max_n = c.max_n or 20
    inst = [(k, n) for k in range(1, max_k + 1) for n in range(1, max_n + 1)]
    return inst, f"k=1..{max_k} n=1..{max_n}"


def _build_comp3(c: SweepConfig):
    max_k = c.max_k or 4
    max_m = c.max_m if c.max_m is not None else 3
    max_n = c.max_n or 16
    inst = [
        (k, m, n)
        for k in range(1, max_k + 1)
        for m in range(0, max_m + 1)
        for n in range(1, max_n + 1)
    ]
    return inst, f"k=1..{max_k} m=0..{max_m} n=1..{max_n}"


def _build_legendre(c: SweepConfig):
    max_n = c.max_n or 50
    return [(n, max_n) for n in range(0, max_n + 1)], f"n=0..{max_n}"


def _build_pentagonal(c: SweepConfig):
    order = c.max_n or 100
    return [(order,)], f"order={order}"


def _build_euler(c: SweepConfig):
    max_n = c.max_n or 30
    return [(n,) for n in range(0, max_n + 1)], f"n=0..{max_n}"


def _build_glaisher(c: SweepConfig):
    max_k = c.max_k or 4
    max_n = c.max_n or 30
    inst = [(k, n) for k in range(1, max_k + 1) for n in range(0, max_n + 1)]
    return inst, f"k=1..{max_k} n=0..{max_n}"


def _build_franklin(c: SweepConfig):
    max_k = c.max_k or 3
    max_m = c.max_m if c.max_m is not None else 3
    max_n = c.max_n or 25
    inst = [
        (k, m, n)
        for k in range(1, max_k + 1)
        for m in range(0, max_m + 1)
        for n in range(0, max_n + 1)
    ]
    return inst, f"k=1..{max_k} m=0..{max_m} n=0..{max_n}"


def _build_nyirenda_d(c: SweepConfig):
    max_r = c.max_r or 3
    max_n = c.max_n or 40
    inst = [(r, n) for r in range(1, max_r + 1) for n in range(0, max_n + 1)]
    return inst, f"r=1..{max_r} n=0..{max_n}"


_build_nyirenda_c = _build_nyirenda_d


def _build_andrews(c: SweepConfig):
    max_k = c.max_k or 3
    max_n = c.max_n or 30
    inst = [(k, n) for k in range(1, max_k + 1) for n in range(0, max_n + 1)]
    return inst, f"k=1..{max_k} n=0..{max_n}"


def _build_andrews_d(c: SweepConfig):
    max_m = c.max_m if c.max_m is not None else 7
    max_n = c.max_n or 30
    inst = [(m, n) for m in range(0, max_m + 1) for n in range(0, max_n + 1)]
    return inst, f"m=0..{max_m} n=0..{max_n}"


_CHECKS = {
    "thm1": (_build_thm1, _check_thm1),
    "thm2": (_build_thm2, _check_thm2),
    "thm3": (_build_thm3, _check_thm3),
    "cor-rs": (_build_cor_rs, _check_cor_rs),
    "cor-period": (_build_cor_period, _check_cor_period),
    "thm4": (_build_thm4, _check_thm4),
    "thm4bar": (_build_thm4bar, _check_thm4bar),
    "comp1": (_build_comp1, _check_comp1),
    "comp2": (_build_comp2, _check_comp2),
    "comp3": (_build_comp3, _check_comp3),
    "legendre": (_build_legendre, _check_legendre),
    "pentagonal": (_build_pentagonal, _check_pentagonal),
    "euler": (_build_euler, _check_euler),
    "glaisher": (_build_glaisher, _check_glaisher),
    "franklin": (_build_franklin, _check_franklin),
    "nyirenda-d": (_build_nyirenda_d, _check_nyirenda_d),
    "nyirenda-c": (_build_nyirenda_c, _check_nyirenda_c),
    "andrews": (_build_andrews, _check_andrews),
    "andrews-d": (_build_andrews_d, _check_andrews_d),
}

CHECK_NAMES = tuple(_CHECKS)


def _dispatch(tagged):
    name, params = tagged
    return _CHECKS[name][1](params)


def run_check(name: str, config: SweepConfig = SweepConfig()) -> VerificationReport:
    """Run one named sweep and return its report."""
    if name not in _CHECKS:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    build, _ = _CHECKS[name]
    instances, ranges = build(config)
    instances = sorted(instances)
    tagged = [(name, p) for p in instances]
    if config.jobs > 1 and len(tagged) > 1:
        with multiprocessing.Pool(config.jobs) as pool:
            chunk = max(1, len(tagged) // (config.jobs * 4))
            results = pool.map(_dispatch, tagged, chunksize=chunk)
    else:
        results = [_dispatch(t) for t in tagged]
    first_failure = next((r for r in results if r is not None), None)
    return VerificationReport(
        name=name,
        ranges=ranges,
        instances=len(instances),
        passed=first_failure is None,
        counterexample=first_failure,
    )
