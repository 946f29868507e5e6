"""Size experiment: plain vs binary vs RTP numerals, plus the repetition demo."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable

from .compact import compact_min, compact_recursive
from .numerals import binary_church
from .reduce import DEFAULT_FUEL, church_value, normalize
from .term import App, Const, Term, apply

__all__ = [
    "DEFAULT_SEED",
    "PUBLISHED_WINS",
    "PUBLISHED_AVG_RATIO",
    "CSV_HEADER",
    "BenchRow",
    "BenchSummary",
    "VerificationError",
    "bench_row",
    "run_bench",
    "cumulative_series",
    "format_ratio",
    "write_csv",
    "csv_text",
    "table1",
    "format_table1",
    "DemoReport",
    "repeat_demo",
    "flat_repetition",
]

DEFAULT_SEED = 0xC0FFEE
# reported over n = 1..10000 against the binary expression of Church numerals
PUBLISHED_WINS = 5187
PUBLISHED_AVG_RATIO = 0.9962
CSV_HEADER = ("n", "plain", "binary", "rtp_min", "rtp_rec", "ratio_rtp_binary")


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class BenchRow:
    n: int
    plain_size: int
    binary_size: int
    rtp_min_size: int
    rtp_recursive_size: int

    @property
    def ratio_rtp_over_binary(self) -> Fraction:
        return Fraction(self.rtp_recursive_size, self.binary_size)


@dataclass(frozen=True)
class BenchSummary:
    start: int
    stop: int
    wins_vs_binary: int
    avg_ratio_vs_binary: Fraction
    cumulative_avg_ratio_series: tuple[Fraction, ...]
    spot_checked: tuple[int, ...] = ()

    @property
    def range(self) -> tuple[int, int]:
        return self.start, self.stop

    def report(self) -> str:
        lines = [
            f"range                 : {self.start}..{self.stop}",
            f"rtp_rec <= binary     : {self.wins_vs_binary} (published: {PUBLISHED_WINS} of 10000)",
            f"avg rtp_rec / binary  : {float(self.avg_ratio_vs_binary):.4f} (published: {PUBLISHED_AVG_RATIO})",
            f"final cumulative ratio: {float(self.cumulative_avg_ratio_series[-1]):.4f}",
            f"spot-checked numerals : {len(self.spot_checked)}",
        ]
        return "\n".join(lines)


def bench_row(n: int) -> BenchRow:
    return BenchRow(
        n=n,
        plain_size=2 * n + 3,
        binary_size=binary_church(n).size,
        rtp_min_size=compact_min(n).size,
        rtp_recursive_size=compact_recursive(n).final_size,
    )


def cumulative_series(rows: list[BenchRow], alt: bool = False) -> list[Fraction]:
    """Running comparison against the binary baseline.

    Default: mean of ``rtp_recursive_size`` over the rows so far divided by
    the binary size at the current ``n``. With ``alt=True``: running mean of
    the per-row ratios.
    """
    out = []
    total = 0
    ratio_total = Fraction(0)
    for i, row in enumerate(rows, 1):
        if alt:
            ratio_total += row.ratio_rtp_over_binary
            out.append(ratio_total / i)
        else:
            total += row.rtp_recursive_size
            out.append(Fraction(total, i * row.binary_size))
    return out


def run_bench(
    start: int,
    stop: int,
    *,
    seed: int = DEFAULT_SEED,
    samples: int = 100,
    alt_fig2: bool = False,
) -> tuple[list[BenchRow], BenchSummary]:
    """One row per ``n`` in ``[start, stop]`` and the aggregate summary.

    ``samples`` values of ``n`` (chosen with ``seed``) are decoded with
    :func:`church_value`; a mismatch raises :class:`VerificationError`.
    """
    if not 1 <= start <= stop:
        raise ValueError("need 1 <= start <= stop")
    rows = [bench_row(n) for n in range(start, stop + 1)]
    rng = random.Random(seed)
    population = range(start, stop + 1)
    picked = sorted(rng.sample(population, min(samples, len(population))))
    for n in picked:
        got = church_value(compact_recursive(n).final_term)
        if got != n:
            raise VerificationError(f"compacted term for {n} decodes to {got}")
    ratios = [row.ratio_rtp_over_binary for row in rows]
    summary = BenchSummary(
        start=start,
        stop=stop,
        wins_vs_binary=sum(row.rtp_recursive_size <= row.binary_size for row in rows),
        avg_ratio_vs_binary=sum(ratios, Fraction(0)) / len(rows),
        cumulative_avg_ratio_series=tuple(cumulative_series(rows, alt=alt_fig2)),
        spot_checked=tuple(picked),
    )
    return rows, summary


def format_ratio(value: Fraction) -> str:
    """Decimal with exactly six fractional digits (round half to even)."""
    scaled = round(value * 10**6)
    whole, frac = divmod(scaled, 10**6)
    return f"{whole}.{frac:06d}"


def write_csv(rows: Iterable[BenchRow], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            (
                row.n,
                row.plain_size,
                row.binary_size,
                row.rtp_min_size,
                row.rtp_recursive_size,
                format_ratio(row.ratio_rtp_over_binary),
            )
        )


def csv_text(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def table1(start: int = 9, stop: int = 15) -> list[tuple[int, int, int]]:
    """``(n, size of C(n), size of the best single-stage term)`` rows."""
    return [(n, 2 * n + 3, compact_min(n).size) for n in range(start, stop + 1)]


def format_table1(rows: list[tuple[int, int, int]] | None = None) -> str:
    rows = table1() if rows is None else rows
    lines = ["n   #C(n)  #min", "--  -----  ----"]
    lines += [f"{n:<3} {plain:>5}  {best:>4}" for n, plain, best in rows]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Repetition demo
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DemoReport:
    term: Term
    expected: Term
    normal_form: Term
    steps: int
    exhausted: bool

    @property
    def ok(self) -> bool:
        return not self.exhausted and self.normal_form == self.expected


def _pattern_term(pattern: str) -> Term:
    if not pattern:
        raise ValueError("pattern must be nonempty")
    consts = [Const(ch) for ch in pattern]
    return apply(consts[0], *consts[1:])


def flat_repetition(pattern: str, count: int, end: str = "$") -> Term:
    """``(P (P (... (P $))))`` with ``count`` copies of the pattern application P."""
    block = _pattern_term(pattern)
    t: Term = Const(end)
    for _ in range(count):
        t = App(block, t)
    return t


def repeat_demo(pattern: str, count: int, fuel: int = DEFAULT_FUEL) -> DemoReport:
    """Apply the compacted numeral for ``count`` to the pattern and ``$``, then normalize."""
    if count < 1:
        raise ValueError("count must be >= 1")
    numeral = compact_recursive(count).final_term
    term = App(App(numeral, _pattern_term(pattern)), Const("$"))
    outcome = normalize(term, fuel)
    return DemoReport(
        term=term,
        expected=flat_repetition(pattern, count),
        normal_form=outcome.term,
        steps=outcome.steps,
        exhausted=outcome.exhausted,
    )
