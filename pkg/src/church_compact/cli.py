"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 fuel exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import DEFAULT_SEED, VerificationError, format_table1, repeat_demo, run_bench, write_csv
from .compact import compact_min, compact_recursive, function_part_size
from .numerals import church
from .reduce import DEFAULT_FUEL, normalize
from .rtp import format_expr, rtp
from .translate import translate
from .term import pretty

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FUEL = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="church-compact",
        description="Compact Church numerals by recursive tetrational partitioning.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compact", help="print the compacted term for n")
    p.add_argument("n", type=_positive)
    p.add_argument("--phi", type=int, help="force a single stage with this base")
    p.add_argument("--no-recursive", action="store_true", help="stop after the best single stage")
    p.add_argument("--explain", action="store_true", help="show the stage chain")
    p.add_argument("--sugar", action="store_true", help="print numerals as C<n>")

    p = sub.add_parser("verify", help="normalize the compacted term and compare with C(n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--fuel", type=_positive, default=DEFAULT_FUEL)
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("bench", help="size comparison over a range, written as CSV")
    p.add_argument("--from", dest="start", type=_positive, required=True)
    p.add_argument("--to", dest="stop", type=_positive, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--alt-fig2", action="store_true", help="running mean of per-n ratios")
    p.add_argument("--fig2-out", type=Path, help="also write the cumulative series as CSV")

    sub.add_parser("table1", help="plain vs best single-stage sizes for 9..15")

    p = sub.add_parser("demo", help="expand a repeated pattern through a compacted numeral")
    p.add_argument("--pattern", required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--fuel", type=_positive, default=DEFAULT_FUEL)
    p.add_argument("--stats", action="store_true")
    return parser


def _cmd_compact(args, out) -> int:
    n = args.n
    if args.phi is not None:
        if not 2 <= args.phi <= n:
            print(f"--phi must lie in [2, {n}]", file=sys.stderr)
            return EXIT_USAGE
        d = rtp(n, args.phi)
        tr = translate(d)
        print(pretty(tr.term, sugar=args.sugar), file=out)
        print(f"size {tr.size}", file=out)
        if args.explain:
            print(f"phi={d.phi} r={d.r} expr={format_expr(d.expr)}", file=out)
            print(f"function part size {function_part_size(tr)}", file=out)
        return EXIT_OK
    if args.no_recursive:
        choice = compact_min(n)
        print(pretty(choice.term, sugar=args.sugar), file=out)
        print(f"size {choice.size}", file=out)
        if args.explain:
            print(f"phi*={choice.phi_star if choice.phi_star else 'plain'}", file=out)
        return EXIT_OK
    result = compact_recursive(n)
    print(pretty(result.final_term, sugar=args.sugar), file=out)
    print(f"size {result.final_size} (plain {2 * n + 3})", file=out)
    if args.explain:
        current = n
        for stage in result.stages:
            d = rtp(current, stage.phi_star)
            print(
                f"  {current} = {format_expr(d.expr)} + {d.r}  [phi*={stage.phi_star}, "
                f"function part {stage.function_part.size}]",
                file=out,
            )
            current = stage.phi_star
        print(f"  innermost argument C({result.innermost})", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    result = compact_recursive(args.n)
    outcome = normalize(result.final_term, args.fuel)
    if args.stats:
        print(f"size {result.final_size} steps {outcome.steps}", file=out)
    if outcome.exhausted:
        print(f"FUEL EXHAUSTED after {outcome.steps} steps", file=out)
        return EXIT_FUEL
    if outcome.term == church(args.n):
        print(f"PASS n={args.n} steps={outcome.steps}", file=out)
        return EXIT_OK
    print(f"FAIL n={args.n} steps={outcome.steps}", file=out)
    return EXIT_FAIL


def _cmd_bench(args, out) -> int:
    if args.start > args.stop:
        print("--from must not exceed --to", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows, summary = run_bench(args.start, args.stop, seed=args.seed, alt_fig2=args.alt_fig2)
    except VerificationError as exc:
        print(f"FAIL {exc}", file=out)
        return EXIT_FAIL
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        write_csv(rows, fh)
    if args.fig2_out is not None:
        with open(args.fig2_out, "w", newline="", encoding="utf-8") as fh:
            fh.write("n,cumulative_ratio\n")
            for row, value in zip(rows, summary.cumulative_avg_ratio_series):
                fh.write(f"{row.n},{float(value):.6f}\n")
    print(summary.report(), file=out)
    return EXIT_OK


def _cmd_demo(args, out) -> int:
    try:
        report = repeat_demo(args.pattern, args.count, args.fuel)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.stats:
        print(f"term size {report.term.size} steps {report.steps}", file=out)
    if report.exhausted:
        print(f"FUEL EXHAUSTED after {report.steps} steps", file=out)
        return EXIT_FUEL
    print(pretty(report.term, sugar=True), file=out)
    print(f"-> {pretty(report.normal_form)}", file=out)
    print(("PASS" if report.ok else "FAIL") + f" {args.pattern!r} x {args.count}", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handler = {
        "compact": _cmd_compact,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
        "table1": lambda a, o: print(format_table1(), file=o) or EXIT_OK,
        "demo": _cmd_demo,
    }[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
