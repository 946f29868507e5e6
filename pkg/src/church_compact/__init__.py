"""Compact lambda terms for Church numerals via recursive tetrational partitioning."""

from .bench import BenchRow, BenchSummary, repeat_demo, run_bench, table1
from .compact import (
    CompactionResult,
    MinCompaction,
    compact_min,
    compact_recursive,
    function_part_size,
)
from .numerals import add_comb, binary_church, church, exp_comb, mul_comb, tet_comb
from .reduce import Fuel, NormalizeOutcome, church_value, normalize, shift, substitute
from .rtp import Add, Exp, Mul, Num, RtpDecomposition, count_ops, evaluate, rtp, slog, tetration
from .term import Abs, App, Const, Term, Var, is_closed, parse, pretty, size
from .translate import TranslationResult, size_bound, translate

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "BenchSummary",
    "repeat_demo",
    "run_bench",
    "table1",
    "CompactionResult",
    "MinCompaction",
    "compact_min",
    "compact_recursive",
    "function_part_size",
    "add_comb",
    "binary_church",
    "church",
    "exp_comb",
    "mul_comb",
    "tet_comb",
    "Fuel",
    "NormalizeOutcome",
    "church_value",
    "normalize",
    "shift",
    "substitute",
    "Add",
    "Exp",
    "Mul",
    "Num",
    "RtpDecomposition",
    "count_ops",
    "evaluate",
    "rtp",
    "slog",
    "tetration",
    "Abs",
    "App",
    "Const",
    "Term",
    "Var",
    "is_closed",
    "parse",
    "pretty",
    "size",
    "TranslationResult",
    "size_bound",
    "translate",
]
