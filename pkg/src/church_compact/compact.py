"""Choosing the base and chaining compactions.

``compact_min`` searches every base ``phi`` in ``[2, n - 1]`` and keeps the
smallest translated term, falling back to the plain numeral. The search is
exact but pruned: any translation with base ``phi`` has size at least
``2 * phi + 12`` (three binders, a body of at least five symbols, the
argument C(phi) and the application node), so larger bases cannot win.

``compact_recursive`` then replaces the argument C(phi*) by the compacted
form of ``phi*`` while ``phi* > 8`` and doing so shrinks the term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .numerals import church
from .rtp import rtp
from .term import App, Term
from .translate import TranslationResult, translate, translated_size

__all__ = [
    "MinCompaction",
    "Stage",
    "CompactionResult",
    "RECURSION_THRESHOLD",
    "min_size_lower_bound",
    "compact_min",
    "compact_min_exhaustive",
    "compact_with_phi",
    "compact_recursive",
    "function_part_size",
]

RECURSION_THRESHOLD = 8


@dataclass(frozen=True)
class MinCompaction:
    """Best single-stage term for ``n``; ``phi_star`` is None for the plain numeral."""

    n: int
    phi_star: int | None
    size: int

    @property
    def translation(self) -> TranslationResult | None:
        if self.phi_star is None:
            return None
        return translate(rtp(self.n, self.phi_star))

    @property
    def term(self) -> Term:
        t = self.translation
        return church(self.n) if t is None else t.term


@dataclass(frozen=True)
class Stage:
    phi_star: int
    function_part: Term
    r: int


@dataclass(frozen=True)
class CompactionResult:
    n: int
    stages: tuple[Stage, ...]
    final_term: Term

    @property
    def final_size(self) -> int:
        return self.final_term.size

    @property
    def innermost(self) -> int:
        """The numeral left as a plain Church numeral at the end of the chain."""
        return self.stages[-1].phi_star if self.stages else self.n


def min_size_lower_bound(phi: int) -> int:
    return 2 * phi + 12


def compact_with_phi(n: int, phi: int) -> TranslationResult:
    return translate(rtp(n, phi))


@lru_cache(maxsize=None)
def compact_min(n: int) -> MinCompaction:
    """Smallest of C(n) and every translation with ``phi`` in ``[2, n - 1]``.

    Ties go to the smallest ``phi``; the plain numeral loses ties.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    plain = 2 * n + 3
    best_phi, best_size = None, None
    for phi in range(2, n):
        bound = min_size_lower_bound(phi)
        if bound > plain or (best_size is not None and bound >= best_size):
            break
        s = translated_size(rtp(n, phi))
        if best_size is None or s < best_size:
            best_phi, best_size = phi, s
    if best_size is None or best_size > plain:
        return MinCompaction(n, None, plain)
    return MinCompaction(n, best_phi, best_size)


def compact_min_exhaustive(n: int) -> MinCompaction:
    """Unpruned reference search, building every candidate term."""
    best = MinCompaction(n, None, church(n).size)
    for phi in range(2, n):
        s = translate(rtp(n, phi)).term.size
        if s < best.size or (s == best.size and best.phi_star is None):
            best = MinCompaction(n, phi, s)
    return best


@lru_cache(maxsize=None)
def compact_recursive(n: int) -> CompactionResult:
    """Chain of compactions ``(λpfx.M0) ((λpfx.M1) (... C(phi*)))``."""
    choice = compact_min(n)
    if choice.phi_star is None:
        return CompactionResult(n, (), church(n))
    tr = choice.translation
    stage = Stage(choice.phi_star, tr.function_part, tr.r)
    argument = tr.argument_part
    stages = (stage,)
    if choice.phi_star > RECURSION_THRESHOLD:
        inner = compact_recursive(choice.phi_star)
        if inner.final_size < argument.size:
            argument = inner.final_term
            stages += inner.stages
    return CompactionResult(n, stages, App(tr.function_part, argument))


def function_part_size(t: TranslationResult) -> int:
    return t.function_part.size
