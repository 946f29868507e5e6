"""Church numerals, arithmetic combinators and the binary baseline."""

from __future__ import annotations

from functools import lru_cache

from .reduce import shift
from .term import Abs, App, Term, Var, apply, parse

__all__ = [
    "church",
    "add_comb",
    "mul_comb",
    "exp_comb",
    "succ_comb",
    "tet_comb",
    "binary_church",
    "ADD_TEXT",
    "MUL_TEXT",
    "EXP_TEXT",
    "SUCC_TEXT",
]

# λpqfx.p f (q f x), λpqfx.p (q f) x, λpqfx.q p f x, λpfx.f (p f x)
ADD_TEXT = "λ.λ.λ.λ.(3 1 (2 1 0))"
MUL_TEXT = "λ.λ.λ.λ.(3 (2 1) 0)"
EXP_TEXT = "λ.λ.λ.λ.(2 3 1 0)"
SUCC_TEXT = "λ.λ.λ.(1 (2 1 0))"

# f^n x bodies, shared between numerals
_bodies: list[Term] = [Var(0)]
_F = Var(1)


def church(n: int) -> Term:
    """``λf.λx.f (f (... (f x)))`` with ``n`` applications of f."""
    if n < 0:
        raise ValueError("Church numerals are defined for n >= 0")
    while len(_bodies) <= n:
        _bodies.append(App(_F, _bodies[-1]))
    return Abs(Abs(_bodies[n]))


@lru_cache(maxsize=None)
def add_comb() -> Term:
    return parse(ADD_TEXT)


@lru_cache(maxsize=None)
def mul_comb() -> Term:
    return parse(MUL_TEXT)


@lru_cache(maxsize=None)
def exp_comb() -> Term:
    return parse(EXP_TEXT)


@lru_cache(maxsize=None)
def succ_comb() -> Term:
    return parse(SUCC_TEXT)


def tet_comb(m: int) -> Term:
    """``λpfx.p p ... p f x`` with ``m`` copies of p; applied to C(a) gives C(a↑↑m)."""
    if m < 1:
        raise ValueError("tetration combinator needs m >= 1")
    p = Var(2)
    return Abs(Abs(Abs(apply(p, *([p] * (m - 1)), Var(1), Var(0)))))


def binary_church(n: int) -> Term:
    """Binary-expression numeral for ``n``, folded into one function part.

    The result is ``(λp.λf.λx.(G x)) C(2)`` where ``G`` denotes ``f ** n`` and
    is built from the bits of ``n``, most significant first. ``G`` starts as
    ``f``; each further 0 bit doubles it to ``(p G)`` (the multiplication by
    C(2) inlined at the function level) and each 1 bit to
    ``λy.f (p G y)`` (double, then the inlined successor). Size grows
    linearly in the number of bits.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return church(n)
    # G lives at depth 3 (p=2, f=1, x=0) and is shifted under each new λy
    g: Term = Var(1)
    for bit in bin(n)[3:]:
        if bit == "0":
            g = App(Var(2), g)
        else:
            inner = shift(g, 1)
            g = Abs(App(Var(2), App(App(Var(3), inner), Var(0))))
    return App(Abs(Abs(Abs(App(g, Var(0))))), church(2))
