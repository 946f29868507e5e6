"""Translation of an RTP decomposition into one folded lambda term.

The output has the shape ``(λp.λf.λx.BODY) C(phi)``: every literal of the
expression becomes the shared variable ``p`` and the arithmetic is folded
into a single function part. The match arms follow the translation
algorithm; de Bruijn indices are computed from the actual binder depth, so
arbitrarily deep Add/Mul nesting stays correct.

Shapes produced by each arm, with ``f`` the iterated function in scope:

* Num        -> ``p``                               (a numeral)
* Exp(b, e)  -> ``(T(e) T(b))``                     (a numeral, b ** e)
* Mul(l, r)  -> ``(T(l) (R f))``                    (a function, f ** (l*r))
  where ``R`` is ``T(r)`` for a numeral r, else ``λf'.λx'.(T(r) x')``
* Add(l, r)  -> ``λx'.(L R)``                       (a function, f ** (l+r))
  where ``L = T(l)`` for Add/Mul and ``(T(l) f)`` otherwise, and
  ``R = (T(r) x')`` for Add/Mul and ``(T(r) f x')`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerals import church
from .rtp import Add, Exp, Expr, Mul, Num, RtpDecomposition, count_ops
from .term import Abs, App, Term, Var

__all__ = [
    "TranslationResult",
    "translate",
    "translate_expr",
    "translated_size",
    "size_bound",
]

# absolute binder levels inside the function part
_P, _F, _X = 0, 1, 2
_TOP = 3


@dataclass(frozen=True)
class TranslationResult:
    term: Term
    phi: int
    r: int
    function_part: Term
    argument_part: Term

    @property
    def size(self) -> int:
        return self.term.size


def _var(level: int, depth: int) -> Var:
    return Var(depth - 1 - level)


def _is_compound(e: Expr) -> bool:
    return isinstance(e, (Add, Mul))


def _tr(e: Expr, depth: int, f: int) -> Term:
    match e:
        case Num():
            return _var(_P, depth)
        case Exp(b, p):
            return App(_tr(p, depth, f), _tr(b, depth, f))
        case Mul(l, r):
            if _is_compound(r):
                # λf'.λx'.(T(r) x'), with f' bound at level `depth`
                inner = App(_tr(r, depth + 2, depth), Var(0))
                right = Abs(Abs(inner))
            else:
                right = _tr(r, depth, f)
            return App(_tr(l, depth, f), App(right, _var(f, depth)))
        case Add(l, r):
            d = depth + 1  # under the λx' of this addition
            fv = _var(f, d)
            left = _tr(l, d, f) if _is_compound(l) else App(_tr(l, d, f), fv)
            if _is_compound(r):
                right = App(_tr(r, d, f), Var(0))
            else:
                right = App(App(_tr(r, d, f), fv), Var(0))
            return Abs(App(left, right))
    raise TypeError(f"not an expression: {e!r}")


def _remainder(r: int) -> Term:
    t: Term = Var(0)
    for _ in range(r):
        t = App(Var(1), t)
    return t


def _top(e: Expr, rem: Term) -> Term:
    f = _var(_F, _TOP)
    match e:
        case Add(l, r):
            left = _tr(l, _TOP, _F) if _is_compound(l) else App(_tr(l, _TOP, _F), f)
            return App(left, _top(r, rem))
        case Mul():
            return App(_tr(e, _TOP, _F), rem)
    return App(App(_tr(e, _TOP, _F), f), rem)


def translate_expr(expr: Expr, phi: int, r: int) -> TranslationResult:
    """Translate ``expr + r``; every literal of ``expr`` must equal ``phi``."""
    function_part = Abs(Abs(Abs(_top(expr, _remainder(r)))))
    argument_part = church(phi)
    return TranslationResult(
        App(function_part, argument_part), phi, r, function_part, argument_part
    )


def translate(d: RtpDecomposition) -> TranslationResult:
    return translate_expr(d.expr, d.phi, d.r)


# ---------------------------------------------------------------------------
# Sizes without building terms (used by the base search)
# ---------------------------------------------------------------------------


def _tr_size(e: Expr) -> int:
    match e:
        case Num():
            return 1
        case Exp(b, p):
            return _tr_size(p) + _tr_size(b) + 1
        case Mul(l, r):
            right = _tr_size(r) + 4 if _is_compound(r) else _tr_size(r)
            return _tr_size(l) + right + 3
        case Add(l, r):
            left = _tr_size(l) + (0 if _is_compound(l) else 2)
            right = _tr_size(r) + (2 if _is_compound(r) else 4)
            return left + right + 2
    raise TypeError(f"not an expression: {e!r}")


def _top_size(e: Expr, rem: int) -> int:
    match e:
        case Add(l, r):
            left = _tr_size(l) + (0 if _is_compound(l) else 2)
            return left + _top_size(r, rem) + 1
        case Mul():
            return _tr_size(e) + rem + 1
    return _tr_size(e) + rem + 3


def translated_size(d: RtpDecomposition) -> int:
    """``size(translate(d).term)``, computed arithmetically."""
    function_part = _top_size(d.expr, 2 * d.r + 1) + 3
    return function_part + (2 * d.phi + 3) + 1


def size_bound(d: RtpDecomposition) -> int:
    """``10 N_a + 5 N_m + 2 N_e + 2 phi + 2 r + 12`` for the decomposition."""
    n_a, n_m, n_e = count_ops(d.expr)
    return 10 * n_a + 5 * n_m + 2 * n_e + 2 * d.phi + 2 * d.r + 12
