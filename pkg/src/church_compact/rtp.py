"""Tetration, super-logarithm and recursive tetrational partitioning (RTP).

A number ``n`` and base ``phi`` give ``n = expr + r`` with ``r = n % phi``;
``expr`` is built only from the literal ``phi`` and +, ·, ^. The multiple
``n - r`` is written greedily as ``sum_i tet(phi, i) * p_i`` for
``i = k .. 1``; each coefficient is split into ``p_i - p_i % phi`` (partitioned
again recursively) plus ``p_i % phi`` explicit copies of ``tet(phi, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

__all__ = [
    "Num",
    "Add",
    "Mul",
    "Exp",
    "Expr",
    "MagnitudeError",
    "DEFAULT_MAX_BITS",
    "RtpDecomposition",
    "tetration",
    "slog",
    "evaluate",
    "rtp",
    "partition",
    "tet_expr",
    "count_ops",
    "leaves",
    "format_expr",
]

# 2↑↑5 = 2**65536 is the largest tower any n < 2**65536 can need
DEFAULT_MAX_BITS = 1 << 20


class MagnitudeError(OverflowError):
    pass


@dataclass(frozen=True)
class Num:
    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("Num literals are >= 1")


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Exp:
    base: Expr
    power: Expr


Expr = Union[Num, Add, Mul, Exp]


def _checked_pow(base: int, power: int, max_bits: int) -> int:
    if base > 1 and power * (base.bit_length() - 1) > max_bits:
        raise MagnitudeError(
            f"{base}**<{power.bit_length()}-bit power> exceeds {max_bits} bits"
        )
    return base**power


def tetration(phi: int, i: int, max_bits: int = DEFAULT_MAX_BITS) -> int:
    """``phi↑↑i``: 1 for i = 0, otherwise ``phi ** tetration(phi, i - 1)``."""
    if phi < 1 or i < 0:
        raise ValueError("tetration needs phi >= 1 and i >= 0")
    value = 1
    for _ in range(i):
        value = _checked_pow(phi, value, max_bits)
    return value


def slog(phi: int, n: int) -> int:
    """Largest ``k`` with ``tetration(phi, k) <= n``."""
    if phi < 2:
        raise ValueError("slog needs phi >= 2")
    if n < 1:
        raise ValueError("slog needs n >= 1")
    k, value = 0, 1
    limit = n.bit_length()
    while True:
        # phi**value > n is certain once value*log2(phi) >= bit_length(n)
        if value * (phi.bit_length() - 1) >= limit:
            return k
        nxt = phi**value
        if nxt > n:
            return k
        k, value = k + 1, nxt


def evaluate(e: Expr, max_bits: int = DEFAULT_MAX_BITS) -> int:
    match e:
        case Num(v):
            return v
        case Add(l, r):
            return evaluate(l, max_bits) + evaluate(r, max_bits)
        case Mul(l, r):
            return evaluate(l, max_bits) * evaluate(r, max_bits)
        case Exp(b, p):
            return _checked_pow(evaluate(b, max_bits), evaluate(p, max_bits), max_bits)
    raise TypeError(f"not an expression: {e!r}")


@lru_cache(maxsize=None)
def tet_expr(phi: int, i: int) -> Expr:
    """``phi↑↑i`` as the right-nested tower ``Exp(phi, Exp(phi, ... phi))``."""
    if i < 1:
        raise ValueError("towers start at i = 1")
    e: Expr = Num(phi)
    for _ in range(i - 1):
        e = Exp(Num(phi), e)
    return e


def _right_sum(parts: list[Expr]) -> Expr:
    e = parts[-1]
    for part in reversed(parts[:-1]):
        e = Add(part, e)
    return e


@lru_cache(maxsize=1 << 16)
def partition(nbar: int, phi: int) -> Expr:
    """RTP expression for a positive multiple ``nbar`` of ``phi``."""
    if nbar <= 0 or nbar % phi:
        raise ValueError(f"{nbar} is not a positive multiple of {phi}")
    if nbar <= phi:
        return Num(nbar)
    k = slog(phi, nbar)
    rest = nbar
    terms: list[Expr] = []
    # p_k < phi↑↑(k+1) follows from the maximality of k; lower
    # coefficients are checked against the previous tower
    upper = None
    for i in range(k, 0, -1):
        t_i = tetration(phi, i)
        p_i, rest = divmod(rest, t_i)
        if upper is not None and not 0 <= p_i < upper:
            raise AssertionError(f"greedy coefficient {p_i} out of range for i={i}")
        upper = t_i
        if p_i == 0:
            continue
        r_i = p_i % phi
        pieces: list[Expr] = []
        if p_i - r_i:
            pieces.append(Mul(tet_expr(phi, i), partition(p_i - r_i, phi)))
        if r_i:
            pieces.append(_right_sum([tet_expr(phi, i)] * r_i))
        terms.append(pieces[0] if len(pieces) == 1 else Add(pieces[0], pieces[1]))
    if rest:
        raise AssertionError(f"nonzero residue {rest} after partitioning {nbar}")
    return _right_sum(terms)


@dataclass(frozen=True)
class RtpDecomposition:
    n: int
    phi: int
    r: int
    expr: Expr

    @property
    def nbar(self) -> int:
        return self.n - self.r


def rtp(n: int, phi: int) -> RtpDecomposition:
    """Decompose ``n`` with base ``phi`` (``2 <= phi <= n``)."""
    if phi < 2:
        raise ValueError("phi must be >= 2")
    if phi > n:
        raise ValueError(f"phi={phi} exceeds n={n}")
    r = n % phi
    return RtpDecomposition(n, phi, r, partition(n - r, phi))


def count_ops(e: Expr) -> tuple[int, int, int]:
    """Counts of (Add, Mul, Exp) nodes."""
    counts = [0, 0, 0]
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Add):
            counts[0] += 1
            stack += (node.left, node.right)
        elif isinstance(node, Mul):
            counts[1] += 1
            stack += (node.left, node.right)
        elif isinstance(node, Exp):
            counts[2] += 1
            stack += (node.base, node.power)
    return counts[0], counts[1], counts[2]


def leaves(e: Expr) -> list[int]:
    out = []
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Num):
            out.append(node.value)
        elif isinstance(node, Exp):
            stack += (node.power, node.base)
        else:
            stack += (node.right, node.left)
    return out


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _tower_height(e: Expr) -> tuple[int, int] | None:
    bases = []
    while isinstance(e, Exp):
        if not isinstance(e.base, Num):
            return None
        bases.append(e.base.value)
        e = e.power
    if not bases or not isinstance(e, Num) or set(bases) != {e.value}:
        return None
    return e.value, len(bases) + 1


def format_expr(e: Expr) -> str:
    """Human-readable form, e.g. ``²2³·(²2²·2+²2²)+²2²·2``."""
    match e:
        case Num(v):
            return str(v)
        case Add(l, r):
            return f"{format_expr(l)}+{format_expr(r)}"
        case Mul(l, r):
            parts = []
            for side in (l, r):
                s = format_expr(side)
                parts.append(f"({s})" if isinstance(side, Add) else s)
            return "·".join(parts)
        case Exp(b, p):
            tower = _tower_height(e)
            if tower is not None:
                base, height = tower
                return f"²{base}{str(height).translate(_SUPERSCRIPT)}"
            bs, ps = format_expr(b), format_expr(p)
            if not isinstance(b, Num):
                bs = f"({bs})"
            if not isinstance(p, Num):
                ps = f"({ps})"
            return f"{bs}^{ps}"
    raise TypeError(f"not an expression: {e!r}")
