"""De Bruijn lambda terms: representation, size, text format.

Terms are immutable. Every node caches its size, a hash, and ``free_bound``
(one more than the largest free de Bruijn index, or 0 for a closed term), so
``size`` and ``is_closed`` are O(1) and structural equality never recurses on
the Python stack. Terms produced by this package can be thousands of levels
deep (``church(10000)``), which rules out naive recursive traversals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

__all__ = [
    "Var",
    "Abs",
    "App",
    "Const",
    "Term",
    "ParseError",
    "MAX_INDEX",
    "size",
    "is_closed",
    "parse",
    "pretty",
    "apply",
    "lams",
]

LAMBDA = "λ"
MAX_INDEX = 2**31 - 1
_RESERVED = set("λ.()")


def _valid_const(symbol: str) -> bool:
    return (
        len(symbol) == 1
        and symbol.isprintable()
        and not symbol.isspace()
        and not symbol.isdigit()
        and symbol not in _RESERVED
    )


@dataclass(frozen=True, eq=False, slots=True)
class Var:
    index: int
    size: int = field(init=False, repr=False)
    free_bound: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative de Bruijn index {self.index}")
        object.__setattr__(self, "size", 1)
        object.__setattr__(self, "free_bound", self.index + 1)
        object.__setattr__(self, "_hash", hash(("var", self.index)))

    def __eq__(self, other):
        return _term_eq(self, other)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=False, slots=True)
class Const:
    symbol: str
    size: int = field(init=False, repr=False)
    free_bound: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        if not _valid_const(self.symbol):
            raise ValueError(f"invalid terminal symbol {self.symbol!r}")
        object.__setattr__(self, "size", 1)
        object.__setattr__(self, "free_bound", 0)
        object.__setattr__(self, "_hash", hash(("const", self.symbol)))

    def __eq__(self, other):
        return _term_eq(self, other)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=False, slots=True)
class Abs:
    body: Term
    size: int = field(init=False, repr=False)
    free_bound: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", self.body.size + 1)
        object.__setattr__(self, "free_bound", max(self.body.free_bound - 1, 0))
        object.__setattr__(self, "_hash", hash(("abs", self.body._hash)))

    def __eq__(self, other):
        return _term_eq(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Abs({pretty(self)!r})" if self.size > 40 else f"Abs(body={self.body!r})"


@dataclass(frozen=True, eq=False, slots=True)
class App:
    fun: Term
    arg: Term
    size: int = field(init=False, repr=False)
    free_bound: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", self.fun.size + self.arg.size + 1)
        object.__setattr__(
            self, "free_bound", max(self.fun.free_bound, self.arg.free_bound)
        )
        object.__setattr__(
            self, "_hash", hash(("app", self.fun._hash, self.arg._hash))
        )

    def __eq__(self, other):
        return _term_eq(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"App({pretty(self)!r})" if self.size > 40 else f"App(fun={self.fun!r}, arg={self.arg!r})"


Term = Union[Var, Abs, App, Const]
_TERM_TYPES = (Var, Abs, App, Const)


def _term_eq(a, b) -> bool:
    if not isinstance(b, _TERM_TYPES):
        return NotImplemented
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y) or x._hash != y._hash or x.size != y.size:
            return False
        if type(x) is Var:
            if x.index != y.index:
                return False
        elif type(x) is Const:
            if x.symbol != y.symbol:
                return False
        elif type(x) is Abs:
            stack.append((x.body, y.body))
        else:
            stack.append((x.fun, y.fun))
            stack.append((x.arg, y.arg))
    return True


def size(t: Term) -> int:
    """Number of symbols: 1 per variable or constant, +1 per abstraction and application."""
    return t.size


def is_closed(t: Term) -> bool:
    return t.free_bound == 0


def apply(head: Term, *args: Term) -> Term:
    """Left-associated application ``(head a1 a2 ...)``."""
    for a in args:
        head = App(head, a)
    return head


def lams(count: int, body: Term) -> Term:
    for _ in range(count):
        body = Abs(body)
    return body


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _church_value_of_shape(t: Term) -> int | None:
    if type(t) is not Abs or type(t.body) is not Abs:
        return None
    n = 0
    node = t.body.body
    while type(node) is App:
        if type(node.fun) is not Var or node.fun.index != 1:
            return None
        n += 1
        node = node.arg
    if type(node) is Var and node.index == 0:
        return n
    return None


def pretty(t: Term, sugar: bool = False) -> str:
    """Canonical text of ``t``.

    Applications are flattened left-associatively inside one pair of
    parentheses; abstractions print as ``λ.`` followed by their body. With
    ``sugar=True`` every Church-numeral subterm prints as ``C<n>``.
    """
    out: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if type(item) is str:
            out.append(item)
            continue
        if sugar and type(item) is Abs:
            n = _church_value_of_shape(item)
            if n is not None:
                out.append(f"C{n}")
                continue
        kind = type(item)
        if kind is Var:
            out.append(str(item.index))
        elif kind is Const:
            out.append(item.symbol)
        elif kind is Abs:
            out.append(LAMBDA + ".")
            stack.append(item.body)
        else:
            args = []
            head = item
            while type(head) is App:
                args.append(head.arg)
                head = head.fun
            args.reverse()
            stack.append(")")
            for a in reversed(args):
                stack.append(a)
                stack.append(" ")
            stack.append(head)
            stack.append("(")
    return "".join(out)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str):
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "λ.()":
            yield ch, ch, i
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            value = int(text[i:j])
            if value > MAX_INDEX:
                raise ParseError(f"index {value} overflows", i)
            yield "index", value, i
            i = j
        elif ch == "C" and i + 1 < n and (text[i + 1].isdigit() or text[i + 1] == "("):
            # sugar: C<n> or C(<n>)
            j = i + 1
            paren = text[j] == "("
            if paren:
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j or (paren and (k >= n or text[k] != ")")):
                if paren:
                    # plain constant C followed by a parenthesised term
                    yield "const", ch, i
                    i += 1
                    continue
                raise ParseError("malformed numeral sugar", i)
            yield "church", int(text[j:k]), i
            i = k + 1 if paren else k
        elif _valid_const(ch):
            yield "const", ch, i
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)


def parse(text: str) -> Term:
    """Parse the canonical text format (see :func:`pretty`).

    Redundant parentheses around a single term are accepted, as is the
    numeral sugar ``C<n>`` / ``C(<n>)``.
    """
    from .numerals import church

    stack: list = []  # entries: "lam" or [start_pos, items]
    result = None
    expect_dot = None
    for kind, value, pos in _tokenize(text):
        if expect_dot is not None:
            if kind != ".":
                raise ParseError("expected '.' after λ", pos)
            expect_dot = None
            stack.append("lam")
            continue
        if result is not None:
            raise ParseError("trailing input", pos)
        if kind == "λ":
            expect_dot = pos
            continue
        if kind == "(":
            stack.append([pos, []])
            continue
        if kind == ".":
            raise ParseError("unexpected '.'", pos)
        if kind == ")":
            if not stack or stack[-1] == "lam":
                raise ParseError("unexpected ')'", pos)
            _, items = stack.pop()
            if not items:
                raise ParseError("empty parentheses", pos)
            done = apply(*items)
        elif kind == "index":
            done = Var(value)
        elif kind == "const":
            done = Const(value)
        else:
            done = church(value)
        while stack and stack[-1] == "lam":
            stack.pop()
            done = Abs(done)
        if stack:
            stack[-1][1].append(done)
        else:
            result = done
    if expect_dot is not None:
        raise ParseError("expected '.' after λ", len(text))
    if result is None or stack:
        raise ParseError("unexpected end of input", len(text))
    return result
