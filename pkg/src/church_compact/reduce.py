"""Beta reduction and Church-numeral decoding.

``normalize`` performs leftmost-outermost reduction with an explicit step
budget. ``church_value`` decodes a numeral semantically by running the term
on a native successor and zero in an iterative call-by-value machine, which
scales to large numerals where syntactic normalization would be quadratic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .term import Abs, App, Term, Var

__all__ = [
    "DEFAULT_FUEL",
    "Fuel",
    "NormalizeOutcome",
    "NegativeIndexError",
    "NotANumeral",
    "LimitExceeded",
    "shift",
    "substitute",
    "normalize",
    "church_value",
]

DEFAULT_FUEL = 10**7


class NegativeIndexError(ValueError):
    """A shift would produce a negative de Bruijn index."""


class NotANumeral(ValueError):
    pass


class LimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Fuel:
    max_steps: int = DEFAULT_FUEL

    def __post_init__(self):
        if self.max_steps <= 0:
            raise ValueError("fuel must be positive")


@dataclass(frozen=True)
class NormalizeOutcome:
    term: Term
    steps: int
    exhausted: bool = False

    @property
    def result(self) -> Term | None:
        """The normal form, or None when fuel ran out first."""
        return None if self.exhausted else self.term


def _map_free(t: Term, cutoff: int, on_var) -> Term:
    """Rebuild ``t`` replacing each free variable (index >= binder depth).

    ``on_var(var, depth)`` gives the replacement. Subterms without such
    variables are shared, not copied. Iterative, so depth is unbounded.
    """
    out: list[Term] = []
    stack = [(t, cutoff, False)]
    while stack:
        node, c, built = stack.pop()
        if built:
            if type(node) is Abs:
                out.append(Abs(out.pop()))
            else:
                arg = out.pop()
                out.append(App(out.pop(), arg))
            continue
        if node.free_bound <= c:
            out.append(node)
            continue
        kind = type(node)
        if kind is Var:
            out.append(on_var(node, c))
        elif kind is Abs:
            stack.append((node, c, True))
            stack.append((node.body, c + 1, False))
        else:
            stack.append((node, c, True))
            stack.append((node.arg, c, False))
            stack.append((node.fun, c, False))
    return out[0]


def _shift(t: Term, delta: int, cutoff: int) -> Term:
    def on_var(v: Var, _depth: int) -> Term:
        new = v.index + delta
        if new < 0:
            raise NegativeIndexError(f"shift of Var({v.index}) by {delta}")
        return Var(new)

    return _map_free(t, cutoff, on_var)


def shift(t: Term, delta: int, cutoff: int = 0) -> Term:
    """Add ``delta`` to every free index ``>= cutoff``."""
    if delta == 0:
        return t
    return _shift(t, delta, cutoff)


def _subst(body: Term, arg: Term) -> Term:
    cache: dict[int, Term] = {}

    def on_var(v: Var, depth: int) -> Term:
        if v.index != depth:
            return Var(v.index - 1)
        shifted = cache.get(depth)
        if shifted is None:
            shifted = cache[depth] = _shift(arg, depth, 0) if depth else arg
        return shifted

    return _map_free(body, 0, on_var)


def substitute(body: Term, arg: Term) -> Term:
    """Contract ``(λ.body) arg``: replace index 0 by ``arg`` and lower outer indices."""
    return _subst(body, arg)


class _Budget:
    __slots__ = ("left", "used")

    def __init__(self, steps: int):
        self.left = steps
        self.used = 0


_UNDER_ABS = object()


def _nf(t: Term, budget: _Budget) -> Term:
    # continuation frames: _UNDER_ABS, or [partial application, args, next index]
    konts: list = []
    while True:
        while True:
            kind = type(t)
            if kind is Abs:
                konts.append(_UNDER_ABS)
                t = t.body
                continue
            if kind is not App:
                value = t
                break
            args = []
            head = t
            while type(head) is App:
                args.append(head.arg)
                head = head.fun
            if type(head) is Abs:
                if budget.left == 0:
                    value = t
                    break
                budget.left -= 1
                budget.used += 1
                t = _subst(head.body, args.pop())
                while args:
                    t = App(t, args.pop())
                continue
            args.reverse()
            konts.append([head, args, 0])
            t = args[0]
        while konts:
            k = konts[-1]
            if k is _UNDER_ABS:
                konts.pop()
                value = Abs(value)
                continue
            k[0] = App(k[0], value)
            k[2] += 1
            if k[2] < len(k[1]):
                t = k[1][k[2]]
                break
            konts.pop()
            value = k[0]
        else:
            return value


def normalize(t: Term, fuel: Fuel | int = DEFAULT_FUEL) -> NormalizeOutcome:
    """Reduce ``t`` to beta-normal form in normal order.

    Each beta-contraction costs one step. When the budget runs out the
    partially reduced term is returned with ``exhausted=True``.
    """
    steps = fuel.max_steps if isinstance(fuel, Fuel) else Fuel(fuel).max_steps
    budget = _Budget(steps)
    out = _nf(t, budget)
    exhausted = budget.left == 0 and _has_redex(out)
    return NormalizeOutcome(out, budget.used, exhausted)


def _has_redex(t: Term) -> bool:
    stack = [t]
    while stack:
        x = stack.pop()
        if type(x) is Abs:
            stack.append(x.body)
        elif type(x) is App:
            if type(x.fun) is Abs:
                return True
            stack.append(x.fun)
            stack.append(x.arg)
    return False


# ---------------------------------------------------------------------------
# Semantic decoding
# ---------------------------------------------------------------------------


class _Closure:
    __slots__ = ("body", "env")

    def __init__(self, body, env):
        self.body = body
        self.env = env


_SUCC = object()
_STUCK = object()  # constants, free variables and anything applied to them


def church_value(t: Term, limit: int = 10**9, max_steps: int = DEFAULT_FUEL) -> int:
    """Decode a term that behaves as a Church numeral.

    The term is applied to a native successor and to zero and evaluated
    call-by-value. ``limit`` bounds the successor applications (the decoded
    value), ``max_steps`` bounds closure entries.
    """
    # continuation frames: (0, term, env) evaluate argument next;
    # (1, fun_value) apply fun_value to the returned value;
    # (2, arg_value) apply the returned value to arg_value
    frames: list = [(2, 0), (2, _SUCC)]
    term, env = t, None
    value = None
    evaluating = True
    succ_count = 0
    steps = 0
    while True:
        if evaluating:
            kind = type(term)
            if kind is App:
                frames.append((0, term.arg, env))
                term = term.fun
                continue
            if kind is Abs:
                value = _Closure(term.body, env)
            elif kind is Var:
                e = env
                for _ in range(term.index):
                    if e is None:
                        break
                    e = e[1]
                value = _STUCK if e is None else e[0]
            else:
                value = _STUCK
            evaluating = False
            continue
        if not frames:
            break
        frame = frames.pop()
        if frame[0] == 0:
            frames.append((1, value))
            term, env = frame[1], frame[2]
            evaluating = True
            continue
        fun, arg = (frame[1], value) if frame[0] == 1 else (value, frame[1])
        if type(fun) is _Closure:
            steps += 1
            if steps > max_steps:
                raise LimitExceeded(f"evaluation exceeded {max_steps} steps")
            term, env = fun.body, (arg, fun.env)
            evaluating = True
        elif fun is _SUCC and type(arg) is int:
            succ_count += 1
            if succ_count > limit:
                raise LimitExceeded(f"numeral exceeds limit {limit}")
            value = arg + 1
        else:
            value = _STUCK
    if type(value) is not int:
        raise NotANumeral("term does not evaluate to a numeral")
    return value
