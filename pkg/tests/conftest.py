import pytest

from church_compact.term import Abs, App, Const, Var

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def reference_size(t):
    """Recursive size straight from the definition, ignoring cached fields."""
    if isinstance(t, (Var, Const)):
        return 1
    if isinstance(t, Abs):
        return reference_size(t.body) + 1
    return reference_size(t.fun) + reference_size(t.arg) + 1


def enumerate_closed(max_size, depth=0, consts=()):
    """All terms of size <= max_size whose free indices are < depth."""
    by_size = {}

    def terms(s, d):
        key = (s, d)
        if key in by_size:
            return by_size[key]
        out = []
        if s == 1:
            out += [Var(i) for i in range(d)] + [Const(c) for c in consts]
        if s >= 2:
            out += [Abs(b) for b in terms(s - 1, d + 1)]
        for left in range(1, s - 1):
            right = s - 1 - left
            for f in terms(left, d):
                for a in terms(right, d):
                    out.append(App(f, a))
        by_size[key] = out
        return out

    return [t for s in range(1, max_size + 1) for t in terms(s, depth)]


@pytest.fixture
def acceptance_record():
    def record(name, ok, detail=""):
        ACCEPTANCE_RESULTS[name] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
