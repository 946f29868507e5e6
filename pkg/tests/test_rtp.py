import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from church_compact.rtp import (
    Add,
    Exp,
    MagnitudeError,
    Mul,
    Num,
    count_ops,
    evaluate,
    format_expr,
    leaves,
    rtp,
    slog,
    tet_expr,
    tetration,
)

T2 = Exp(Num(2), Num(2))
T3 = Exp(Num(2), Exp(Num(2), Num(2)))
EXPR_200 = Add(Mul(T3, Add(Mul(T2, Num(2)), T2)), Mul(T2, Num(2)))


def slog_oracle(phi, n):
    k = 0
    while tetration(phi, k + 1) <= n:
        k += 1
    return k


def addends(e):
    if isinstance(e, Add):
        yield from addends(e.left)
        yield from addends(e.right)
    else:
        yield e


def tower_level(e, phi):
    for i in range(1, 6):
        if e == tet_expr(phi, i):
            return i
    return None


def coefficients(expr, phi):
    """Recover ``{i: p_i}`` from the top-level sum of an RTP expression."""
    out = Counter()
    for term in addends(expr):
        i = tower_level(term, phi)
        if i is not None:
            out[i] += 1
        else:
            assert isinstance(term, Mul)
            out[tower_level(term.left, phi)] += evaluate(term.right)
    return out


class TestTetration:
    @pytest.mark.parametrize("phi, i, value", [(2, 4, 65536), (7, 0, 1), (2, 3, 16), (3, 2, 27), (2, 1, 2)])
    def test_examples(self, phi, i, value):
        assert tetration(phi, i) == value

    def test_tower_identity(self):
        for phi in range(2, 6):
            for i in range(1, 4):
                assert tetration(phi, i) == phi ** tetration(phi, i - 1)

    def test_magnitude_cap(self):
        with pytest.raises(MagnitudeError):
            tetration(2, 6)
        with pytest.raises(MagnitudeError):
            tetration(3, 4, max_bits=1000)
        assert tetration(2, 5).bit_length() == 65537


class TestSlog:
    @pytest.mark.parametrize("phi, n, k", [(2, 16, 3), (2, 200, 3), (2, 1, 0), (2, 15, 2), (3, 27, 2), (10, 9, 0)])
    def test_examples(self, phi, n, k):
        assert slog(phi, n) == k

    def test_inverse_of_tetration(self):
        for phi in range(2, 8):
            for i in range(0, 6 if phi == 2 else 4 if phi <= 5 else 3):
                assert slog(phi, tetration(phi, i)) == i

    def test_matches_oracle(self):
        for phi in range(2, 12):
            for n in range(1, 3000):
                assert slog(phi, n) == slog_oracle(phi, n)

    def test_huge_argument(self):
        assert slog(2, 2**65536) == 5
        assert slog(2, 2**65536 - 1) == 4

    def test_errors(self):
        with pytest.raises(ValueError):
            slog(1, 5)
        with pytest.raises(ValueError):
            slog(2, 0)


class TestEvaluate:
    def test_example_200(self):
        assert evaluate(EXPR_200) == 200

    def test_trivial(self):
        assert evaluate(Num(7)) == 7
        assert evaluate(Exp(Num(2), Num(10))) == 1024

    def test_literals_positive(self):
        with pytest.raises(ValueError):
            Num(0)


class TestRtp:
    def test_201(self):
        d = rtp(201, 2)
        assert d.r == 1 and d.nbar == 200
        assert d.expr == EXPR_200
        assert format_expr(d.expr) == "²2³·(²2²·2+²2²)+²2²·2"

    def test_9_base_3(self):
        d = rtp(9, 3)
        assert d.expr == Mul(Num(3), Num(3)) and d.r == 0

    def test_5_base_2(self):
        d = rtp(5, 2)
        assert d.expr == Exp(Num(2), Num(2)) and d.r == 1

    def test_small_multiple_is_literal(self):
        assert rtp(7, 4).expr == Num(4)
        assert rtp(7, 7).expr == Num(7) and rtp(7, 7).r == 0

    def test_preconditions(self):
        for n, phi in [(5, 1), (5, 0), (5, 6)]:
            with pytest.raises(ValueError):
                rtp(n, phi)

    def test_invariants_exhaustive(self):
        for n in range(2, 5001):
            for phi in range(2, n + 1):
                d = rtp(n, phi)
                assert 0 <= d.r < phi and d.r == n % phi
                assert evaluate(d.expr) + d.r == n
                assert set(leaves(d.expr)) == {phi}

    def test_deterministic(self):
        for n in (201, 4097, 65536, 99991):
            assert rtp(n, 2) == rtp(n, 2)
        from church_compact.rtp import partition

        before = rtp(3000, 3).expr
        partition.cache_clear()
        assert rtp(3000, 3).expr == before

    def test_greedy_coefficient_bound(self):
        for n in range(2, 3000):
            for phi in range(2, min(n, 40) + 1):
                d = rtp(n, phi)
                if d.nbar <= phi:
                    continue
                coeffs = coefficients(d.expr, phi)
                assert sum(p * tetration(phi, i) for i, p in coeffs.items()) == d.nbar
                for i, p in coeffs.items():
                    assert 0 <= p < tetration(phi, i + 1)
                assert 0 not in coeffs

    @given(st.integers(2, 10**30), st.integers(2, 50))
    def test_large_values(self, n, phi):
        if phi > n:
            return
        d = rtp(n, phi)
        assert evaluate(d.expr) + d.r == n
        assert set(leaves(d.expr)) == {phi}
        assert count_ops(d.expr)[0] <= 200 * math.log2(n)


class TestCountOps:
    def test_example_200(self):
        # two additions, three multiplications (²2³·…, ²2²·2 twice), five exponentiations
        assert count_ops(EXPR_200) == (2, 3, 5)

    def test_trivial(self):
        assert count_ops(Num(3)) == (0, 0, 0)
        assert count_ops(Exp(Num(2), Exp(Num(2), Num(2)))) == (0, 0, 2)

    def test_leaves(self):
        assert leaves(EXPR_200) == [2] * 11


def test_format_general_exp():
    assert format_expr(Exp(Add(Num(2), Num(2)), Num(3))) == "(2+2)^3"
    assert format_expr(Mul(Num(3), Num(3))) == "3·3"
