import math

import pytest

from church_compact.compact import (
    RECURSION_THRESHOLD,
    compact_min,
    compact_min_exhaustive,
    compact_recursive,
    compact_with_phi,
    function_part_size,
)
from church_compact.numerals import binary_church, church
from church_compact.reduce import church_value, normalize
from church_compact.rtp import rtp, slog, tetration
from church_compact.translate import translate

# frozen regression sentinel: max over n in [9, 10000] of final size / (slog2 n)^(ln n / ln ln n) is 4.2547 at n = 15
GROWTH_K = 4.26


class TestCompactMin:
    @pytest.mark.parametrize("n, expected", [(9, 20), (12, 24), (15, 28)])
    def test_table_rows(self, n, expected):
        assert compact_min(n).size == expected
        assert compact_min(n).phi_star == 3

    def test_small_n_stay_plain(self):
        for n in range(1, 9):
            best = compact_min(n)
            assert best.phi_star is None and best.size == 2 * n + 3
            assert best.term == church(n)
        assert compact_min(4).size == 11

    def test_pruned_search_matches_exhaustive(self):
        for n in range(1, 300):
            assert compact_min(n) == compact_min_exhaustive(n)

    def test_term_matches_reported_size(self):
        for n in (9, 100, 777, 2000):
            best = compact_min(n)
            assert best.term.size == best.size
            assert church_value(best.term) == n

    def test_below_plain_for_n_over_8(self):
        for n in range(9, 2001):
            assert compact_min(n).size < 2 * n + 3

    def test_function_part_not_larger_than_base_two(self):
        for n in range(9, 2001):
            best = compact_min(n)
            at_two = function_part_size(compact_with_phi(n, 2))
            assert function_part_size(best.translation) <= at_two

    def test_function_part_200_and_201(self):
        # the remainder (1 0) for 201 adds two symbols to the 41 of the bare display
        assert function_part_size(translate(rtp(200, 2))) == 41
        tr = translate(rtp(201, 2))
        assert function_part_size(tr) == 43
        assert tr.size == function_part_size(tr) + 2 * 2 + 3 + 1


class TestRecursive:
    def test_threshold(self):
        assert RECURSION_THRESHOLD == 8

    def test_eight_is_plain(self):
        res = compact_recursive(8)
        assert res.stages == () and res.final_term == compact_min(8).term

    def test_single_stage_when_base_small(self):
        res = compact_recursive(12)
        assert len(res.stages) == 1 and res.final_term == compact_min(12).term

    def test_chain_properties(self):
        for n in range(1, 2001):
            res = compact_recursive(n)
            phis = [s.phi_star for s in res.stages]
            assert all(a > b for a, b in zip(phis, phis[1:]))
            assert all(p > RECURSION_THRESHOLD for p in phis[:-1])
            assert res.final_size == res.final_term.size
            assert res.final_size <= compact_min(n).size <= 2 * n + 3

    def test_values(self):
        for n in range(1, 2001):
            assert church_value(compact_recursive(n).final_term) == n

    def test_normal_forms(self):
        for n in range(1, 150):
            assert normalize(compact_recursive(n).final_term).term == church(n)

    def test_chain_structure(self):
        res = compact_recursive(10000)
        t = res.final_term
        for stage in res.stages:
            assert t.fun == stage.function_part
            t = t.arg
        assert t == church(res.innermost)

    @pytest.mark.parametrize("n, expected", [(16, 20), (201, 48), (1000, 41), (10000, 49), (65536, 22)])
    def test_frozen_sizes(self, n, expected):
        assert compact_recursive(n).final_size == expected

    def test_best_case_towers(self):
        for k in (3, 4):
            n = tetration(2, k)
            assert slog(2, n) == k
            assert compact_recursive(n).final_size < binary_church(n).size


def test_growth_bound_sentinel():
    worst = 0.0
    for n in range(9, 10001):
        scale = slog(2, n) ** (math.log(n) / math.log(math.log(n)))
        worst = max(worst, compact_recursive(n).final_size / scale)
    assert worst <= GROWTH_K
