from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from opx.exactnum import ParamPoly, UsageError
from opx.families import Meixner1, Meixner2, meixner1_moment, meixner2_moment_series
from opx.favard import build_ops
from opx.permoracle import (
    cycle_lengths,
    descent_weighted_sum,
    down_up_odd_count,
    euler_table,
    left_to_right_minima,
    odd_cycle_counts,
    zigzag_minima_counts,
    zigzag_moment,
    zigzag_permutations,
)

eta = ParamPoly.symbol("eta")


class TestZigzag:
    def test_examples(self):
        assert zigzag_moment(2, eta) == eta
        assert zigzag_moment(4, eta) == 2 * eta + 3 * eta**2
        assert zigzag_moment(6, 1) == 61

    def test_pattern_convention(self):
        perms = set(zigzag_permutations(4))
        assert perms == {(1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)}
        assert [left_to_right_minima(p) for p in sorted(perms)] == [1, 1, 2, 2, 2]

    def test_odd_length_rejected(self):
        with pytest.raises(UsageError):
            list(zigzag_permutations(3))

    def test_guard(self):
        with pytest.raises(UsageError):
            zigzag_moment(12, eta)

    @pytest.mark.parametrize("two_n", [0, 2, 4, 6, 8, 10])
    def test_matches_sec_power(self, two_n):
        assert zigzag_moment(two_n, eta) == meixner2_moment_series(two_n, eta)


class TestEulerTable:
    def test_examples(self):
        E, T = euler_table(2)
        assert E[1][1] == 1 and T[0] == 1
        assert E[2][1] == 2 and E[2][2] == 3
        assert T[1] == down_up_odd_count(3) == 2

    def test_against_zigzag(self):
        E, T = euler_table(4)
        for n in range(5):
            poly = sum((eta**k * c for k, c in enumerate(E[n]) if c), F(0))
            assert poly == zigzag_moment(2 * n, eta)
            assert E[n][: 2 * n + 1] == zigzag_minima_counts(2 * n)[: len(E[n][: 2 * n + 1])]

    def test_tangent_numbers(self):
        _, T = euler_table(5)
        assert T == [1, 2, 16, 272, 7936]

    def test_guard(self):
        with pytest.raises(UsageError):
            euler_table(9)


class TestDescents:
    def test_examples(self):
        assert descent_weighted_sum(2, 2) == 3
        assert descent_weighted_sum(3, 2) == 13
        assert all(descent_weighted_sum(n, 0) == 1 for n in range(6))
        assert descent_weighted_sum(5, 1) == 120

    @pytest.mark.parametrize("n", range(8))
    def test_fubini_equals_meixner1(self, n):
        assert descent_weighted_sum(n, 2) == meixner1_moment(n, 1, F(1, 2))

    def test_guard(self):
        with pytest.raises(UsageError):
            descent_weighted_sum(10, 2)


class TestCycles:
    def test_examples(self):
        assert odd_cycle_counts(3) == [0, 5, 0, 1]
        assert odd_cycle_counts(1) == [0, 1]
        p3 = build_ops(Meixner2(F(0), F(1)).recurrence(), 3)[3]
        assert [abs(p3.coeff(j)) for j in range(4)] == [0, 5, 0, 1]

    def test_cycle_lengths(self):
        assert sorted(cycle_lengths((1, 0, 3, 4, 2))) == [2, 3]

    @pytest.mark.parametrize("n", range(9))
    def test_sum_and_parity(self, n):
        c = odd_cycle_counts(n)
        assert sum(c) == factorial(n)
        assert all(v == 0 for j, v in enumerate(c) if (j - n) % 2)

    @pytest.mark.parametrize("n", range(9))
    def test_meixner2_coefficients(self, n):
        p = build_ops(Meixner2(F(0), F(1)).recurrence(), n)[n]
        assert [abs(p.coeff(j)) for j in range(n + 1)] == odd_cycle_counts(n)
