from fractions import Fraction as F
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from opx.exactnum import DomainError, Surd, UsageError
from opx.families import Meixner2, PiBeta, Su11Plus
from opx.favard import inverse_coeffs, moments
from opx.motzkin import transfer_total
from opx.tridiag import (
    EIGENVECTOR_LABEL,
    TridiagonalOperator,
    all_words,
    eigenvector_coeffs,
    entry_prefactor,
    h_space_residuals,
    matrix_entry,
    p_space_residuals,
    truncated_power_oracle,
    word_entry,
)


def generic():
    """Rational operator with distinct entries so index slips show up."""
    return TridiagonalOperator(lambda n: F(n + 2), lambda n: F(2 * n - 3, 5), lambda n: F(-1, n + 3))


def su11(k, c=0):
    return Su11Plus(F(k), F(c)).operator()


class TestWords:
    def test_examples(self):
        T = generic()
        assert word_entry(T, "UL", 0, 0) == T.lam(1)
        assert word_entry(T, "LU", 0, 0) == 0
        assert word_entry(T, "D", 3, 0) == T.d(3)

    def test_bad_letter(self):
        with pytest.raises(UsageError):
            word_entry(generic(), "LX", 0, 1)

    def test_vanishing_outside_quadrant(self):
        T = generic()
        for m in range(7):
            for w in all_words(m):
                for i in range(3):
                    level, dipped = i, False
                    for letter in reversed(w):
                        level += {"L": 1, "U": -1, "D": 0}[letter]
                        dipped = dipped or level < 0
                    for d in range(-i, 4):
                        if dipped or level != i + d:
                            assert word_entry(T, w, i, d) == 0

    @pytest.mark.parametrize("op", [generic(), su11(1, F(1, 2)), su11(F(3, 2))])
    def test_word_expansion_equals_power_entry(self, op):
        for m in range(6):
            for i in range(3):
                for d in range(-min(i, 2), 3):
                    total = Surd(0)
                    for w in all_words(m):
                        total = total + word_entry(op, w, i, d)
                    assert total == matrix_entry(op, m, i, d)


class TestMatrixEntry:
    def test_secant_entry(self):
        assert matrix_entry(su11(F(1, 2)), 4, 0, 0) == 5

    def test_all_up_path(self):
        T = su11(F(3, 2), 1)
        for d in range(5):
            assert matrix_entry(T, d, 0, d) == entry_prefactor(T, 0, d)

    def test_surd_prefactor(self):
        T = su11(1)
        assert matrix_entry(T, 2, 0, 2) == Surd(2, 3)
        P = truncated_power_oracle(T, 2, 6, "float")
        assert P[2][0] == pytest.approx(2 * np.sqrt(3), rel=1e-12)

    def test_negative_offset_uses_reversed_path_total(self):
        # <e_0, T e_1> = u_0; the path total must run from level 0 to 1, not 1 to 0
        T = generic()
        assert matrix_entry(T, 1, 1, -1) == T.u(0)
        wrong = entry_prefactor(T, 1, -1) * transfer_total(1, 1, 0, T.valuation())
        assert wrong != T.u(0)

    def test_domain(self):
        with pytest.raises(DomainError):
            matrix_entry(generic(), 2, 0, -1)

    def test_exact_oracle(self):
        T = generic()
        for m in range(8):
            P = truncated_power_oracle(T, m, 3 + m + 3)
            for i in range(4):
                for d in range(-i, 4):
                    assert matrix_entry(T, m, i, d) == P[i + d][i]

    def test_truncation_rule(self):
        T = generic()
        for m in range(6):
            for i in range(3):
                tight = truncated_power_oracle(T, m, i + m)
                wide = truncated_power_oracle(T, m, i + m + 5)
                for r in range(i + m + 1):
                    assert tight[r][i] == wide[r][i]

    def test_oracle_examples(self):
        T = generic()
        P = truncated_power_oracle(T, 0, 4)
        assert P == [[F(int(r == c)) for c in range(5)] for r in range(5)]
        fubini = TridiagonalOperator(lambda n: F(1), lambda n: F(3 * n + 1), lambda n: F(2 * (n + 1) ** 2))
        assert truncated_power_oracle(fubini, 3, 6)[0][0] == 13
        P = truncated_power_oracle(su11(F(1, 2)), 8, 12, "float")
        assert abs(P[0][0] - 1385) < 1e-9

    def test_exact_oracle_rejects_surds(self):
        with pytest.raises(UsageError):
            truncated_power_oracle(su11(1), 2, 4, "exact")
        with pytest.raises(UsageError):
            truncated_power_oracle(generic(), 2, 4, "modular")

    @given(rationals(1, 8, 4), rationals(-3, 3, 4), st.integers(0, 10))
    def test_moments_and_inverse(self, k, c, m):
        T = Su11Plus(k, c).operator()
        assert matrix_entry(T, m, 0, 0) == moments(T.recurrence(), m)[m]
        q = inverse_coeffs(T.recurrence(), m)
        for d in range(m + 1):
            assert matrix_entry(T, m, 0, d) == entry_prefactor(T, 0, d) * q[m][d]

    def test_apply(self):
        T = su11(1)
        assert T.apply({0: F(1)}) == {0: 0, 1: Surd(1, 2)}
        out = T.apply({2: F(1)})
        assert out[1] == T.u(1) and out[3] == T.l(2)


class TestEigenvectors:
    def test_first_coefficients(self):
        T = su11(1, 1)
        z = F(1, 3)
        p, h = eigenvector_coeffs(T, z, 3)
        assert h[0] == 1
        assert h[1] == (z - T.d(0)) / T.u(0)

    def test_meixner2_values(self):
        T = Meixner2(F(0), F(1)).operator()
        p, _ = eigenvector_coeffs(T, F(0), 4)
        assert p == [1, 0, -1, 0, 9]

    def test_zero_u_rejected(self):
        with pytest.raises(DomainError, match="u_0"):
            eigenvector_coeffs(PiBeta(F(0)).operator(), F(1), 3)

    def test_float_residual_example(self):
        T = su11(1)
        p, h = eigenvector_coeffs(T, F(1, 2), 30)
        res = h_space_residuals(T, F(1, 2), h, exact=False)
        assert max(abs(r) for r in res[:28]) < 1e-10

    @given(rationals(1, 6, 4), rationals(-2, 2, 3), rationals(-4, 4, 3))
    def test_recurrences_hold_exactly(self, k, c, z):
        T = Su11Plus(k, c).operator()
        p, h = eigenvector_coeffs(T, z, 20)
        assert not any(p_space_residuals(T, z, p))
        assert not any(h_space_residuals(T, z, h))
        assert all(abs(r) < 1e-12 for r in h_space_residuals(T, z, h, exact=False, relative=True))

    def test_label(self):
        assert EIGENVECTOR_LABEL == "formal eigenvector coefficients"
