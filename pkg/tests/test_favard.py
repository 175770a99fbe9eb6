import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from opx.exactnum import DomainError, ParamPoly, UsageError
from opx.favard import (
    Poly,
    RecurrencePair,
    build_ops,
    change_of_basis_oracle,
    functional_apply,
    inverse_coeffs,
    mixed_moment_check,
    moments,
    recurrence_from_polys,
    table_to_json,
)
from opx.families import Laguerre, Meixner1, Meixner2

alpha = ParamPoly.symbol("alpha")
eta = ParamPoly.symbol("eta")
x = Poly.x()


def random_rec(seed, size=14, zero_at=()):
    rng = random.Random(seed)
    bs = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(size + 1)]
    lams = [F(0) if n in zero_at else F(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 4))
            for n in range(1, size + 1)]
    return RecurrencePair(bs, lams)


seeds = st.integers(0, 2**32)


class TestBuildOps:
    def test_laguerre_p2(self):
        p = build_ops(Laguerre(alpha).recurrence(), 2)
        assert p[2] == x * x - (2 * alpha + 4) * x + (alpha + 1) * (alpha + 2)

    def test_meixner2_p3(self):
        p = build_ops(Meixner2(F(0), F(1)).recurrence(), 3)
        assert p[3] == x * x * x - 5 * x

    def test_p0(self):
        assert build_ops(random_rec(1), 0) == [Poly((1,))]

    def test_degree_guard(self):
        with pytest.raises(UsageError):
            build_ops(random_rec(2, 40), 33)

    def test_lambda_zero_index(self):
        with pytest.raises(DomainError):
            Laguerre(alpha).recurrence().lam(0)

    def test_ops_flag(self):
        rec = RecurrencePair([F(0)] * 4, [F(1), F(0), F(1)], ops=True)
        with pytest.raises(DomainError):
            build_ops(rec, 3)

    @given(seeds)
    def test_recurrence_recovered(self, seed):
        rec = random_rec(seed)
        bs, lams = recurrence_from_polys(build_ops(rec, 8))
        assert bs == [rec.b(n) for n in range(8)]
        assert lams == [rec.lam(n) for n in range(1, 8)]

    def test_broken_recurrence_detected(self):
        seq = [Poly((1,)), x, x * x * x]
        with pytest.raises(DomainError):
            recurrence_from_polys(seq + [x])
        seq = [Poly((1,)), x, x * x, x * x * x + 1]
        with pytest.raises(DomainError):
            recurrence_from_polys(seq)


class TestMoments:
    def test_laguerre(self):
        mu = moments(Laguerre(alpha).recurrence(), 6)
        prod = ParamPoly("alpha", (1,))
        for n, m in enumerate(mu):
            assert m == prod
            prod = prod * (alpha + n + 1)

    def test_fubini(self):
        assert moments(Meixner1(F(1), F(1, 2)).recurrence(), 5) == [1, 1, 3, 13, 75, 541]

    def test_double_factorials(self):
        mu = moments(RecurrencePair(lambda n: F(0), lambda n: F(n)), 6)
        assert (mu[2], mu[4], mu[6]) == (1, 3, 15)

    @given(seeds)
    def test_mu0(self, seed):
        assert moments(random_rec(seed), 0) == [1]


class TestInverse:
    def test_examples(self):
        q = inverse_coeffs(Laguerre(alpha).recurrence(), 3)
        assert q[2][1] == 2 * (alpha + 2)
        q = inverse_coeffs(Meixner2(F(0), eta).recurrence(), 3)
        assert q[3][1] == 3 * eta + 2
        assert all(q[n][n] == 1 for n in range(4))

    def test_oracle_examples(self):
        rec = random_rec(3)
        q = change_of_basis_oracle(build_ops(rec, 1), 1)
        assert q[0][0] == 1 and q[1][0] == rec.b(0)

    def test_oracle_rejects_non_monic(self):
        with pytest.raises(DomainError):
            change_of_basis_oracle([Poly((1,)), 2 * x], 1)

    @given(seeds, st.sets(st.integers(1, 9), max_size=2))
    def test_dp_matches_linear_algebra(self, seed, zeros):
        rec = random_rec(seed, zero_at=zeros)
        seq = build_ops(rec, 10)
        q = inverse_coeffs(rec, 10)
        assert q == change_of_basis_oracle(seq, 10)
        for n in range(11):
            assert sum((seq[k] * q[n][k] for k in range(n + 1)), Poly()) == Poly.monomial(n)

    @given(seeds)
    def test_dyck_parity(self, seed):
        rng = random.Random(seed)
        rec = RecurrencePair(lambda n: F(0), [F(rng.randint(1, 9)) for _ in range(12)])
        q = inverse_coeffs(rec, 10)
        assert all(q[n][k] == 0 for n in range(11) for k in range(n + 1) if (n - k) % 2)

    def test_json(self):
        q = inverse_coeffs(Laguerre(F(0)).recurrence(), 2)
        assert table_to_json(q) == [["1"], ["1", "1"], ["2", "4", "1"]]


class TestFunctional:
    def test_examples(self):
        rec = Laguerre(alpha).recurrence()
        mu = moments(rec, 4)
        p = build_ops(rec, 2)
        assert functional_apply(mu, Poly((1,))) == 1
        assert functional_apply(mu, p[1]) == 0
        assert functional_apply(mu, x * x) == (alpha + 1) * (alpha + 2)

    def test_needs_enough_moments(self):
        with pytest.raises(DomainError):
            functional_apply([F(1)], x)

    @given(seeds)
    def test_orthogonality(self, seed):
        rec = random_rec(seed)
        mu = moments(rec, 12)
        p = build_ops(rec, 6)
        for m in range(7):
            for n in range(7):
                want = rec.lam_product(n) if m == n else 0
                assert functional_apply(mu, p[m] * p[n]) == want

    def test_mixed_moment_examples(self):
        rec = Laguerre(F(0)).recurrence()
        assert mixed_moment_check(rec, 0, 1, 2) == (0, 0)
        lhs, rhs = mixed_moment_check(rec, 0, 3, 3)
        assert lhs == rhs == rec.lam_product(3)
        # p_1 = x - 1 and mu_n = n!, so f(x^2 (x-1)^2) = 4! - 2*3! + 2! = 14
        assert mixed_moment_check(rec, 2, 1, 1) == (14, 14)

    @given(seeds, st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
    def test_mixed_moments(self, seed, n, k, l):
        lhs, rhs = mixed_moment_check(random_rec(seed), n, k, l)
        assert lhs == rhs
