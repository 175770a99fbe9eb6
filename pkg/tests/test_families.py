from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from opx import families as fm
from opx.exactnum import DomainError, ParamPoly, Surd, UsageError
from opx.favard import build_ops, inverse_coeffs, moments
from opx.tridiag import matrix_entry

alpha = ParamPoly.symbol("alpha")
eta = ParamPoly.symbol("eta")
k_values = rationals(1, 12, 4)


def first(rec, n=6):
    return [rec.b(i) for i in range(n)], [rec.lam(i) for i in range(1, n)]


class TestRecurrences:
    def test_laguerre(self):
        bs, lams = first(fm.Laguerre(alpha).recurrence())
        assert bs == [alpha + 2 * n + 1 for n in range(6)]
        assert lams == [n * (n + alpha) for n in range(1, 6)]

    def test_su11_plus_half(self):
        bs, lams = first(fm.Su11Plus(F(1, 2), F(0)).recurrence())
        assert bs == [0] * 6 and lams == [n * n for n in range(1, 6)]

    def test_hermite_zero(self):
        bs, lams = first(fm.GeneralizedHermite(F(0)).recurrence())
        assert bs == [0] * 6 and lams == list(range(1, 6))

    def test_meixner_formulas(self):
        beta, c = F(3, 2), F(-1, 3)
        bs, lams = first(fm.Meixner1(beta, c).recurrence())
        assert bs == [((1 + c) * n + beta * c) / (1 - c) for n in range(6)]
        assert lams == [c * n * (n + beta - 1) / (1 - c) ** 2 for n in range(1, 6)]
        delta, e = F(2, 3), F(5)
        bs, lams = first(fm.Meixner2(delta, e).recurrence())
        assert bs == [(2 * n + e) * delta for n in range(6)]
        assert lams == [(delta**2 + 1) * n * (n + e - 1) for n in range(1, 6)]

    def test_carlitz(self):
        _, lams = first(fm.CarlitzBPlusC(F(1)).recurrence())
        assert lams == [-n * (n + 1) for n in range(1, 6)]

    def test_validation(self):
        for bad in (lambda: fm.Meixner1(F(1), F(1)), lambda: fm.Meixner1(F(1), F(0)),
                    lambda: fm.Su11Plus(F(0)), lambda: fm.Su11Minus(F(-1)),
                    lambda: fm.PiBeta(F(-1, 2)), lambda: fm.CarlitzBPlusC(F(0)),
                    lambda: fm.SukumarHodges(F(3, 2))):
            with pytest.raises(DomainError):
                bad()

    @given(k_values, rationals(-3, 3, 4))
    def test_su11_minus_is_su11_plus_reflected(self, k, c):
        a = moments(fm.Su11Minus(k, c).recurrence(), 8)
        b = moments(fm.Su11Plus(k, -c).recurrence(), 8)
        assert a == b


class TestOperators:
    def test_su11_entries(self):
        k, c = F(3, 2), F(1, 2)
        T = fm.Su11Plus(k, c).operator()
        for n in range(1, 8):
            assert T.l(n) == Surd.sqrt((n + 1) * (2 * k + n))
            assert T.u(n - 1) == Surd.sqrt(n * (2 * k + n - 1))
            assert T.d(n) == 2 * c * (k + n)

    def test_carlitz_entries(self):
        k = F(1)
        T = fm.CarlitzBPlusC(k).operator()
        for n in range(1, 8):
            assert T.u(n - 1) == -Surd.sqrt(n * (2 * k + n - 1))
            assert T.lam(n) == -n * (n + 2 * k - 1)

    def test_hermite_entries(self):
        a = F(1, 2)
        T = fm.GeneralizedHermite(a).operator()
        for n in range(6):
            assert T.l(2 * n) == T.u(2 * n) == Surd.sqrt(2 * n + 1 + a)
            assert T.l(2 * n + 1) == T.u(2 * n + 1) == Surd.sqrt(2 * n + 2)

    def test_symbolic_operator_rejected(self):
        with pytest.raises(UsageError):
            fm.Laguerre(alpha).operator()
        with pytest.raises(UsageError):
            fm.Meixner2(F(0), eta).operator("monic")

    def test_unknown_split(self):
        with pytest.raises(UsageError):
            fm.Laguerre(F(1)).operator("cholesky")

    @pytest.mark.parametrize("fam", [
        fm.Laguerre(F(1, 2)), fm.Meixner1(F(2), F(1, 3)), fm.Meixner1(F(1), F(-2)),
        fm.Meixner2(F(1, 2), F(3)), fm.Su11Plus(F(1), F(2)), fm.Su11Minus(F(1, 2), F(1)),
        fm.PiBeta(F(5, 2), F(1)), fm.GeneralizedHermite(F(-1, 2)), fm.CarlitzBPlusC(F(3, 2)),
    ])
    @pytest.mark.parametrize("split", ["natural", "monic"])
    def test_products_reproduce_recurrence(self, fam, split):
        T = fam.operator(split)
        rec = fam.recurrence()
        for n in range(1, 15):
            assert T.lam(n) == rec.lam(n)
            assert T.diag(n - 1) == rec.b(n - 1)


class TestSukumarHodges:
    def test_spec_examples(self):
        assert fm.sh_entry(F(1), 8, 0, 0) == 1385
        assert fm.sh_entry(F(1), 4, 1, 1) == 16
        assert all(fm.sh_entry(F(1, 2), m, 0, 1) == 0 for m in range(6))

    def test_domain(self):
        with pytest.raises(DomainError):
            fm.sh_entry(F(2), 2, 0, 0)

    def test_with_s_moments(self):
        for a in (F(-1), F(-1, 3), F(1)):
            for n in range(7):
                assert fm.sh_entry(a, n, 0, 0, with_s=True) == (pochhammer_num((a + 1) / 2, n))

    def test_chains_match_full_space_matrix(self):
        a = F(1, 3)
        M = fm.sh_full_matrix(a, 20, with_s=True)
        P = np.linalg.matrix_power(M, 6)
        for row in range(8):
            for col in range(8):
                assert float(fm.sh_entry(a, 6, row, col, True)) == pytest.approx(P[row, col], rel=1e-9, abs=1e-9)

    def test_pi0_degenerate_route(self):
        # alpha = -1 puts the even chain on pi_0, where e_0 decouples
        assert fm.sh_entry(F(-1), 0, 0, 0) == 1
        assert all(fm.sh_entry(F(-1), m, 0, 0) == 0 for m in range(1, 6))
        assert all(fm.sh_entry(F(-1), m, 2, 0) == 0 for m in range(6))
        even, _ = fm.sh_chain_operators(F(-1))
        for m in range(7):
            for i in range(1, 4):
                for j in range(1, 4):
                    assert fm.sh_entry(F(-1), m, 2 * j, 2 * i) == matrix_entry(even, m, i, j - i)

    def test_operator_returns_pair(self):
        even, odd = fm.SukumarHodges(F(0)).operator()
        assert even.lam(1) == F(1, 2) * 1  # (1)(2)/4
        assert odd.lam(1) == F(3, 2)  # (3)(2)/4


def pochhammer_num(a, n):
    out = F(1)
    for j in range(n):
        out *= a + j
    return out


class TestClosedForms:
    def test_laguerre(self):
        assert fm.laguerre_moment(3, F(0)) == 6
        assert fm.laguerre_inverse(2, 1, alpha) == 2 * (alpha + 2)
        assert all(fm.laguerre_inverse(n, n, alpha) == 1 for n in range(6))
        with pytest.raises(DomainError):
            fm.laguerre_inverse(2, 3, alpha)

    def test_meixner1(self):
        assert fm.meixner1_moment(0, F(5), F(1, 3)) == 1
        beta, c = F(5, 2), F(-2, 7)
        assert fm.meixner1_moment(1, beta, c) == beta * c / (1 - c)
        assert fm.meixner1_moment(3, 1, F(1, 2)) == 13
        with pytest.raises(DomainError):
            fm.meixner1_moment(2, 1, F(3, 2))

    @given(rationals(1, 8, 3), rationals(-6, 6, 7).filter(lambda c: 0 < abs(c) < 1), st.integers(0, 7))
    def test_meixner1_theta_matches_paths(self, beta, c, n):
        assert fm.meixner1_moment(n, beta, c) == moments(fm.Meixner1(beta, c).recurrence(), n)[n]

    def test_meixner1_float_sanity(self):
        for n in range(6):
            assert fm.meixner1_moment_float(n, 2, 0.25) == pytest.approx(float(fm.meixner1_moment(n, 2, F(1, 4))), rel=1e-10)

    def test_meixner2_series(self):
        assert fm.meixner2_moment_series(2, eta) == eta
        assert fm.meixner2_moment_series(4, eta) == 3 * eta**2 + 2 * eta
        assert fm.meixner2_moment_series(6, F(1)) == 61
        with pytest.raises(UsageError):
            fm.meixner2_moment_series(3, eta)
        assert fm.meixner2_moment(5, eta) == 0

    def test_inverse_via_genfunc(self):
        assert fm.inverse_via_genfunc(fm.Meixner2(F(0), eta), 3, 1) == 2 + 3 * eta
        for n in range(9):
            for d in range(n + 1):
                assert fm.inverse_via_genfunc(fm.Laguerre(alpha), n, d) == fm.laguerre_inverse(n, d, alpha)
        for fam in (fm.Laguerre(F(2)), fm.Meixner1(F(1), F(1, 2)), fm.Meixner2(F(1, 2), F(1))):
            assert all(fm.inverse_via_genfunc(fam, n, n) == 1 for n in range(6))

    @given(rationals(1, 6, 3), rationals(-5, 5, 6).filter(lambda c: c not in (0, 1)))
    def test_meixner1_genfunc(self, beta, c):
        fam = fm.Meixner1(beta, c)
        assert fm.inverse_table_via_genfunc(fam, 7) == inverse_coeffs(fam.recurrence(), 7)

    @given(rationals(-3, 3, 4), rationals(1, 6, 3))
    def test_sheffer_transform(self, delta, e):
        fam = fm.Meixner2(delta, e)
        f, g = fm.sheffer_forward(fam, 7)
        assert fm.sheffer_transform(f, g) == fm.sheffer_inverse(fam, 7)
        table = fm.egf_table(f, g, 7)
        seq = build_ops(fam.recurrence(), 7)
        assert all(seq[n].coeff(d) == table[n][d] for n in range(8) for d in range(n + 1))

    def test_sheffer_unsupported(self):
        with pytest.raises(UsageError):
            fm.sheffer_forward(fm.Su11Plus(F(1)), 4)


class TestClassification:
    def test_examples(self):
        cls = fm.plmx_classify(F(1), F(1))
        assert cls.case == "laguerre" and cls.params["alpha"] == 1
        cls = fm.plmx_classify(F(1, 2), F(0))
        assert cls.family == fm.Meixner2(F(0), F(1)) and cls.scale == 1
        cls = fm.plmx_classify(F(1), F(3, 5))
        assert cls.family == fm.Meixner2(F(3, 4), F(2)) and cls.scale == F(4, 5)

    def test_irrational_root_kept_as_surd(self):
        cls = fm.plmx_classify(F(1), F(2))
        assert not cls.exact and cls.family is None
        assert cls.scale == Surd(2, 3) and cls.shift == Surd(-2, 3)
        rat, sur = cls.params["c"]
        assert float(rat) + float(sur) == pytest.approx((2 - 3**0.5) / (2 + 3**0.5), rel=1e-12)
        with pytest.raises(DomainError):
            fm.transport_recurrence(fm.Su11Plus(F(1), F(2)).recurrence(), cls, 3)

    def test_needs_positive_k(self):
        with pytest.raises(DomainError):
            fm.plmx_classify(F(0), F(1, 2))

    @given(k_values, rationals(-40, 40, 9))
    def test_float_transport(self, k, c):
        cls = fm.plmx_classify(k, c)
        bs, lams = fm.transport_recurrence_float(fm.Su11Plus(k, c).recurrence(), cls, 8)
        tb, tl = fm.target_recurrence_float(cls, 8)
        for x, y in zip(bs + lams, tb + tl):
            assert x == pytest.approx(y, rel=1e-10, abs=1e-10)

    @given(k_values, st.integers(1, 6), st.integers(1, 6))
    def test_pythagorean_transport_exact(self, k, p, q):
        assume(p != q)
        # c = (p^2 + q^2)/(2pq) > 1 and c = 2pq/(p^2 + q^2) < 1 both have rational roots
        for c in (F(p * p + q * q, 2 * p * q), F(2 * p * q, p * p + q * q)):
            cls = fm.plmx_classify(k, c)
            assert cls.exact
            bs, lams = fm.transport_recurrence(fm.Su11Plus(k, c).recurrence(), cls, 8)
            target = cls.family.recurrence()
            assert bs == [target.b(n) for n in range(9)]
            assert lams == [target.lam(n) for n in range(1, 9)]

    def test_json(self):
        obj = fm.plmx_classify(F(1), F(5, 4)).to_json()
        assert obj == {"case": "meixner1", "k": "1", "c": "5/4", "scale": "3/2", "shift": "-3/2",
                       "params": {"beta": "2", "c": "1/4"}, "exact": True}


class TestCarlitzAndBridge:
    def test_examples(self):
        assert fm.carlitz_relation_check(F(1, 2), 1) == (-1, -1)
        assert fm.carlitz_relation_check(F(1), 2) == (16, 16)
        assert fm.carlitz_relation_check(F(1), 0) == (1, 1)

    @given(k_values, st.integers(0, 5))
    def test_relation(self, k, m):
        lhs, rhs = fm.carlitz_relation_check(k, m)
        assert lhs == rhs

    @pytest.mark.parametrize("delta", [F(0), F(3, 4), F(1)])
    def test_meixner_pollaczek(self, delta):
        bs, lams = fm.meixner_pollaczek_recurrence(delta, F(5, 4), 8)
        rec = fm.Meixner2(delta, F(5, 2)).recurrence()
        assert bs == [rec.b(n) / 2 for n in range(8)]
        assert lams == [rec.lam(n) / 4 for n in range(1, 8)]


class TestParsing:
    def test_examples(self):
        assert fm.parse_family("laguerre:alpha=1/2") == fm.Laguerre(F(1, 2))
        assert fm.parse_family("su11+:k=1/2,c=0") == fm.Su11Plus(F(1, 2), F(0))
        assert fm.parse_family("su11+:k=1") == fm.Su11Plus(F(1), F(0))
        fam = fm.parse_family("meixner2:delta=0,eta=sym")
        assert fam.delta == 0 and fam.eta == eta
        assert fm.parse_family("sh:alpha=1,s=1") == fm.SukumarHodges(F(1), True)

    @pytest.mark.parametrize("text", [
        "legendre:alpha=1", "laguerre", "laguerre:alpha=0.5", "laguerre:beta=1",
        "meixner2:delta=sym,eta=sym", "sh:alpha=0,s=2", "laguerre:alpha",
    ])
    def test_rejects(self, text):
        with pytest.raises(UsageError):
            fm.parse_family(text)

    def test_spec_string_roundtrip(self):
        for fam in (fm.Meixner1(F(2), F(1, 3)), fm.SukumarHodges(F(-1, 2), True), fm.Laguerre(alpha)):
            assert fm.parse_family(fam.spec_string()) == fam
