"""Cross-checks between independent routes, grouped into suites.

Each check returns ``None`` when it passes or a short description of the
first counterexample.  The seventeen numbered acceptance checks are in
``ACCEPTANCE``; every suite also carries a few structural extras.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

import numpy as np

from . import families as fm
from .exactnum import ParamPoly, Surd, pochhammer
from .favard import (
    Poly,
    RecurrencePair,
    build_ops,
    change_of_basis_oracle,
    functional_apply,
    inverse_coeffs,
    mixed_moment_check,
    moments,
)
from .motzkin import (
    Valuation,
    bridge_factor,
    enumerate_paths,
    path_weight,
    transfer_total,
    v_from_v1,
)
from .permoracle import (
    descent_weighted_sum,
    euler_table,
    odd_cycle_counts,
    zigzag_minima_counts,
    zigzag_moment,
)
from .powerseries import named_series
from .tridiag import (
    all_words,
    eigenvector_coeffs,
    entry_prefactor,
    h_space_residuals,
    matrix_entry,
    p_space_residuals,
    truncated_power_oracle,
    word_entry,
)

SUITES = ("motzkin", "favard", "tridiag", "families", "perms")
FLOAT_REL = 1e-9
H_RESIDUAL_TOL = 1e-10
H_RESIDUAL_DPS = 30

ALPHA = ParamPoly.symbol("alpha")
ETA = ParamPoly.symbol("eta")
F = Fraction


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    criterion: int | None
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "suite": self.suite,
            "criterion": self.criterion,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    criterion: int | None
    fn: Callable[[], str | None]

    def run(self) -> CheckResult:
        try:
            problem = self.fn()
        except Exception as exc:  # a crash is a failed check, reported as such
            problem = f"raised {type(exc).__name__}: {exc}"
        return CheckResult(self.name, self.suite, self.criterion, problem is None, problem or "ok")


CHECKS: list[Check] = []
ACCEPTANCE: dict[int, Check] = {}


def check(suite: str, criterion: int | None = None, name: str | None = None):
    def deco(fn):
        c = Check(name or fn.__name__.removeprefix("check_"), suite, criterion, fn)
        CHECKS.append(c)
        if criterion is not None:
            ACCEPTANCE[criterion] = c
        return fn

    return deco


def run_suite(suite: str = "all") -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c.run() for c in CHECKS if suite == "all" or c.suite == suite]


def run_acceptance(number: int) -> CheckResult:
    return ACCEPTANCE[number].run()


# ---------------------------------------------------------------------------
# helpers


def _mismatch(label, got, want) -> str:
    return f"{label}: got {got}, expected {want}"


def _close(exact, approx, rel=FLOAT_REL) -> bool:
    x = float(exact)
    if x == 0:
        return abs(approx) <= rel
    return abs(approx - x) <= rel * abs(x)


def _rand_q(rng: random.Random, lo=-4, hi=4, den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_recurrence(seed: int, size: int, zero_lams=()) -> RecurrencePair:
    """Seeded rational recurrence with ``lam_n`` forced to zero for n in ``zero_lams``."""
    rng = random.Random(seed)
    bs = [_rand_q(rng) for _ in range(size + 1)]
    lams = []
    for n in range(1, size + 1):
        v = _rand_q(rng, 1, 5)
        if rng.random() < 0.3:
            v = -v
        lams.append(F(0) if n in zero_lams else v)
    return RecurrencePair(bs, lams)


def _sec_tan_egf(name: str, n: int):
    return named_series(name, n).egf(n)


# ---------------------------------------------------------------------------
# acceptance criteria


@check("tridiag", 1, "secant_identity")
def check_secant():
    for m in range(7):
        got = fm.sh_entry(F(1), 2 * m, 0, 0)
        want = _sec_tan_egf("sec", 2 * m)
        if got != want:
            return _mismatch(f"m={m}", got, want)
    expected = [1, 1, 5, 61, 1385, 50521, 2702765]
    got = [_sec_tan_egf("sec", 2 * m) for m in range(7)]
    if got != expected:
        return _mismatch("secant numbers", got, expected)
    return None


@check("tridiag", 2, "tangent_identity")
def check_tangent():
    for m in range(6):
        got = fm.sh_entry(F(1), 2 * m, 1, 1)
        want = _sec_tan_egf("tan", 2 * m + 1)
        if got != want:
            return _mismatch(f"m={m}", got, want)
    expected = [1, 2, 16, 272, 7936, 353792]
    got = [_sec_tan_egf("tan", 2 * m + 1) for m in range(6)]
    if got != expected:
        return _mismatch("tangent numbers", got, expected)
    return None


@check("favard", 3, "laguerre_moments")
def check_laguerre_moments():
    mu = moments(fm.Laguerre(ALPHA).recurrence(), 10)
    for n, m in enumerate(mu):
        want = pochhammer(ALPHA + 1, n)
        if m != want:
            return _mismatch(f"mu_{n}", m, want)
    return None


@check("favard", 4, "laguerre_inverse")
def check_laguerre_inverse():
    q = inverse_coeffs(fm.Laguerre(ALPHA).recurrence(), 10)
    for n in range(11):
        for d in range(n + 1):
            want = fm.laguerre_inverse(n, d, ALPHA)
            if q[n][d] != want:
                return _mismatch(f"q[{n}][{d}]", q[n][d], want)
    return None


@check("favard", 5, "carlitz_moment_identity")
def check_carlitz_moment_identity():
    mu = moments(fm.Meixner2(F(0), ETA).recurrence(), 12)
    for n in range(0, 13):
        want = fm.meixner2_moment(n, ETA)
        if mu[n] != want:
            return _mismatch(f"mu_{n}", mu[n], want)
    return None


@check("perms", 6, "zigzag_oracle")
def check_zigzag():
    mu = moments(fm.Meixner2(F(0), ETA).recurrence(), 10)
    for two_n in range(0, 11, 2):
        got = zigzag_moment(two_n, ETA)
        if got != mu[two_n]:
            return _mismatch(f"2n={two_n}", got, mu[two_n])
    return None


@check("favard", 7, "meixner2_inverse_series")
def check_meixner2_inverse():
    q = inverse_coeffs(fm.Meixner2(F(0), ETA).recurrence(), 10)
    for m in range(11):
        for d in range(m + 1):
            want = fm.meixner2_inverse_delta0(m, d, ETA)
            if q[m][d] != want:
                return _mismatch(f"delta=0 q[{m}][{d}]", q[m][d], want)
    for delta in (F(1, 2), F(3, 4)):
        for eta in (F(1), F(2), F(3)):
            fam = fm.Meixner2(delta, eta)
            q = inverse_coeffs(fam.recurrence(), 10)
            g = fm.inverse_table_via_genfunc(fam, 10)
            for m in range(11):
                for d in range(m + 1):
                    if q[m][d] != g[m][d]:
                        return _mismatch(f"delta={delta} eta={eta} q[{m}][{d}]", q[m][d], g[m][d])
    return None


@check("favard", 8, "meixner1_moments")
def check_meixner1():
    for beta, c in ((F(1), F(1, 2)), (F(2), F(1, 3)), (F(3), F(1, 4))):
        mu = moments(fm.Meixner1(beta, c).recurrence(), 8)
        for n in range(9):
            theta = fm.meixner1_moment(n, beta, c)
            if theta != mu[n]:
                return _mismatch(f"(beta,c)=({beta},{c}) mu_{n}", theta, mu[n])
    fubini = [1, 1, 3, 13, 75, 541, 4683]
    for n, want in enumerate(fubini):
        theta = fm.meixner1_moment(n, 1, F(1, 2))
        des = descent_weighted_sum(n, 2)
        if not theta == des == want:
            return f"n={n}: theta {theta}, descent sum {des}, expected {want}"
    return None


@check("favard", 9, "mixed_moments")
def check_mixed_moments():
    for seed in (11, 12, 13):
        rec = random_recurrence(seed, 20)
        mu = moments(rec, 18)
        seq = build_ops(rec, 6)
        for n in range(7):
            for k in range(7):
                for l in range(7):
                    lhs, rhs = mixed_moment_check(rec, n, k, l, mu=mu, seq=seq)
                    if lhs != rhs:
                        return _mismatch(f"seed={seed} (n,k,l)=({n},{k},{l})", lhs, rhs)
    return None


@check("favard", 10, "inverse_vs_linear_algebra")
def check_inverse_oracle():
    cases = [(21, ()), (22, ()), (23, ()), (24, ()), (25, (3,))]
    for seed, zeros in cases:
        rec = random_recurrence(seed, 12, zeros)
        q = inverse_coeffs(rec, 10)
        seq = build_ops(rec, 10)
        oracle = change_of_basis_oracle(seq, 10)
        if q != oracle:
            bad = next((n, k) for n in range(11) for k in range(n + 1) if q[n][k] != oracle[n][k])
            return _mismatch(f"seed={seed} q{list(bad)}", q[bad[0]][bad[1]], oracle[bad[0]][bad[1]])
        for n in range(11):
            rebuilt = sum((seq[k] * q[n][k] for k in range(n + 1)), Poly())
            if rebuilt != Poly.monomial(n):
                return f"seed={seed}: x^{n} not reproduced"
    return None


def named_operators():
    """Sample operators for every named family, natural and monic splits."""
    fams = [
        fm.Laguerre(F(1, 2)),
        fm.Meixner1(F(2), F(1, 3)),
        fm.Meixner1(F(1), F(-1, 2)),
        fm.Meixner2(F(1, 2), F(3)),
        fm.Su11Plus(F(1, 2), F(0)),
        fm.Su11Plus(F(1), F(1)),
        fm.Su11Minus(F(3, 2), F(1, 2)),
        fm.PiBeta(F(3, 2), F(1)),
        fm.PiBeta(F(0), F(1, 2)),
        fm.GeneralizedHermite(F(1, 2)),
        fm.CarlitzBPlusC(F(1)),
    ]
    out = []
    for fam in fams:
        out.append((fam.spec_string() + " natural", fam.operator("natural")))
        out.append((fam.spec_string() + " monic", fam.operator("monic")))
    for sh in (fm.SukumarHodges(F(1, 2)), fm.SukumarHodges(F(1), True), fm.SukumarHodges(F(-1))):
        even, odd = sh.operator()
        out.append((sh.spec_string() + " even", even))
        out.append((sh.spec_string() + " odd", odd))
    return out


@check("tridiag", 11, "entries_vs_brute_force")
def check_entries_vs_brute_force():
    N = 14
    for label, T in named_operators():
        rational = T.is_rational(N)
        for m in range(11):
            P = truncated_power_oracle(T, m, N, "exact" if rational else "float")
            for i in range(4):
                for d in range(-3, 4):
                    if i + d < 0:
                        continue
                    got = matrix_entry(T, m, i, d)
                    want = P[i + d][i]
                    ok = got == want if rational else _close(got, want)
                    if not ok:
                        return _mismatch(f"{label} m={m} i={i} d={d}", got, want)
    return None


PLMX_CASES = {
    (F(1), F(3, 5)): ("meixner2", fm.Meixner2(F(3, 4), F(2)), F(4, 5), F(0)),
    (F(1, 2), F(3, 5)): ("meixner2", fm.Meixner2(F(3, 4), F(1)), F(4, 5), F(0)),
    (F(1), F(5, 4)): ("meixner1", fm.Meixner1(F(2), F(1, 4)), F(3, 2), F(-3, 2)),
    (F(1), F(1)): ("laguerre", fm.Laguerre(F(1)), F(1), F(0)),
    (F(1), F(-1)): ("laguerre", fm.Laguerre(F(1)), F(-1), F(0)),
    (F(1, 2), F(0)): ("meixner2", fm.Meixner2(F(0), F(1)), F(1), F(0)),
}


@check("families", 12, "plmx_transport")
def check_plmx():
    n_max = 12
    for (k, c), (case, fam, scale, shift) in PLMX_CASES.items():
        cls = fm.plmx_classify(k, c)
        if (cls.case, cls.family, cls.scale, cls.shift) != (case, fam, scale, shift):
            return _mismatch(
                f"classify({k},{c})",
                (cls.case, cls.family, str(cls.scale), str(cls.shift)),
                (case, fam, scale, shift),
            )
        rec = fm.Su11Plus(k, c).recurrence()
        bs, lams = fm.transport_recurrence(rec, cls, n_max)
        target = fam.recurrence()
        for n in range(n_max + 1):
            if bs[n] != target.b(n):
                return _mismatch(f"({k},{c}) b'_{n}", bs[n], target.b(n))
        for n in range(1, n_max + 1):
            if lams[n - 1] != target.lam(n):
                return _mismatch(f"({k},{c}) lam'_{n}", lams[n - 1], target.lam(n))
        moved = fm.transport_polys(build_ops(rec, 8), cls)
        if moved != build_ops(target, 8):
            return f"({k},{c}): polynomial transport differs from the classified family"
    # c = -1: p_n(x) = (-1)^n L_n(-x)
    lag = build_ops(fm.Laguerre(F(1)).recurrence(), 8)
    minus = build_ops(fm.Su11Plus(F(1), F(-1)).recurrence(), 8)
    for n in range(9):
        if minus[n] != lag[n].affine(F(-1), F(0)) * (-1) ** n:
            return f"c=-1 sign flip fails at n={n}"
    return None


@check("tridiag", 13, "eigenvector_necessity")
def check_eigenvector():
    for k, c in ((F(1, 2), F(0)), (F(1), F(1))):
        T = fm.Su11Plus(k, c).operator()
        for z in (F(0), F(1, 2), F(-2)):
            p, h = eigenvector_coeffs(T, z, 31)
            res = p_space_residuals(T, z, p)
            if any(res):
                n = next(i for i, r in enumerate(res) if r)
                return f"(k,c,z)=({k},{c},{z}): p-space residual {res[n]} at n={n}"
            hx = h_space_residuals(T, z, h)
            if any(hx):
                n = next(i for i, r in enumerate(hx) if r)
                return f"(k,c,z)=({k},{c},{z}): exact h-space residual {hx[n]} at n={n}"
            mp = h_space_residuals(T, z, h, exact=False, dps=H_RESIDUAL_DPS)
            rel = h_space_residuals(T, z, h, exact=False, relative=True)
            if max(map(abs, mp)) >= H_RESIDUAL_TOL:
                return f"(k,c,z)=({k},{c},{z}): float residual {max(map(abs, mp))}"
            if max(map(abs, rel)) >= H_RESIDUAL_TOL:
                return f"(k,c,z)=({k},{c},{z}): binary64 relative residual {max(map(abs, rel))}"
    return None


@check("perms", 14, "odd_cycle_model")
def check_odd_cycles():
    seq = build_ops(fm.Meixner2(F(0), F(1)).recurrence(), 8)
    for n in range(9):
        got = [abs(seq[n].coeff(j)) for j in range(n + 1)]
        want = odd_cycle_counts(n)
        if got != want:
            return _mismatch(f"n={n}", got, want)
    return None


@check("families", 15, "generalized_hermite")
def check_hermite():
    mu = moments(fm.GeneralizedHermite(F(0)).recurrence(), 8)
    want = [1, 0, 1, 0, 3, 0, 15, 0, 105]
    if mu != want:
        return _mismatch("moments alpha=0", mu, want)
    lam_n = Valuation.v(lambda k: F(0), lambda k: F(k))
    for m in range(0, 9):
        dyck = sum((path_weight(p, lam_n) for p in enumerate_paths(m, 0, 0)
                    if "F" not in p.to_string()), F(0))
        if dyck != mu[m]:
            return _mismatch(f"Dyck enumeration m={m}", dyck, mu[m])
    for alpha in (F(0), F(1, 2), F(2), F(-1, 2)):
        T = fm.GeneralizedHermite(alpha).operator()
        for n in range(1, 21):
            want_lam = n + alpha if n % 2 else F(n)
            if T.lam(n) != want_lam:
                return _mismatch(f"alpha={alpha} l_{n - 1} u_{n - 1}", T.lam(n), want_lam)
            if T.diag(n - 1) != 0:
                return f"alpha={alpha}: nonzero diagonal at {n - 1}"
    return None


@check("families", 16, "carlitz_family")
def check_carlitz():
    for k in (F(1, 2), F(1), F(3, 2)):
        for m in range(6):
            lhs, rhs = fm.carlitz_relation_check(k, m)
            if lhs != rhs:
                return _mismatch(f"k={k} m={m}", lhs, rhs)
    return None


@check("tridiag", 17, "parity_decomposition")
def check_parity():
    m_max, idx_max = 8, 7
    for alpha in (F(-1, 2), F(0), F(1, 2), F(1), F(-1)):
        for with_s in (False, True):
            even, odd = fm.sh_chain_operators(alpha, with_s)
            M = fm.sh_full_matrix(alpha, idx_max + m_max + 1, with_s)
            power = np.eye(M.shape[0])
            for m in range(m_max + 1):
                for row in range(idx_max + 1):
                    for col in range(idx_max + 1):
                        got = fm.sh_entry(alpha, m, row, col, with_s)
                        if (row - col) % 2:
                            if got != 0 or abs(power[row, col]) > 0:
                                return f"alpha={alpha} parity leak at ({row},{col})"
                            continue
                        chain = even if row % 2 == 0 else odd
                        want = matrix_entry(chain, m, col // 2, row // 2 - col // 2)
                        if got != want:
                            return _mismatch(f"alpha={alpha} S={with_s} m={m} ({row},{col})", got, want)
                        if not _close(got, power[row, col]):
                            return _mismatch(
                                f"alpha={alpha} S={with_s} m={m} ({row},{col}) float", got, power[row, col]
                            )
                power = power @ M
    # pi_0 restricted to the complement of e_0 is pi_2 with indices shifted
    for c in (F(0), F(1)):
        T0, T2 = fm.PiBeta(F(0), c).operator(), fm.PiBeta(F(2), c).operator()
        for m in range(m_max + 1):
            for i in range(1, 5):
                for d in range(-3, 4):
                    if i + d < 1:
                        continue
                    a, b = matrix_entry(T0, m, i, d), matrix_entry(T2, m, i - 1, d)
                    if a != b:
                        return _mismatch(f"pi_0 vs pi_2 c={c} m={m} i={i} d={d}", a, b)
    return None


# ---------------------------------------------------------------------------
# suite extras


@check("motzkin")
def check_dp_vs_enumeration():
    rng = random.Random(5)
    for trial in range(3):
        bs = [_rand_q(rng) for _ in range(14)]
        lams = [_rand_q(rng) for _ in range(14)]
        val = Valuation.v(bs, lams)
        for m in range(9):
            for i in range(5):
                for j in range(5):
                    brute = sum((path_weight(p, val) for p in enumerate_paths(m, i, j)), F(0))
                    dp = transfer_total(m, i, j, val)
                    if brute != dp:
                        return _mismatch(f"trial={trial} m={m} {i}->{j}", dp, brute)
    return None


@check("motzkin")
def check_v_v1_bridge():
    rng = random.Random(6)
    for trial in range(3):
        a = [_rand_q(rng, 1, 4) for _ in range(14)]
        b = [_rand_q(rng) for _ in range(14)]
        c = [_rand_q(rng) for _ in range(14)]
        v1 = Valuation.v1(a, b, c)
        v = v_from_v1(v1)
        for m in range(8):
            for i in range(4):
                for j in range(4):
                    t1, t = transfer_total(m, i, j, v1), transfer_total(m, i, j, v)
                    if t1 != bridge_factor(v1, i, j) * t:
                        return _mismatch(f"trial={trial} m={m} {i}->{j}", t1, bridge_factor(v1, i, j) * t)
    return None


@check("motzkin")
def check_dyck_parity():
    val = Valuation.v(lambda k: F(0), lambda k: F(k + 2, 3))
    for m in range(1, 12, 2):
        for i in range(4):
            if transfer_total(m, i, i, val) != 0:
                return f"odd length {m} at level {i} is nonzero"
    return None


@check("favard")
def check_orthogonality():
    rec = random_recurrence(31, 14)
    mu = moments(rec, 12)
    seq = build_ops(rec, 6)
    for m in range(7):
        for n in range(7):
            v = functional_apply(mu, seq[m] * seq[n])
            want = rec.lam_product(n) if m == n else 0
            if v != want:
                return _mismatch(f"f(p_{m} p_{n})", v, want)
    return None


@check("tridiag")
def check_words_moments_inverse():
    T = fm.Su11Plus(F(1), F(1, 2)).operator()
    for m in range(6):
        for i in range(3):
            for d in range(-2, 3):
                if i + d < 0:
                    continue
                acc = Surd(0)
                for w in all_words(m):
                    acc = acc + word_entry(T, w, i, d)
                got = matrix_entry(T, m, i, d)
                if acc != got:
                    return _mismatch(f"word sum m={m} i={i} d={d}", acc, got)
    mu = moments(T.recurrence(), 12)
    q = inverse_coeffs(T.recurrence(), 10)
    for m in range(13):
        if matrix_entry(T, m, 0, 0) != mu[m]:
            return _mismatch(f"vacuum entry vs moment m={m}", matrix_entry(T, m, 0, 0), mu[m])
    for m in range(11):
        for d in range(m + 1):
            want = entry_prefactor(T, 0, d) * q[m][d]
            if matrix_entry(T, m, 0, d) != want:
                return _mismatch(f"first column vs inverse m={m} d={d}", matrix_entry(T, m, 0, d), want)
    return None


@check("families")
def check_su11_symmetry():
    for k, c in ((F(1, 2), F(1)), (F(1), F(3, 5)), (F(3, 2), F(-2))):
        a = moments(fm.Su11Minus(k, c).recurrence(), 8)
        b = moments(fm.Su11Plus(k, -c).recurrence(), 8)
        if a != b:
            return _mismatch(f"(k,c)=({k},{c})", a, b)
    return None


@check("families")
def check_plmx_float():
    for k, c in ((F(1), F(2)), (F(1, 2), F(1, 2)), (F(3, 2), F(-3))):
        cls = fm.plmx_classify(k, c)
        bs, lams = fm.transport_recurrence_float(fm.Su11Plus(k, c).recurrence(), cls, 10)
        tb, tl = fm.target_recurrence_float(cls, 10)
        for x, y in zip(bs + lams, tb + tl):
            if abs(x - y) > 1e-10 * max(1.0, abs(y)):
                return _mismatch(f"(k,c)=({k},{c})", x, y)
    return None


@check("families")
def check_sheffer_routes():
    for fam in (fm.Laguerre(F(1, 2)), fm.Meixner1(F(2), F(1, 3)), fm.Meixner2(F(1, 2), F(3))):
        f, g = fm.sheffer_forward(fam, 8)
        F1, G1 = fm.sheffer_transform(f, g)
        F2, G2 = fm.sheffer_inverse(fam, 8)
        if F1 != F2 or G1 != G2:
            return f"{fam.spec_string()}: inverse generating functions disagree"
        seq = build_ops(fam.recurrence(), 8)
        fwd = fm.egf_table(f, g, 8)
        for n in range(9):
            for d in range(n + 1):
                if seq[n].coeff(d) != fwd[n][d]:
                    return _mismatch(f"{fam.spec_string()} p_{n}[x^{d}]", seq[n].coeff(d), fwd[n][d])
    q = fm.inverse_table_via_genfunc(fm.Laguerre(ALPHA), 8)
    for n in range(9):
        for d in range(n + 1):
            if q[n][d] != fm.laguerre_inverse(n, d, ALPHA):
                return _mismatch(f"Laguerre genfunc q[{n}][{d}]", q[n][d], fm.laguerre_inverse(n, d, ALPHA))
    return None


@check("families")
def check_meixner_pollaczek():
    for delta in (F(0), F(3, 4), F(1)):
        for lam in (F(1, 2), F(1), F(3, 2)):
            bs, lams = fm.meixner_pollaczek_recurrence(delta, lam, 8)
            rec = fm.Meixner2(delta, 2 * lam).recurrence()
            want_b = [rec.b(n) / 2 for n in range(8)]
            want_l = [rec.lam(n) / 4 for n in range(1, 8)]
            if (bs, lams) != (want_b, want_l):
                return f"delta={delta} lambda={lam}: rescaled recurrence differs"
    return None


@check("families")
def check_meixner1_float_series():
    for beta, c in ((F(1), F(1, 2)), (F(2), F(1, 3)), (F(3), F(-1, 4))):
        for n in range(7):
            exact = fm.meixner1_moment(n, beta, c)
            if not _close(exact, fm.meixner1_moment_float(n, beta, c)):
                return _mismatch(f"(beta,c)=({beta},{c}) n={n}", fm.meixner1_moment_float(n, beta, c), exact)
    return None


@check("families")
def check_shs_moments():
    for alpha in (F(-1, 2), F(0), F(1)):
        for n in range(9):
            got = fm.sh_entry(alpha, n, 0, 0, with_s=True)
            want = pochhammer((alpha + 1) / 2, n)
            if got != want:
                return _mismatch(f"alpha={alpha} n={n}", got, want)
    return None


@check("perms")
def check_euler_table():
    E, T = euler_table(4)
    for n in range(5):
        counts = zigzag_minima_counts(2 * n)
        width = max(len(E[n]), len(counts))
        row = E[n] + [0] * (width - len(E[n]))
        counts = counts + [0] * (width - len(counts))
        if row != counts:
            return _mismatch(f"2n={2 * n}", row, counts)
    tangents = [_sec_tan_egf("tan", 2 * m + 1) for m in range(4)]
    if T != tangents:
        return _mismatch("down-up odd counts", T, tangents)
    return None


@check("perms")
def check_descents_and_cycles():
    for n in range(8):
        if descent_weighted_sum(n, 2) != fm.meixner1_moment(n, 1, F(1, 2)):
            return f"descent sum differs from Meixner1(1,1/2) moment at n={n}"
    for n in range(9):
        c = odd_cycle_counts(n)
        if sum(c) != factorial(n):
            return f"odd cycle counts at n={n} do not sum to n!"
        if any(v for j, v in enumerate(c) if (j - n) % 2):
            return f"odd cycle counts at n={n} break parity"
    return None
