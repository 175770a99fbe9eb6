"""Named parametric families: recurrences, operators and closed forms.

Every family is a frozen dataclass with ``recurrence()`` and
``operator(split=...)``.  ``split="natural"`` builds the operator from its
defining action on the basis (surd entries); ``split="monic"`` uses
``l_n = 1, u_n = lam_{n+1}`` so every entry is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

import math

from .exactnum import (
    DomainError,
    ParamPoly,
    Surd,
    UsageError,
    as_rational,
    binomial,
    is_symbolic,
    parse_rational,
    pochhammer,
    scalar_to_str,
)
from .favard import Poly, RecurrencePair, build_ops, moments
from .powerseries import TruncatedSeries, named_series
from .tridiag import TridiagonalOperator, matrix_entry

Param = Union[Fraction, ParamPoly]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _numeric(*values):
    for v in values:
        if is_symbolic(v):
            raise UsageError(f"operator requested with symbolic parameter {v}")
    return [as_rational(v) for v in values]


def _sqrt(x) -> Surd:
    return Surd.sqrt(as_rational(x))


def _operator_from_recurrence(rec: RecurrencePair, split: str, name: str) -> TridiagonalOperator:
    if split == "monic":
        return TridiagonalOperator(
            lambda n: _ONE, lambda n: rec.b(n), lambda n: rec.lam(n + 1), name=name
        )
    if split == "natural":
        def l(n):
            lam = as_rational(rec.lam(n + 1))
            return _sqrt(abs(lam))

        def u(n):
            lam = as_rational(rec.lam(n + 1))
            s = _sqrt(abs(lam))
            return -s if lam < 0 else s

        return TridiagonalOperator(l, lambda n: rec.b(n), u, name=name)
    raise UsageError(f"unknown split {split!r}")


def _check_split(split: str):
    if split not in ("natural", "monic"):
        raise UsageError(f"unknown split {split!r}")


class _Family:
    name = "family"

    def recurrence(self) -> RecurrencePair:
        raise NotImplementedError

    def _natural_operator(self) -> TridiagonalOperator:
        """Default: symmetric square-root split of the recurrence."""
        return _operator_from_recurrence(self.recurrence(), "natural", self.spec_string())

    def operator(self, split: str = "natural") -> TridiagonalOperator:
        _check_split(split)
        _numeric(*self._params())
        if split == "monic":
            return _operator_from_recurrence(self.recurrence(), "monic", self.spec_string())
        return self._natural_operator()

    def _params(self):
        return [getattr(self, f) for f in self.__dataclass_fields__]

    def spec_string(self) -> str:
        parts = []
        for f in self.__dataclass_fields__:
            v = getattr(self, f)
            if isinstance(v, bool):
                v = int(v)
            parts.append(f"{_FIELD_KEYS.get(f, f)}={'sym' if is_symbolic(v) else v}")
        return f"{self.name}:{','.join(parts)}"


@dataclass(frozen=True)
class Laguerre(_Family):
    """Monic Laguerre: ``b_n = 2n+alpha+1``, ``lam_n = n(n+alpha)``."""

    alpha: Param
    name = "laguerre"

    def recurrence(self):
        a = self.alpha
        return RecurrencePair(lambda n: a + (2 * n + 1), lambda n: (a + n) * n)


@dataclass(frozen=True)
class Meixner1(_Family):
    """Monic Meixner of the first kind with parameters ``beta, c``."""

    beta: Param
    c: Fraction
    name = "meixner1"

    def __post_init__(self):
        if self.c in (0, 1):
            raise DomainError("Meixner1 needs c not in {0, 1}")

    def recurrence(self):
        beta, c = self.beta, as_rational(self.c)
        return RecurrencePair(
            lambda n: (beta * c + (1 + c) * n) / (1 - c),
            lambda n: (beta + (n - 1)) * (c * n) / (1 - c) ** 2,
        )


@dataclass(frozen=True)
class Meixner2(_Family):
    """Monic Meixner of the second kind: ``b_n = (2n+eta) delta``."""

    delta: Param
    eta: Param
    name = "meixner2"

    def recurrence(self):
        dl, eta = self.delta, self.eta
        return RecurrencePair(
            lambda n: (eta + 2 * n) * dl,
            lambda n: (dl * dl + 1) * (eta + (n - 1)) * n,
        )


@dataclass(frozen=True)
class Su11Plus(_Family):
    """``pi+_k(B) - pi+_k(C) + c pi+_k(H)`` in the positive discrete series."""

    k: Param
    c: Param = Fraction(0)
    name = "su11+"

    def __post_init__(self):
        if not is_symbolic(self.k) and as_rational(self.k) <= 0:
            raise DomainError("su(1,1) discrete series needs k > 0")

    def recurrence(self):
        k, c = self.k, self.c
        return RecurrencePair(lambda n: (k + n) * c * 2, lambda n: (k * 2 + (n - 1)) * n)

    def _natural_operator(self):
        k, c = _numeric(self.k, self.c)
        raise_ = lambda n: _sqrt((n + 1) * (2 * k + n))  # noqa: E731  B e_n -> e_{n+1}
        # -C e_{n+1} = +sqrt((n+1)(2k+n)) e_n
        return TridiagonalOperator(raise_, lambda n: c * 2 * (k + n), raise_, name=self.spec_string())


@dataclass(frozen=True)
class Su11Minus(_Family):
    """``pi-_k(B) - pi-_k(C) + c pi-_k(H)`` in the negative discrete series."""

    k: Param
    c: Param = Fraction(0)
    name = "su11-"

    def __post_init__(self):
        if not is_symbolic(self.k) and as_rational(self.k) <= 0:
            raise DomainError("su(1,1) discrete series needs k > 0")

    def recurrence(self):
        k, c = self.k, self.c
        return RecurrencePair(lambda n: -(k + n) * c * 2, lambda n: (k * 2 + (n - 1)) * n)

    def _natural_operator(self):
        k, c = _numeric(self.k, self.c)
        # -C e_n = -sqrt((n+1)(2k+n)) e_{n+1};  B e_{n+1} = -sqrt((n+1)(2k+n)) e_n
        step = lambda n: -_sqrt((n + 1) * (2 * k + n))  # noqa: E731
        return TridiagonalOperator(step, lambda n: -c * 2 * (k + n), step, name=self.spec_string())


@dataclass(frozen=True)
class PiBeta(_Family):
    """``pi_beta(B) - pi_beta(C) + c pi_beta(H)``; ``pi_beta = pi+_{beta/2}`` for beta > 0."""

    beta: Param
    c: Param = Fraction(0)
    name = "pibeta"

    def __post_init__(self):
        if not is_symbolic(self.beta) and as_rational(self.beta) < 0:
            raise DomainError("pi_beta needs beta >= 0")

    def recurrence(self):
        beta, c = self.beta, self.c
        return RecurrencePair(lambda n: (beta + 2 * n) * c, lambda n: (beta + (n - 1)) * n)

    def _natural_operator(self):
        beta, c = _numeric(self.beta, self.c)
        step = lambda n: _sqrt((n + 1) * (n + beta))  # noqa: E731
        return TridiagonalOperator(step, lambda n: c * (2 * n + beta), step, name=self.spec_string())


@dataclass(frozen=True)
class GeneralizedHermite(_Family):
    """``A + A^dagger``: ``b_n = 0``, ``lam_{2n+1} = 2n+1+alpha``, ``lam_{2n} = 2n``."""

    alpha: Param
    name = "hermite"

    def recurrence(self):
        a = self.alpha
        return RecurrencePair(lambda n: _ZERO, lambda n: a + n if n % 2 else Fraction(n))

    def _natural_operator(self):
        (a,) = _numeric(self.alpha)

        # A^dagger e_{2n} = sqrt(2n+1+a) e_{2n+1};  A^dagger e_{2n-1} = sqrt(2n) e_{2n}
        def l(n):
            return _sqrt(n + 1 + a) if n % 2 == 0 else _sqrt(n + 1)

        # A e_{2n+1} = sqrt(2n+1+a) e_{2n};  A e_{2n} = sqrt(2n) e_{2n-1}
        def u(n):
            return _sqrt(n + 1 + a) if n % 2 == 0 else _sqrt(n + 1)

        return TridiagonalOperator(l, lambda n: _ZERO, u, name=self.spec_string())


@dataclass(frozen=True)
class CarlitzBPlusC(_Family):
    """``pi+_k(B + C)``: ``b_n = 0``, ``lam_n = -n(n+2k-1)``."""

    k: Param
    name = "carlitz"

    def __post_init__(self):
        if not is_symbolic(self.k) and as_rational(self.k) <= 0:
            raise DomainError("su(1,1) discrete series needs k > 0")

    def recurrence(self):
        k = self.k
        return RecurrencePair(lambda n: _ZERO, lambda n: -(k * 2 + (n - 1)) * n)

    def _natural_operator(self):
        (k,) = _numeric(self.k)
        return TridiagonalOperator(
            lambda n: _sqrt((n + 1) * (2 * k + n)),
            lambda n: _ZERO,
            lambda n: -_sqrt((n + 1) * (2 * k + n)),
            name=self.spec_string(),
        )


@dataclass(frozen=True)
class SukumarHodges(_Family):
    """The parity-split ``L + R`` (or ``L + R + S``) operator on the full space.

    ``recurrence()`` and ``operator()`` return ``(even, odd)`` pairs, one
    per invariant chain ``e_0, e_2, ...`` and ``e_1, e_3, ...``.
    """

    alpha: Fraction
    with_s: bool = False
    name = "sh"

    def __post_init__(self):
        if is_symbolic(self.alpha) or not (-1 <= as_rational(self.alpha) <= 1):
            raise DomainError("Sukumar-Hodges needs rational alpha in [-1, 1]")

    def recurrence(self):
        even, odd = self.chain_betas()
        c = _ONE if self.with_s else _ZERO
        return PiBeta(even, c).recurrence(), PiBeta(odd, c).recurrence()

    def chain_betas(self) -> tuple[Fraction, Fraction]:
        a = as_rational(self.alpha)
        return (a + 1) / 2, (a + 3) / 2

    def operator(self, split: str = "natural"):
        _check_split(split)
        if split == "monic":
            return tuple(_operator_from_recurrence(r, "monic", self.spec_string()) for r in self.recurrence())
        return sh_chain_operators(as_rational(self.alpha), self.with_s)


FamilySpec = Union[
    Laguerre, Meixner1, Meixner2, Su11Plus, Su11Minus, PiBeta, SukumarHodges,
    GeneralizedHermite, CarlitzBPlusC,
]


def recurrence_of(fam):
    return fam.recurrence()


def operator_of(fam, split: str = "natural"):
    return fam.operator(split)


# ---------------------------------------------------------------------------
# Sukumar-Hodges parity decomposition


def sh_chain_operators(alpha: Fraction, with_s: bool = False):
    """Even and odd chains of ``L + R (+ S)``, read off the L, R, S actions.

    Chain index j stands for ``e_{2j}`` (even) or ``e_{2j+1}`` (odd).  The odd
    ``L`` rule is used only for ``e_{2n-1}`` with n >= 1, so ``e_{-1}`` never
    appears.
    """
    a = Fraction(alpha)
    half = Fraction(1, 2)

    # L e_{2j} = sqrt((2j+1+a)(2j+2))/2 e_{2j+2}, and R maps it back
    even_step = lambda j: Surd(half, (2 * j + 1 + a) * (2 * j + 2))  # noqa: E731
    # L e_{2n-1} = sqrt((2n+1+a)(2n))/2 e_{2n+1} with n = j+1
    odd_step = lambda j: Surd(half, (2 * j + 3 + a) * (2 * j + 2))  # noqa: E731
    s_even = (lambda j: (4 * j + 1 + a) / 2) if with_s else (lambda j: _ZERO)
    s_odd = (lambda j: (4 * j + 3 + a) / 2) if with_s else (lambda j: _ZERO)
    return (
        TridiagonalOperator(even_step, s_even, even_step, name=f"sh-even:alpha={a}"),
        TridiagonalOperator(odd_step, s_odd, odd_step, name=f"sh-odd:alpha={a}"),
    )


def sh_full_matrix(alpha: Fraction, N: int, with_s: bool = False):
    """Float matrix of ``L + R (+ S)`` on ``span{e_0..e_N}`` in the original indexing."""
    import numpy as np

    a = float(alpha)
    M = np.zeros((N + 1, N + 1))
    for n in range(N + 1):
        if with_s:
            M[n, n] = (2 * n + 1 + a) / 2
        if n % 2 == 0:
            coef = math.sqrt((n + 1 + a) * (n + 2)) / 2  # L e_{2j}, n = 2j
        else:
            coef = math.sqrt((n + 2 + a) * (n + 1)) / 2  # L e_{2m-1}, n = 2m-1
        if n + 2 <= N:
            M[n + 2, n] = coef
            M[n, n + 2] = coef
    return M


def sh_entry(alpha, m: int, row: int, col: int, with_s: bool = False):
    """``<e_row, (L+R)^m e_col>`` (or with ``+S``) via the ``pi_beta`` chains."""
    alpha = as_rational(alpha)
    if not (-1 <= alpha <= 1):
        raise DomainError(f"alpha = {alpha} outside [-1, 1]")
    if row < 0 or col < 0:
        raise DomainError("indices must be non-negative")
    if (row - col) % 2:
        return _ZERO
    c = _ONE if with_s else _ZERO
    beta = (alpha + 1) / 2 if row % 2 == 0 else (alpha + 3) / 2
    i, j = col // 2, row // 2
    if beta == 0:
        # e_0 is killed by pi_0; its complement is pi_2 with indices shifted by one
        if i == 0 or j == 0:
            return _ONE if (i == j == 0 and m == 0) else _ZERO
        return matrix_entry(PiBeta(Fraction(2), c).operator(), m, i - 1, j - i)
    return matrix_entry(PiBeta(beta, c).operator(), m, i, j - i)


# ---------------------------------------------------------------------------
# closed forms


def laguerre_moment(n: int, alpha):
    return pochhammer(alpha + 1, n)


def laguerre_inverse(n: int, d: int, alpha):
    if not 0 <= d <= n:
        raise DomainError("need 0 <= d <= n")
    return pochhammer(alpha + (1 + d), n - d) * binomial(n, d)


def meixner1_moment(n: int, beta, c) -> Fraction:
    """Moment ``n`` of Meixner1(beta, c) by repeated ``theta = c d/dc``.

    ``theta^n (1-c)^(-beta) = P_n(c) (1-c)^(-beta-n)`` with
    ``P_{n+1} = c(1-c) P_n' + (beta+n) c P_n``; the moment is ``P_n(c)/(1-c)^n``.
    """
    c = as_rational(c)
    if not 0 < abs(c) < 1:
        raise DomainError("Meixner1 moments need 0 < |c| < 1")
    cc = ParamPoly.symbol("c")
    one_minus = 1 - cc
    P = ParamPoly("c", (1,))
    for j in range(n):
        P = cc * one_minus * P.derivative() + cc * P * (beta + j)
    return P(c) / (1 - c) ** n


def meixner1_moment_float(n: int, beta, c, terms: int = 200) -> float:
    """Truncated float sum ``(1-c)^beta sum_k k^n c^k (beta)_k / k!``."""
    beta, c = float(beta), float(c)
    total, coef = 0.0, 1.0  # coef = c^k (beta)_k / k!
    for k in range(terms):
        total += k**n * coef
        coef *= c * (beta + k) / (k + 1)
    return (1 - c) ** beta * total


def _sec_power(eta, order: int) -> TruncatedSeries:
    return named_series("sec", order).power(eta)


def meixner2_moment_series(two_n: int, eta):
    """``(2n)! [t^2n] sec(t)^eta``."""
    if two_n % 2:
        raise UsageError("meixner2_moment_series takes even orders; odd moments vanish")
    return _sec_power(eta, two_n).egf(two_n)


def meixner2_moment(n: int, eta):
    """Moments of Meixner2(0, eta), including the vanishing odd ones."""
    return _ZERO if n % 2 else meixner2_moment_series(n, eta)


def sheffer_forward(fam, order: int):
    """``(f, g)`` with ``sum p_n(x) t^n/n! = f(t) exp(x g(t))``."""
    t = TruncatedSeries.variable(order)
    if isinstance(fam, Laguerre):
        f = (1 + t).power(-(fam.alpha + 1))
        g = t / (1 + t)
        return f, g
    if isinstance(fam, Meixner1):
        c = as_rational(fam.c)
        f = (1 + t * (c / (1 - c))).power(-fam.beta)
        log1p = named_series("log1p", order)
        g = log1p(t / (1 - c)) - log1p(t * (c / (1 - c)))
        return f, g
    if isinstance(fam, Meixner2):
        dl = fam.delta
        base = (1 + t * dl) * (1 + t * dl) + t * t
        f = base.power(-fam.eta / 2)
        g = named_series("arctan", order)(t / (1 + t * dl))
        return f, g
    raise UsageError(f"no Sheffer generating function for {fam.name}")


def sheffer_inverse(fam, order: int):
    """``(F, G)`` with ``sum q_n(x) t^n/n! = F(t) exp(x G(t))`` for the inverse polynomials."""
    t = TruncatedSeries.variable(order)
    if isinstance(fam, Laguerre):
        G = t / (1 - t)
        F = (1 - t).reciprocal().power(fam.alpha + 1)
        return F, G
    if isinstance(fam, Meixner1):
        c = as_rational(fam.c)
        e = named_series("exp", order)
        G = (e - 1) * (1 - c) / (1 - e * c)
        F = ((1 - e * c).reciprocal() * (1 - c)).power(fam.beta)
        return F, G
    if isinstance(fam, Meixner2):
        dl = fam.delta
        tan = named_series("tan", order)
        sec = named_series("sec", order)
        G = tan / (1 - tan * dl)
        base = sec * sec / ((1 - tan * dl) * (1 - tan * dl))
        F = base.power(fam.eta / 2)
        return F, G
    raise UsageError(f"no Sheffer generating function for {fam.name}")


def sheffer_transform(f: TruncatedSeries, g: TruncatedSeries):
    """``(1/f(g^<-1>), g^<-1>)``: the inverse-polynomial pair of a Sheffer pair."""
    ginv = g.revert()
    return f.compose(ginv).reciprocal(), ginv


def egf_table(F: TruncatedSeries, G: TruncatedSeries, n_max: int) -> list[list]:
    """``table[n][d] = (n!/d!) [t^n] F G^d``, i.e. coefficients of ``F exp(x G)``."""
    out = [[None] * (n + 1) for n in range(n_max + 1)]
    power = F.truncate(n_max)
    G = G.truncate(n_max)
    for d in range(n_max + 1):
        for n in range(d, n_max + 1):
            out[n][d] = power[n] * Fraction(factorial(n), factorial(d))
        power = power * G
    return out


def inverse_table_via_genfunc(fam, n_max: int) -> list[list]:
    return egf_table(*sheffer_inverse(fam, n_max), n_max)


def inverse_via_genfunc(fam, n: int, d: int):
    if not 0 <= d <= n:
        raise DomainError("need 0 <= d <= n")
    return inverse_table_via_genfunc(fam, n)[n][d]


def meixner2_inverse_delta0(m: int, d: int, eta):
    """``(m!/d!) [t^m] sec(t)^eta tan(t)^d``."""
    series = _sec_power(eta, m) * named_series("tan", m) ** d
    return series[m] * Fraction(factorial(m), factorial(d))


# ---------------------------------------------------------------------------
# classification of p[k, c]


@dataclass(frozen=True)
class Classification:
    """``p[k,c]_n(x) = scale^n Q_n((x + shift)/scale)`` with Q the target family.

    ``params`` holds the target family's parameters; for ``meixner1`` the
    parameter ``c`` is ``rational + surd`` and is stored as that pair.
    ``family`` is a ready-to-use family object when everything is rational.
    """

    case: str
    k: Fraction
    c: Fraction
    scale: Surd
    shift: Surd
    params: dict
    family: object = None
    exact: bool = True

    def to_json(self) -> dict:
        def conv(v):
            if isinstance(v, tuple):
                return {"rational": scalar_to_str(v[0]), "surd": scalar_to_str(v[1])}
            return scalar_to_str(v)

        return {
            "case": self.case,
            "k": conv(self.k),
            "c": conv(self.c),
            "scale": conv(self.scale),
            "shift": conv(self.shift),
            "params": {key: conv(v) for key, v in self.params.items()},
            "exact": self.exact,
        }


def plmx_classify(k, c) -> Classification:
    k, c = as_rational(k), as_rational(c)
    if k <= 0:
        raise DomainError("classification needs k > 0")
    zero = Surd(0)
    if abs(c) == 1:
        scale = Surd(c)
        return Classification(
            "laguerre", k, c, scale, zero, {"alpha": 2 * k - 1}, Laguerre(2 * k - 1), True
        )
    if abs(c) > 1:
        r = Surd.sqrt(c * c - 1)
        scale = r * 2
        shift = -(r * (2 * k))
        # (c - r)/(c + r) = (c - r)^2 = 2c^2 - 1 - 2 c r, since c^2 - r^2 = 1
        mc = (2 * c * c - 1, -(r * (2 * c)))
        exact = r.is_rational()
        fam = None
        if exact:
            fam = Meixner1(2 * k, mc[0] + mc[1].to_rational())
            mc_param = fam.c
        else:
            mc_param = mc
        return Classification(
            "meixner1", k, c, scale, shift, {"beta": 2 * k, "c": mc_param}, fam, exact
        )
    s = Surd.sqrt(1 - c * c)
    delta = Surd(c, 1 / (1 - c * c))
    exact = s.is_rational()
    fam = Meixner2(delta.to_rational(), 2 * k) if exact else None
    params = {"delta": delta.to_rational() if exact else delta, "eta": 2 * k}
    return Classification("meixner2", k, c, s, zero, params, fam, exact)


def transport_recurrence(rec: RecurrencePair, cls: Classification, n_max: int):
    """Exact ``b'_n = (b_n + shift)/scale`` and ``lam'_n = lam_n / scale^2``."""
    if not cls.exact:
        raise DomainError("exact transport needs rational scale and shift")
    s, g = cls.scale.to_rational(), cls.shift.to_rational()
    bs = [(rec.b(n) + g) / s for n in range(n_max + 1)]
    lams = [rec.lam(n) / (s * s) for n in range(1, n_max + 1)]
    return bs, lams


def transport_recurrence_float(rec: RecurrencePair, cls: Classification, n_max: int):
    s, g = float(cls.scale), float(cls.shift)
    bs = [(float(rec.b(n)) + g) / s for n in range(n_max + 1)]
    lams = [float(rec.lam(n)) / (s * s) for n in range(1, n_max + 1)]
    return bs, lams


def target_recurrence_float(cls: Classification, n_max: int):
    """The classified family's own ``b_n, lam_n`` in floating point."""
    p = cls.params
    if cls.case == "laguerre":
        a = float(p["alpha"])
        return [2 * n + a + 1 for n in range(n_max + 1)], [n * (n + a) for n in range(1, n_max + 1)]
    if cls.case == "meixner1":
        beta = float(p["beta"])
        mc = p["c"]
        c = float(mc[0]) + float(mc[1]) if isinstance(mc, tuple) else float(mc)
        bs = [((1 + c) * n + beta * c) / (1 - c) for n in range(n_max + 1)]
        lams = [c * n * (n + beta - 1) / (1 - c) ** 2 for n in range(1, n_max + 1)]
        return bs, lams
    dl, eta = float(p["delta"]), float(p["eta"])
    bs = [(2 * n + eta) * dl for n in range(n_max + 1)]
    lams = [(dl * dl + 1) * n * (n + eta - 1) for n in range(1, n_max + 1)]
    return bs, lams


def transport_polys(seq: list[Poly], cls: Classification) -> list[Poly]:
    """``Q_n(y) = p_n(scale*y - shift) / scale^n`` for each ``p_n`` in ``seq``."""
    s, g = cls.scale.to_rational(), cls.shift.to_rational()
    return [p.affine(s, -g) * (1 / s**n) for n, p in enumerate(seq)]


def meixner_pollaczek_recurrence(delta, lam, n_max: int):
    """Recurrence read off ``2^-n M_n(2x; delta, 2 lam)``, with M the monic Meixner2 system.

    Returns ``(bs, lams)`` recovered from the rescaled polynomials; they should
    equal the Meixner2 data halved and quartered respectively.
    """
    seq = build_ops(Meixner2(delta, 2 * as_rational(lam)).recurrence(), n_max)
    half = Fraction(1, 2)
    scaled = [p.affine(Fraction(2), _ZERO) * half**n for n, p in enumerate(seq)]
    from .favard import recurrence_from_polys

    return recurrence_from_polys(scaled)


# ---------------------------------------------------------------------------
# Carlitz / B + C


def carlitz_relation_check(k, m: int):
    """``mu_2m`` of ``pi+_k(B+C)`` against ``(-1)^m E^(2k)_2m``."""
    lhs = moments(CarlitzBPlusC(k).recurrence(), 2 * m)[2 * m]
    rhs = meixner2_moment_series(2 * m, 2 * as_rational(k) if not is_symbolic(k) else k * 2) * (-1) ** m
    return lhs, rhs


# ---------------------------------------------------------------------------
# parsing


_FAMILY_FIELDS = {
    "laguerre": (Laguerre, ("alpha",), {}),
    "meixner1": (Meixner1, ("beta", "c"), {}),
    "meixner2": (Meixner2, ("delta", "eta"), {}),
    "su11+": (Su11Plus, ("k", "c"), {"c": "0"}),
    "su11-": (Su11Minus, ("k", "c"), {"c": "0"}),
    "pibeta": (PiBeta, ("beta", "c"), {"c": "0"}),
    "sh": (SukumarHodges, ("alpha", "s"), {"s": "0"}),
    "hermite": (GeneralizedHermite, ("alpha",), {}),
    "carlitz": (CarlitzBPlusC, ("k",), {}),
}
_FIELD_KEYS = {"with_s": "s"}


def parse_family(text: str):
    """Parse ``name:key=value,...``; the value ``sym`` makes a symbolic parameter."""
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    if name not in _FAMILY_FIELDS:
        raise UsageError(f"unknown family {name!r}; choose from {sorted(_FAMILY_FIELDS)}")
    cls, keys, defaults = _FAMILY_FIELDS[name]
    given = dict(defaults)
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip()
            if not eq or key not in keys:
                raise UsageError(f"bad parameter {item!r} for family {name!r}")
            given[key] = value.strip()
    missing = [k for k in keys if k not in given]
    if missing:
        raise UsageError(f"family {name!r} needs {', '.join(missing)}")
    args = []
    n_sym = 0
    for key in keys:
        value = given[key]
        if value == "sym":
            n_sym += 1
            args.append(ParamPoly.symbol(key))
        elif key == "s":
            if value not in ("0", "1"):
                raise UsageError("flag s takes 0 or 1")
            args.append(value == "1")
        else:
            args.append(parse_rational(value))
    if n_sym > 1:
        raise UsageError("at most one symbolic parameter per invocation")
    return cls(*args)
