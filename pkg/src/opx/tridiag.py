"""Tridiagonal operators ``T = L + D + U`` on the basis ``e_0, e_1, ...``.

``T e_n = u_{n-1} e_{n-1} + d_n e_n + l_n e_{n+1}`` (no ``u`` term at n = 0).
Matrix entries of powers are a surd prefactor times a Motzkin path total in
the weights ``d_n`` (east) and ``lam_n = l_{n-1} u_{n-1}`` (south-east).
The operator is treated formally on finitely supported vectors only.
"""

from __future__ import annotations

from contextlib import nullcontext as _nullcontext
from fractions import Fraction
from itertools import product
from typing import Sequence

import mpmath
import numpy as np

from .exactnum import DomainError, ParamPoly, Surd, UsageError, to_json
from .favard import RecurrencePair
from .motzkin import SeqLike, Valuation, _Memo, as_sequence, transfer_total

_ZERO = Fraction(0)
_ONE = Fraction(1)

EIGENVECTOR_LABEL = "formal eigenvector coefficients"


def collapse(x):
    """Return rational-valued surds as Fractions; leave everything else alone."""
    if isinstance(x, Surd) and x.is_rational():
        return x.coef
    return x


def _exact_weight(x):
    """A true product ``l*u`` or diagonal entry, as a Fraction or ParamPoly."""
    if isinstance(x, Surd):
        if not x.is_rational():
            raise DomainError(f"weight {x} is irrational; radicands do not cancel")
        return x.coef
    return x


class TridiagonalOperator:
    """Sequences ``l`` (e_n -> e_{n+1}), ``d`` (diagonal), ``u`` (e_{n+1} -> e_n)."""

    def __init__(self, l: SeqLike, d: SeqLike, u: SeqLike, name: str | None = None):
        self.l = _Memo(as_sequence(l, "l"))
        self.d = _Memo(as_sequence(d, "d"))
        self.u = _Memo(as_sequence(u, "u"))
        self.name = name

    def lam(self, n: int):
        if n < 1:
            raise DomainError("lambda is indexed from 1")
        return _exact_weight(self.l(n - 1) * self.u(n - 1))

    def diag(self, n: int):
        return _exact_weight(self.d(n))

    def recurrence(self) -> RecurrencePair:
        return RecurrencePair(self.diag, self.lam)

    def valuation(self) -> Valuation:
        return Valuation("V", self.diag, self.lam)

    def apply(self, vec: dict) -> dict:
        """``T`` on a finitely supported vector ``{index: coefficient}``."""
        out: dict = {}

        def add(k, v):
            out[k] = out[k] + v if k in out else v

        for n, c in vec.items():
            add(n, c * self.d(n))
            add(n + 1, c * self.l(n))
            if n > 0:
                add(n - 1, c * self.u(n - 1))
        return out

    def is_rational(self, n_max: int) -> bool:
        for n in range(n_max + 1):
            for v in (self.l(n), self.d(n), self.u(n)):
                if isinstance(v, Surd) and not v.is_rational():
                    return False
                if isinstance(v, ParamPoly):
                    return False
        return True

    def to_json(self, n_max: int) -> dict:
        if self.name:
            return {"family": self.name}
        return {
            "l": [to_json(collapse(self.l(n))) for n in range(n_max + 1)],
            "d": [to_json(collapse(self.d(n))) for n in range(n_max + 1)],
            "u": [to_json(collapse(self.u(n))) for n in range(n_max + 1)],
        }


def word_entry(T: TridiagonalOperator, word: str, i: int, d: int):
    """``<e_{i+d}, X e_i>`` for a word over {L, D, U}, applied right to left."""
    if i < 0 or i + d < 0:
        raise DomainError("indices must be non-negative")
    idx, coef = i, _ONE
    for letter in reversed(word):
        if letter == "L":
            coef = coef * T.l(idx)
            idx += 1
        elif letter == "U":
            if idx == 0:
                return _ZERO
            coef = coef * T.u(idx - 1)
            idx -= 1
        elif letter == "D":
            coef = coef * T.d(idx)
        else:
            raise UsageError(f"bad letter {letter!r} in word")
    return collapse(coef) if idx == i + d else _ZERO


def all_words(m: int):
    for letters in product("LDU", repeat=m):
        yield "".join(letters)


def entry_prefactor(T: TridiagonalOperator, i: int, d: int):
    """``l_i...l_{i+d-1}`` for d > 0, ``u_{i+d}...u_{i-1}`` for d < 0, else 1."""
    out = _ONE
    if d > 0:
        for n in range(i, i + d):
            out = out * T.l(n)
    elif d < 0:
        for n in range(i + d, i):
            out = out * T.u(n)
    return out


def matrix_entry(T: TridiagonalOperator, m: int, i: int, d: int):
    """``<e_{i+d}, T^m e_i>`` exactly.

    For ``d < 0`` the path total runs from level ``i+d`` up to ``i``; the
    unmatched down steps then carry exactly the ``u`` prefactor.
    """
    if i < 0 or i + d < 0 or m < 0:
        raise DomainError("need i >= 0, i + d >= 0 and m >= 0")
    val = T.valuation()
    if d >= 0:
        total = transfer_total(m, i, i + d, val)
    else:
        total = transfer_total(m, i + d, i, val)
    if not total:
        return _ZERO
    pre = collapse(entry_prefactor(T, i, d))
    if isinstance(pre, Surd):
        if isinstance(total, ParamPoly):
            raise DomainError("symbolic path total with irrational prefactor")
        return collapse(pre * total)
    return pre * total


def _to_float(x) -> float:
    if isinstance(x, ParamPoly):
        raise UsageError("float mode needs numeric entries")
    return float(x)


def truncated_power_oracle(T: TridiagonalOperator, m: int, N: int, mode: str = "exact"):
    """``m``-th power of ``T`` restricted to ``span{e_0..e_N}``.

    Entry ``[r][c]`` is ``<e_r, T^m e_c>``; it is untouched by truncation
    whenever ``c + m <= N``.
    """
    if mode not in ("exact", "float"):
        raise UsageError(f"unknown mode {mode!r}")
    size = N + 1
    if mode == "float":
        A = np.zeros((size, size))
        for n in range(size):
            A[n, n] = _to_float(T.d(n))
            if n + 1 < size:
                A[n + 1, n] = _to_float(T.l(n))
                A[n, n + 1] = _to_float(T.u(n))
        return np.linalg.matrix_power(A, m)

    def exact(v):
        v = collapse(v)
        if isinstance(v, Surd):
            raise UsageError("exact mode needs rational entries; use float mode for surds")
        return v

    A = [[_ZERO] * size for _ in range(size)]
    for n in range(size):
        A[n][n] = exact(T.d(n))
        if n + 1 < size:
            A[n + 1][n] = exact(T.l(n))
            A[n][n + 1] = exact(T.u(n))
    P = [[_ONE if r == c else _ZERO for c in range(size)] for r in range(size)]
    for _ in range(m):
        P = [
            [sum((P[r][k] * A[k][c] for k in range(max(0, c - 1), min(size, c + 2))), _ZERO)
             for c in range(size)]
            for r in range(size)
        ]
    return P


def eigenvector_coeffs(T: TridiagonalOperator, z, N: int):
    """Formal eigenvector coefficients for eigenvalue ``z``.

    Returns ``(p, h)`` with ``p[n] = p_n(z)`` from the recurrence ``b_n = d_n``,
    ``lam_n = u_{n-1} l_{n-1}`` and ``h[n] = p[n] / (u_0 ... u_{n-1})``.  No
    claim is made that ``sum h_n e_n`` lies in the Hilbert space.
    """
    for n in range(N):
        if not T.u(n):
            raise DomainError(f"u_{n} = 0: eigenvector recurrence breaks at index {n}")
        if not T.l(n):
            raise DomainError(f"l_{n} = 0: eigenvector recurrence breaks at index {n}")
    p = [_ONE]
    if N >= 1:
        p.append((z - T.diag(0)) * p[0])
    for n in range(1, N):
        p.append((z - T.diag(n)) * p[n] - T.lam(n) * p[n - 1])
    h = []
    uprod = _ONE
    for n, pn in enumerate(p):
        h.append(collapse(pn / uprod))
        if n < N:
            uprod = uprod * T.u(n)
    return p, h


def p_space_residuals(T: TridiagonalOperator, z, p: Sequence) -> list:
    """Exact residuals of ``p_1 = (z-d_0) p_0`` and the three-term step."""
    out = [p[1] - (z - T.diag(0)) * p[0]]
    for n in range(1, len(p) - 1):
        out.append(p[n + 1] - ((z - T.diag(n)) * p[n] - T.lam(n) * p[n - 1]))
    return out


def _to_mpf(x):
    x = collapse(x)
    if isinstance(x, ParamPoly):
        raise UsageError("float mode needs numeric entries")
    if isinstance(x, Surd):
        return mpmath.mpf(x.coef.numerator) / x.coef.denominator * mpmath.sqrt(x.radicand)
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def h_space_residuals(T: TridiagonalOperator, z, h: Sequence, exact: bool = True,
                      relative: bool = False, dps: int | None = None) -> list:
    """Residuals of ``(T h)_n - z h_n`` for ``n < len(h) - 1``.

    Exact mode relies on every term of one equation sharing a radicand,
    which holds when each ``l_n u_n`` is rational.  Float mode works in
    binary64, or with ``dps`` decimal digits through mpmath.  ``relative=True``
    divides each residual by the sum of the absolute values of its terms.
    """
    if exact:
        out = []
        for n in range(len(h) - 1):
            terms = [T.d(n) * h[n], T.u(n) * h[n + 1], -(z * h[n])]
            if n > 0:
                terms.append(T.l(n - 1) * h[n - 1])
            acc = _ZERO
            for t in terms:
                acc = acc + t
            out.append(collapse(acc))
        return out
    if dps is None:
        conv, ctx = _to_float, None
    else:
        conv, ctx = _to_mpf, mpmath.workdps(dps)
    out = []
    with ctx if ctx is not None else _nullcontext():
        for n in range(len(h) - 1):
            terms = [conv(T.d(n)) * conv(h[n]), conv(T.u(n)) * conv(h[n + 1]), -conv(z) * conv(h[n])]
            if n > 0:
                terms.append(conv(T.l(n - 1)) * conv(h[n - 1]))
            r = sum(terms)
            if relative:
                scale = sum(abs(t) for t in terms)
                r = r / scale if scale else r
            out.append(float(r))
    return out
