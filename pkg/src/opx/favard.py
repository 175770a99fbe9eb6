"""Monic polynomial systems from a three-term recurrence.

``p_0 = 1``, ``p_1 = x - b_0`` and ``p_{n+1} = (x - b_n) p_n - lam_n p_{n-1}``.
The recurrence weights ``lam`` are indexed from 1; there is no ``lam_0``.
Moments and inverse-polynomial coefficients come from the Motzkin transfer
DP, and each has an independent linear-algebra route for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .exactnum import DomainError, UsageError, to_json
from .motzkin import SeqLike, Valuation, _Memo, as_sequence, transfer_rows, transfer_total

X_DEGREE_GUARD = 32

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Poly:
    """Dense polynomial in x over any exact scalar ring (``coeffs[i]`` of ``x^i``)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) - 1 > X_DEGREE_GUARD:
            raise UsageError(f"x-degree {len(cs) - 1} exceeds guard {X_DEGREE_GUARD}")
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int) -> "Poly":
        return cls([0] * n + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift_x(self) -> "Poly":
        """Multiply by x."""
        return Poly((_ZERO,) + self.coeffs)

    def __call__(self, z):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def affine(self, scale, offset) -> "Poly":
        """The polynomial ``x -> self(scale*x + offset)``."""
        sub = Poly((offset, scale))
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * sub + c
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return Poly((other,)).coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self):
        return [to_json(c) for c in self.coeffs]


class RecurrencePair:
    """The data ``(b_n)_{n>=0}`` and ``(lam_n)_{n>=1}`` of a monic recurrence.

    ``b`` and ``lam`` may be callables or finite tables; a ``lam`` table
    starts at index 1.  With ``ops=True`` every queried ``lam_n`` is checked
    to be nonzero.
    """

    def __init__(self, b: SeqLike, lam: SeqLike, ops: bool = False):
        self._b = _Memo(as_sequence(b, "b"))
        self._lam = _Memo(as_sequence(lam, "lambda", start=1))
        self.ops = ops

    def b(self, n: int):
        if n < 0:
            raise DomainError(f"b_{n} is undefined")
        return self._b(n)

    def lam(self, n: int):
        if n < 1:
            raise DomainError(f"lambda_{n} is undefined; indexing starts at 1")
        v = self._lam(n)
        if self.ops and v == 0:
            raise DomainError(f"lambda_{n} = 0 violates the OPS condition")
        return v

    def valuation(self) -> Valuation:
        return Valuation("V", self.b, self.lam)

    def lam_product(self, n: int):
        out = _ONE
        for j in range(1, n + 1):
            out = out * self.lam(j)
        return out

    def to_json(self, n_max: int) -> dict:
        return {
            "b": [to_json(self.b(n)) for n in range(n_max + 1)],
            "lambda": [to_json(self.lam(n)) for n in range(1, n_max + 1)],
        }


def build_ops(rec: RecurrencePair, n_max: int) -> list[Poly]:
    """Monic ``p_0 .. p_{n_max}``."""
    seq = [Poly((1,))]
    if n_max == 0:
        return seq
    x = Poly.x()
    seq.append(x - rec.b(0))
    for n in range(1, n_max):
        seq.append((x - rec.b(n)) * seq[n] - seq[n - 1] * rec.lam(n))
    return seq


def moments(rec: RecurrencePair, m_max: int) -> list:
    """``mu_0 .. mu_{m_max}`` as total weights of Motzkin paths 0 -> 0."""
    rows = transfer_rows(m_max, 0, rec.valuation(), end=0)
    return [row.get(0, _ZERO) for row in rows]


def inverse_coeffs(rec: RecurrencePair, n_max: int) -> list[list]:
    """``q[n][k]`` with ``x^n = sum_k q[n][k] p_k(x)``; zero ``lam`` values allowed."""
    rows = transfer_rows(n_max, 0, rec.valuation())
    return [[row.get(k, _ZERO) for k in range(n + 1)] for n, row in enumerate(rows)]


def functional_apply(mu: Sequence, poly: Poly):
    """Moment functional on ``poly`` given the moment list ``mu``."""
    if poly.degree >= len(mu):
        raise DomainError(f"need moments through {poly.degree}, have {len(mu) - 1}")
    acc = _ZERO
    for c, m in zip(poly.coeffs, mu):
        if c:
            acc = acc + c * m
    return acc


def mixed_moment_check(rec: RecurrencePair, n: int, k: int, l: int, *, mu=None, seq=None):
    """Both sides of ``f(x^n p_k p_l) = lam_1...lam_l * (paths k -> l of length n)``."""
    if seq is None:
        seq = build_ops(rec, max(k, l))
    if mu is None:
        mu = moments(rec, n + k + l)
    lhs = functional_apply(mu, Poly.monomial(n) * seq[k] * seq[l])
    rhs = rec.lam_product(l) * transfer_total(n, k, l, rec.valuation())
    return lhs, rhs


def change_of_basis_oracle(seq: Sequence[Poly], n_max: int) -> list[list]:
    """Invert the unitriangular matrix of ``seq`` by back-substitution."""
    for n in range(n_max + 1):
        p = seq[n]
        if p.degree != n or p.coeff(n) != 1:
            raise DomainError(f"p_{n} is not monic of degree {n}")
    q = []
    for n in range(n_max + 1):
        row = [_ZERO] * (n + 1)
        row[n] = _ONE
        p = seq[n]
        for kk in range(n - 1, -1, -1):
            acc = _ZERO
            for j in range(kk, n):
                c = p.coeff(j)
                if c and q[j][kk]:
                    acc = acc + c * q[j][kk]
            row[kk] = -acc
        q.append(row)
    return q


def recurrence_from_polys(seq: Sequence[Poly]) -> tuple[list, list]:
    """Recover ``b_0..b_{N-1}`` and ``lam_1..lam_{N-1}`` from monic ``p_0..p_N``.

    Raises :class:`DomainError` if the sequence does not satisfy any
    three-term recurrence.
    """
    x = Poly.x()
    bs, lams = [], []
    for n in range(len(seq) - 1):
        p, nxt = seq[n], seq[n + 1]
        # coefficient of x^n in x p_n - p_{n+1} is b_n
        b = (x * p - nxt).coeff(n)
        rest = x * p - nxt - p * b
        if n == 0:
            lam = None
            residue = rest
        else:
            lam = rest.coeff(n - 1)
            residue = rest - seq[n - 1] * lam
        if residue != Poly():
            raise DomainError(f"p_{n + 1} breaks the three-term recurrence")
        bs.append(b)
        if lam is not None:
            lams.append(lam)
    return bs, lams


def table_to_json(table) -> list:
    return [[to_json(v) for v in row] for row in table]
