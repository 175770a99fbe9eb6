"""Truncated formal power series over the exact scalar rings.

A :class:`TruncatedSeries` stores the coefficients of ``t^0 .. t^order``.
Binary operations truncate to the smaller order.  Coefficients may be
``Fraction`` or :class:`~opx.exactnum.ParamPoly`; anything that needs a
multiplicative inverse (division, reversion) only ever inverts a rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactnum import DomainError, ParamPoly, UsageError, as_rational, to_json, from_json

DEFAULT_ORDER = 24

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _inverse(c) -> Fraction:
    try:
        c = as_rational(c)
    except DomainError:
        raise DomainError(f"cannot invert non-constant coefficient {c}") from None
    if c == 0:
        raise DomainError("division by a series with zero constant term")
    return 1 / c


class TruncatedSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise UsageError("series order must be >= 0")
        cs = cs[: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in cs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0, 1], order)

    # -- access -----------------------------------------------------------
    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient t^{n} outside order {self.order}")
        return self.coeffs[n]

    def egf(self, n: int):
        """``n! [t^n]``, the exponential-generating-function coefficient."""
        return self[n] * factorial(n)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    # -- ring operations --------------------------------------------------
    def _lift(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            return TruncatedSeries([other], self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = _ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * _inverse(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def reciprocal(self) -> "TruncatedSeries":
        inv0 = _inverse(self.coeffs[0])
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return TruncatedSeries(out, self.order)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ---------------------------------------------------------
    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0], 0)
        return TruncatedSeries([c * i for i, c in enumerate(self.coeffs) if i], self.order - 1)

    def integral(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term; order stays put."""
        return TruncatedSeries(
            [_ZERO] + [self.coeffs[i] / (i + 1) for i in range(self.order)], self.order
        )

    def exp(self) -> "TruncatedSeries":
        """``exp`` of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise DomainError("exp needs a zero constant term")
        # E' = S' E  =>  n e_n = sum_k k s_k e_{n-k}
        e = [_ONE]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * k * e[n - k]
            e.append(acc / n)
        return TruncatedSeries(e, self.order)

    def log(self) -> "TruncatedSeries":
        """``log`` of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise DomainError("log needs constant term 1")
        if self.order == 0:
            return TruncatedSeries([0], 0)
        d = self.derivative() * self.truncate(self.order - 1).reciprocal()
        return _integrate_to(d, self.order)

    def power(self, exponent) -> "TruncatedSeries":
        """``exp(exponent * log(self))`` for constant term 1; exponent may be symbolic."""
        if self.coeffs[0] != 1:
            raise DomainError("power needs constant term 1")
        return (self.log() * exponent).exp()

    # -- composition ------------------------------------------------------
    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition needs inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = TruncatedSeries.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    __call__ = compose

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse ``h`` with ``self(h(t)) = t``."""
        if self.coeffs[0] != 0:
            raise DomainError("reversion needs g(0) = 0")
        if self.order < 1 or self.coeffs[1] == 0:
            raise DomainError("reversion needs g'(0) != 0")
        inv1 = _inverse(self.coeffs[1])
        h = [_ZERO, inv1]
        for n in range(2, self.order + 1):
            trial = TruncatedSeries(h + [_ZERO], n)
            c = self.truncate(n).compose(trial).coeffs[n]
            h.append(-c * inv1)
        return TruncatedSeries(h, self.order)

    # -- comparison / output ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        return cls([from_json(c) for c in obj["coeffs"]], obj["order"])


def _integrate_to(d: TruncatedSeries, order: int) -> TruncatedSeries:
    return TruncatedSeries([_ZERO] + [d.coeffs[i] / (i + 1) for i in range(order)], order)


# ---------------------------------------------------------------------------
# top-level operations


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise UsageError(f"unknown series operation {op!r}")


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f.compose(g)


def series_reversion(g: TruncatedSeries) -> TruncatedSeries:
    return g.revert()


def series_pow_param(base: TruncatedSeries, exponent) -> TruncatedSeries:
    return base.power(exponent)


def _exp_coeffs(order):
    return [Fraction(1, factorial(n)) for n in range(order + 1)]


def _sin_coeffs(order):
    return [
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 else _ZERO for n in range(order + 1)
    ]


def _cos_coeffs(order):
    return [
        _ZERO if n % 2 else Fraction((-1) ** (n // 2), factorial(n)) for n in range(order + 1)
    ]


def named_series(name: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Maclaurin series of ``exp, log1p, sin, cos, tan, sec, arctan``."""
    if order < 0:
        raise UsageError("series order must be >= 0")
    if name == "exp":
        return TruncatedSeries(_exp_coeffs(order), order)
    if name == "log1p":
        return TruncatedSeries(
            [_ZERO] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)], order
        )
    if name == "sin":
        return TruncatedSeries(_sin_coeffs(order), order)
    if name == "cos":
        return TruncatedSeries(_cos_coeffs(order), order)
    if name == "tan":
        return named_series("sin", order) / named_series("cos", order)
    if name == "sec":
        return named_series("cos", order).reciprocal()
    if name == "arctan":
        return TruncatedSeries(
            [Fraction((-1) ** (n // 2), n) if n % 2 else _ZERO for n in range(order + 1)], order
        )
    raise UsageError(f"unknown series {name!r}")
