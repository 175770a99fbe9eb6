"""Exact scalar rings: rationals, quadratic surds a*sqrt(r), univariate
parameter polynomials over Q.

Rationals are plain :class:`fractions.Fraction` values.  :class:`Surd` and
:class:`ParamPoly` interoperate with ``Fraction`` and ``int`` through the
usual reflected operators, so generic code can start from ``Fraction(0)``
and ``Fraction(1)`` and never needs to know which ring it is working in.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

__all__ = [
    "Rational",
    "DomainError",
    "UsageError",
    "Surd",
    "ParamPoly",
    "parse_rational",
    "surd_mul",
    "surd_normalize",
    "pochhammer",
    "binomial",
    "is_symbolic",
    "as_rational",
    "scalar_to_str",
    "to_json",
    "from_json",
]


class DomainError(ValueError):
    """A mathematically invalid input (negative radicand, zero pivot, ...)."""


class UsageError(ValueError):
    """An input the API does not accept (bad flag, enumeration guard, ...)."""


_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` strictly; no decimals, no spaces."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise UsageError(f"not a rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise UsageError(f"zero denominator: {text!r}")
    return Fraction(text)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _square_part(n: int) -> tuple[int, int]:
    """Split ``n > 0`` as ``s*s*r`` with ``r`` squarefree; returns ``(s, r)``."""
    s, r = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    return s, r * n


class Surd:
    """The real number ``coef * sqrt(radicand)`` in normal form.

    Normal form keeps ``radicand`` a squarefree positive integer (the
    denominator is rationalised into the coefficient), and the zero surd is
    ``0*sqrt(1)``.  Multiplication and division are closed; addition only
    works when both radicands agree, or one side is zero.
    """

    __slots__ = ("coef", "radicand")

    def __init__(self, coef=1, radicand=1):
        coef = _as_fraction(coef)
        radicand = _as_fraction(radicand)
        if radicand < 0:
            raise DomainError(f"negative radicand {radicand}")
        if coef == 0 or radicand == 0:
            self.coef, self.radicand = Fraction(0), Fraction(1)
            return
        # sqrt(p/q) = sqrt(p*q)/q
        p, q = radicand.numerator, radicand.denominator
        s, r = _square_part(p * q)
        self.coef = coef * Fraction(s, q)
        self.radicand = Fraction(r)

    @classmethod
    def _raw(cls, coef: Fraction, radicand: int) -> "Surd":
        obj = cls.__new__(cls)
        if coef == 0:
            obj.coef, obj.radicand = Fraction(0), Fraction(1)
        else:
            obj.coef, obj.radicand = coef, Fraction(radicand)
        return obj

    @classmethod
    def sqrt(cls, x) -> "Surd":
        return cls(1, x)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.coef == 0

    def is_rational(self) -> bool:
        return self.radicand == 1

    def to_rational(self) -> Fraction:
        if self.radicand != 1:
            raise DomainError(f"{self} is irrational")
        return self.coef

    # -- arithmetic -------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, Surd):
            a, b = int(self.radicand), int(other.radicand)
            g = math.gcd(a, b)
            # a, b squarefree: a*b = g^2 * (a/g)*(b/g), the latter squarefree
            return Surd._raw(self.coef * other.coef * g, (a // g) * (b // g))
        if isinstance(other, (int, Fraction)):
            return Surd._raw(self.coef * other, int(self.radicand))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("surd division by zero")
            return Surd._raw(self.coef / other, int(self.radicand))
        if isinstance(other, Surd):
            if other.is_zero():
                raise ZeroDivisionError("surd division by zero")
            # 1/(c*sqrt(r)) = sqrt(r)/(c*r)
            inv = Surd._raw(1 / (other.coef * other.radicand), int(other.radicand))
            return self * inv
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd._raw(Fraction(other), 1) / self
        return NotImplemented

    def __neg__(self):
        return Surd._raw(-self.coef, int(self.radicand))

    def __pos__(self):
        return self

    def __abs__(self):
        return Surd._raw(abs(self.coef), int(self.radicand))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Surd._raw(Fraction(other), 1)
        if not isinstance(other, Surd):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.radicand != other.radicand:
            raise DomainError(f"cannot add {self} and {other}: radicands differ")
        return Surd._raw(self.coef + other.coef, int(self.radicand))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Surd)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Surd._raw(Fraction(1), 1)
        for _ in range(n):
            out = out * self
        return out

    # -- comparison / conversion -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Surd):
            return self.coef == other.coef and self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return self.radicand == 1 and self.coef == other
        return NotImplemented

    def __hash__(self):
        if self.radicand == 1:
            return hash(self.coef)
        return hash((self.coef, self.radicand))

    def __float__(self):
        return float(self.coef) * math.sqrt(int(self.radicand))

    def __bool__(self):
        return self.coef != 0

    def __repr__(self):
        return f"Surd({self.coef}, {self.radicand})"

    def __str__(self):
        if self.radicand == 1:
            return str(self.coef)
        return f"{self.coef}*sqrt({self.radicand})"


def surd_normalize(coefficient, radicand) -> Surd:
    return Surd(coefficient, radicand)


def surd_mul(x: Surd, y: Surd) -> Surd:
    return x * y


class ParamPoly:
    """Dense polynomial in one named parameter with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``param**i``; trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()``.  A constant
    ParamPoly compares and hashes equal to the corresponding ``Fraction``.
    """

    __slots__ = ("param", "coeffs")

    def __init__(self, param: str, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.param = param
        self.coeffs = tuple(cs)

    @classmethod
    def symbol(cls, name: str) -> "ParamPoly":
        return cls(name, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "ParamPoly | None":
        if isinstance(other, ParamPoly):
            if other.param != self.param and not (other.is_constant() or self.is_constant()):
                raise UsageError(
                    f"mixing parameters {self.param!r} and {other.param!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly(self.param, (other,))
        return None

    def _name_with(self, other: "ParamPoly") -> str:
        return other.param if self.is_constant() and not other.is_constant() else self.param

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return ParamPoly(self._name_with(o), (self.coeff(i) + o.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.param, (-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly(self.param, (c * other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return ParamPoly(self._name_with(o))
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return ParamPoly(self._name_with(o), out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamPoly) and other.is_constant():
            other = other.constant()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("ParamPoly division by zero")
            return ParamPoly(self.param, (c / other for c in self.coeffs))
        if isinstance(other, ParamPoly):
            raise DomainError(f"cannot divide by non-constant {other}")
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not self.is_constant():
            raise DomainError(f"cannot divide by non-constant {self}")
        return Fraction(other) / self.constant()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ParamPoly(self.param, (1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "ParamPoly":
        return ParamPoly(self.param, (i * c for i, c in enumerate(self.coeffs) if i))

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            if self.coeffs != other.coeffs:
                return False
            return self.param == other.param or self.is_constant()
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self.param, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"ParamPoly({self.param!r}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if i == 0 else (self.param if i == 1 else f"{self.param}^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out


Scalar = Union[Fraction, Surd, ParamPoly]


def is_symbolic(x) -> bool:
    return isinstance(x, ParamPoly) and not x.is_constant()


def as_rational(x) -> Fraction:
    """Collapse a rational-valued Surd or constant ParamPoly to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Surd):
        return x.to_rational()
    if isinstance(x, ParamPoly):
        return x.constant()
    raise TypeError(f"not an exact scalar: {x!r}")


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    out = ParamPoly(a.param, (1,)) if isinstance(a, ParamPoly) else Fraction(1)
    for j in range(n):
        out = out * (a + j)
    return out


def binomial(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def scalar_to_str(x) -> str:
    """Flat string form: ``p/q``, ``alpha^2+3*alpha+2``, ``a*sqrt(r)``."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def to_json(x):
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return str(Fraction(x))
    if isinstance(x, Surd):
        return {"coef": str(x.coef), "radicand": str(x.radicand)}
    if isinstance(x, ParamPoly):
        return {"param": x.param, "coeffs": [str(c) for c in x.coeffs]}
    if isinstance(x, float):
        return x
    raise TypeError(f"cannot serialise {x!r}")


def from_json(obj):
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict) and "radicand" in obj:
        return Surd(parse_rational(obj["coef"]), parse_rational(obj["radicand"]))
    if isinstance(obj, dict) and "param" in obj:
        return ParamPoly(obj["param"], (parse_rational(c) for c in obj["coeffs"]))
    raise UsageError(f"not a serialised scalar: {obj!r}")
