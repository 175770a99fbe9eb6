"""Weighted Motzkin paths and the level-transfer dynamic program.

Two valuations are supported.  Under ``V`` a north-east step weighs 1, an
east step at level k weighs ``b(k)`` and a south-east step *starting* at
level k weighs ``lam(k)`` (so the path ``(0; NE, SE)`` weighs ``lam(1)``).
Under ``V1`` the three step kinds starting at level k weigh ``a(k)``,
``b(k)`` and ``c(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence, Union

from .exactnum import DomainError, UsageError, from_json, to_json

NE, E, SE = "NE", "E", "SE"
_STEP_DELTA = {NE: 1, E: 0, SE: -1}
_TO_CHAR = {NE: "U", E: "F", SE: "D"}
_FROM_CHAR = {v: k for k, v in _TO_CHAR.items()}

ENUMERATION_GUARD = 16

SeqLike = Union[Callable[[int], object], Sequence]


def as_sequence(values: SeqLike, name: str = "sequence", start: int = 0) -> Callable[[int], object]:
    """Wrap a table (``values[0]`` is index ``start``) or pass a callable through."""
    if callable(values):
        return values
    table = list(values)

    def lookup(n: int):
        if n < start or n - start >= len(table):
            raise DomainError(f"{name}[{n}] outside table range {start}..{start + len(table) - 1}")
        return table[n - start]

    return lookup


class _Memo:
    __slots__ = ("fn", "cache")

    def __init__(self, fn):
        self.fn = fn
        self.cache = {}

    def __call__(self, n):
        try:
            return self.cache[n]
        except KeyError:
            v = self.cache[n] = self.fn(n)
            return v


@dataclass(frozen=True)
class MotzkinPath:
    start: int
    steps: tuple

    def __post_init__(self):
        if self.start < 0:
            raise DomainError("start level must be >= 0")
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        level = self.start
        for s in steps:
            if s not in _STEP_DELTA:
                raise UsageError(f"unknown step {s!r}")
            level += _STEP_DELTA[s]
            if level < 0:
                raise DomainError("path drops below level 0")

    def __len__(self):
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.start + sum(_STEP_DELTA[s] for s in self.steps)

    def levels(self):
        """Starting level of each step."""
        level = self.start
        for s in self.steps:
            yield level, s
            level += _STEP_DELTA[s]

    def to_string(self) -> str:
        return "".join(_TO_CHAR[s] for s in self.steps)

    @classmethod
    def from_string(cls, start: int, text: str) -> "MotzkinPath":
        try:
            return cls(start, tuple(_FROM_CHAR[ch] for ch in text))
        except KeyError as exc:
            raise UsageError(f"bad step letter {exc.args[0]!r}") from None

    def to_json(self) -> dict:
        return {"start": self.start, "steps": self.to_string()}


@dataclass(frozen=True)
class Valuation:
    """Step weights.  ``kind="V"`` uses ``b, lam``; ``kind="V1"`` uses ``a, b, c``."""

    kind: str
    b: Callable[[int], object]
    lam: Callable[[int], object] | None = None
    a: Callable[[int], object] | None = None
    c: Callable[[int], object] | None = None

    @classmethod
    def v(cls, b: SeqLike, lam: SeqLike) -> "Valuation":
        """``lam`` tables start at level 1."""
        return cls("V", as_sequence(b, "b"), as_sequence(lam, "lambda", start=1))

    @classmethod
    def v1(cls, a: SeqLike, b: SeqLike, c: SeqLike) -> "Valuation":
        """``c`` tables start at level 1."""
        return cls("V1", b=as_sequence(b, "b"), a=as_sequence(a, "a"), c=as_sequence(c, "c", start=1))

    def step_weights(self):
        """Memoised (up, flat, down) weight functions keyed by starting level."""
        if self.kind == "V":
            one = Fraction(1)
            return (lambda k: one), _Memo(self.b), _Memo(self.lam)
        if self.kind == "V1":
            return _Memo(self.a), _Memo(self.b), _Memo(self.c)
        raise UsageError(f"unknown valuation kind {self.kind!r}")

    def to_json(self, levels: int) -> dict:
        """Tabulate levels ``0..levels`` (``lambda``/``c`` from level 1)."""
        if self.kind == "V":
            return {
                "kind": "V",
                "b": [to_json(self.b(k)) for k in range(levels + 1)],
                "lambda": [to_json(self.lam(k)) for k in range(1, levels + 1)],
            }
        return {
            "kind": "V1",
            "a": [to_json(self.a(k)) for k in range(levels + 1)],
            "b": [to_json(self.b(k)) for k in range(levels + 1)],
            "c": [to_json(self.c(k)) for k in range(1, levels + 1)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Valuation":
        conv = lambda xs: [from_json(x) for x in xs]  # noqa: E731
        if obj["kind"] == "V":
            return cls.v(conv(obj["b"]), conv(obj["lambda"]))
        if obj["kind"] == "V1":
            return cls.v1(conv(obj["a"]), conv(obj["b"]), conv(obj["c"]))
        raise UsageError(f"unknown valuation kind {obj['kind']!r}")


def path_weight(path: MotzkinPath, val: Valuation):
    up, flat, down = val.step_weights()
    w = Fraction(1)
    for level, step in path.levels():
        if step == NE:
            w = w * up(level)
        elif step == E:
            w = w * flat(level)
        else:
            w = w * down(level)
    return w


def enumerate_paths(length: int, start: int, end: int) -> list[MotzkinPath]:
    """Every Motzkin path of ``length`` steps from level ``start`` to ``end``."""
    if length > ENUMERATION_GUARD:
        raise UsageError(f"enumeration guard: length {length} > {ENUMERATION_GUARD}")
    out = []
    for steps in product((NE, E, SE), repeat=length):
        level = start
        for s in steps:
            level += _STEP_DELTA[s]
            if level < 0:
                break
        else:
            if level == end:
                out.append(MotzkinPath(start, steps))
    return out


def transfer_rows(length: int, start: int, val: Valuation, end: int | None = None) -> list[dict]:
    """Accumulators after 0..length steps: ``rows[m][k]`` = total weight to level k.

    With ``end`` given, levels that cannot reach ``end`` within the remaining
    steps are dropped, so weights are never queried above level
    ``(start + end + length) / 2``.
    """
    up, flat, down = val.step_weights()
    acc = {start: Fraction(1)}
    rows = [acc]
    for step in range(length):
        left = length - step - 1
        new = {}
        for k, w in acc.items():
            if not w:
                continue
            for target, delta in ((k + 1, 1), (k, 0), (k - 1, -1)):
                if target < 0 or (end is not None and abs(target - end) > left):
                    continue
                weight = up(k) if delta == 1 else flat(k) if delta == 0 else down(k)
                if not weight:
                    continue
                term = w * weight
                new[target] = new[target] + term if target in new else term
        acc = new
        rows.append(acc)
    return rows


def transfer_total(length: int, start: int, end: int, val: Valuation):
    """Total weight of all Motzkin paths from ``(0, start)`` to ``(length, end)``."""
    if start < 0 or end < 0:
        return Fraction(0)
    return transfer_rows(length, start, val, end)[length].get(end, Fraction(0))


def v_from_v1(val: Valuation) -> Valuation:
    """The ``V`` valuation with ``lam_k = a_{k-1} c_k`` and the same ``b``."""
    if val.kind != "V1":
        raise UsageError("expected a V1 valuation")
    a, c = _Memo(val.a), _Memo(val.c)
    return Valuation("V", val.b, lambda k: a(k - 1) * c(k))


def bridge_factor(val: Valuation, start: int, end: int):
    """Ratio ``V1-total / V-total`` for paths ``start -> end``.

    Unmatched up steps keep their ``a`` weights under ``V1``, while each
    unmatched down step from level k carries ``a_{k-1} c_k`` under ``V``
    but only ``c_k`` under ``V1``:

    * ``start < end``: ``V1 = a_start ... a_{end-1} * V``
    * ``start > end``: ``V = a_end ... a_{start-1} * V1``, returned here as
      ``1 / (a_end ... a_{start-1})``.
    """
    out = Fraction(1)
    if start < end:
        for k in range(start, end):
            out = out * val.a(k)
    elif start > end:
        for k in range(end, start):
            out = out * val.a(k)
        out = 1 / out
    return out
