"""Brute-force permutation statistics used as independent oracles.

Every function walks permutations explicitly; nothing here touches the
recurrence machinery, so agreement with it is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb

from .exactnum import UsageError

ZIGZAG_GUARD = 10
EULER_GUARD = 8
PERM_GUARD = 9


def _alternating(n: int, first_rise: bool):
    """Permutations of 1..n whose comparisons alternate, pruned depth-first.

    ``first_rise=True`` gives ``s1 < s2 > s3 < ...``; otherwise ``s1 > s2 < ...``.
    """
    used = [False] * (n + 1)
    perm: list[int] = []

    def rec():
        if len(perm) == n:
            yield tuple(perm)
            return
        pos = len(perm)  # comparison between perm[pos-1] and the new entry
        rise = (pos % 2 == 1) == first_rise
        for v in range(1, n + 1):
            if used[v]:
                continue
            if pos and (perm[-1] < v) != rise:
                continue
            used[v] = True
            perm.append(v)
            yield from rec()
            perm.pop()
            used[v] = False

    yield from rec()


def zigzag_permutations(two_n: int):
    """Up-down-...-up permutations of 1..two_n (first and last comparisons rise)."""
    if two_n % 2:
        raise UsageError("zig-zag moments are defined for even lengths only")
    return _alternating(two_n, first_rise=True)


def left_to_right_minima(perm) -> int:
    count, low = 0, None
    for v in perm:
        if low is None or v < low:
            low = v
            count += 1
    return count


def zigzag_moment(two_n: int, eta):
    """Sum of ``eta^(left-to-right minima)`` over zig-zag permutations of length two_n."""
    if two_n > ZIGZAG_GUARD:
        raise UsageError(f"enumeration guard: two_n = {two_n} > {ZIGZAG_GUARD}")
    counts = zigzag_minima_counts(two_n)
    acc = Fraction(0)
    for s, c in enumerate(counts):
        if c:
            acc = acc + eta**s * c
    return acc


def zigzag_minima_counts(two_n: int) -> list[int]:
    """``counts[s]`` = number of zig-zag permutations with ``s`` left-to-right minima."""
    if two_n > ZIGZAG_GUARD:
        raise UsageError(f"enumeration guard: two_n = {two_n} > {ZIGZAG_GUARD}")
    counts = [0] * (two_n + 1)
    for p in zigzag_permutations(two_n):
        counts[left_to_right_minima(p)] += 1
    return counts


def down_up_odd_count(length: int) -> int:
    """Odd-length permutations ``s1 > s2 < s3 > ... < s_length`` (descent first, rise last)."""
    if length % 2 == 0:
        raise UsageError("length must be odd")
    if length == 1:
        return 1
    return sum(1 for _ in _alternating(length, first_rise=False))


def euler_table(n_max: int):
    """``(E, T)`` where ``E[n][k]`` is the coefficient of ``eta^k`` in the 2n-th zig-zag moment.

    ``E`` follows ``E_{2n,k} = sum_m binom(2n-1, 2m) E_{2m,k-1} T_{2n-2m-1}``;
    ``T[m]`` counts down-up odd permutations of length ``2m+1`` by enumeration.
    """
    if n_max > EULER_GUARD:
        raise UsageError(f"euler_table guard: n_max = {n_max} > {EULER_GUARD}")
    T = [down_up_odd_count(2 * m + 1) for m in range(n_max)]
    E = [[1] + [0] * n_max]
    for n in range(1, n_max + 1):
        row = [0] * (n_max + 1)
        for k in range(1, n + 1):
            row[k] = sum(comb(2 * n - 1, 2 * m) * E[m][k - 1] * T[n - m - 1] for m in range(n))
        E.append(row)
    return E, T


def descents(perm) -> int:
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def descent_weighted_sum(n: int, w) -> Fraction:
    """``sum over S_n of w^des``; at ``w = 2`` the ordered Bell numbers."""
    if n > PERM_GUARD:
        raise UsageError(f"enumeration guard: n = {n} > {PERM_GUARD}")
    counts = [0] * max(n, 1)
    for p in permutations(range(n)):
        counts[descents(p)] += 1
    w = Fraction(w)
    return sum((c * w**j for j, c in enumerate(counts) if c), Fraction(0))


def cycle_lengths(perm) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return out


def odd_cycle_counts(n: int) -> list[int]:
    """``c[j]`` = number of permutations of n letters with exactly j odd cycles."""
    if n > PERM_GUARD:
        raise UsageError(f"enumeration guard: n = {n} > {PERM_GUARD}")
    c = [0] * (n + 1)
    for p in permutations(range(n)):
        c[sum(1 for L in cycle_lengths(p) if L % 2)] += 1
    return c
