"""
Straight and shifted standard Young tableaux.

A shape is a tuple of row lengths. Straight shapes are weakly decreasing,
shifted shapes strictly decreasing with row ``r`` (0-based) indented ``r``
cells. Shifted-ness is always an explicit flag, never inferred from the parts.

>>> t = Tableau(((1, 2, 4), (3,)))
>>> t.shape, t.descent_set()
((3, 1), frozenset({2}))
>>> len(generate_syt((3, 2)))
5
>>> count_shifted_staircase(6)
286
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable

Shape = tuple[int, ...]


def is_partition(parts: Iterable[int], strict: bool = False) -> bool:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        return False
    if strict:
        return all(a > b for a, b in zip(parts, parts[1:]))
    return all(a >= b for a, b in zip(parts, parts[1:]))


def _check_shape(shape: Shape, shifted: bool) -> Shape:
    shape = tuple(int(p) for p in shape)
    if not is_partition(shape, strict=shifted):
        kind = "strictly" if shifted else "weakly"
        raise ValueError(f"shape {shape} is not {kind} decreasing and positive")
    return shape


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a straight or shifted shape, stored row by row."""

    rows: tuple[tuple[int, ...], ...]
    shifted: bool = False

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shape(tuple(len(r) for r in rows), self.shifted)
        size = sum(len(r) for r in rows)
        if sorted(x for r in rows for x in r) != list(range(1, size + 1)):
            raise ValueError(f"entries of {rows} are not 1..{size}")
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r + 1} of {rows} is not increasing")
            if r == 0:
                continue
            above = rows[r - 1]
            off = 1 if self.shifted else 0
            for c, x in enumerate(row):
                # cell (r, c) sits under cell (r-1, c+off) of the previous row
                if above[c + off] >= x:
                    raise ValueError(f"column through entry {x} of {rows} is not increasing")

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row_of(self) -> dict[int, int]:
        """Map each entry to its 0-based row."""
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def position(self, entry: int) -> tuple[int, int]:
        """0-based (row, column) of ``entry``; columns are absolute for shifted shapes."""
        for r, row in enumerate(self.rows):
            if entry in row:
                return r, row.index(entry) + (r if self.shifted else 0)
        raise KeyError(entry)

    def descent_set(self) -> frozenset[int]:
        return tableau_descent_set(self)

    def first_column(self) -> tuple[int, ...]:
        if self.shifted:
            raise ValueError("first column is only defined here for straight shapes")
        return tuple(row[0] for row in self.rows)

    def transpose(self) -> Tableau:
        if self.shifted:
            raise ValueError("cannot transpose a shifted tableau")
        width = len(self.rows[0]) if self.rows else 0
        cols = tuple(tuple(row[c] for row in self.rows if len(row) > c) for c in range(width))
        return Tableau(cols)

    def __str__(self) -> str:
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)


def tableau_descent_set(t: Tableau) -> frozenset[int]:
    """Entries ``i`` such that ``i + 1`` lies in a strictly lower row than ``i``.

    This is the convention under which the descent set of a permutation equals
    the descent set of its RSK recording tableau.
    """
    row = t.row_of()
    return frozenset(i for i in range(1, t.size) if row[i + 1] > row[i])


def _removable_rows(shape: Shape, shifted: bool) -> list[int]:
    out = []
    for r, part in enumerate(shape):
        nxt = shape[r + 1] if r + 1 < len(shape) else 0
        if shifted:
            if part - 1 > nxt or (r == len(shape) - 1):
                out.append(r)
        elif part > nxt:
            out.append(r)
    return out


def generate_syt(shape: Shape, shifted: bool = False) -> list[Tableau]:
    """All standard tableaux of ``shape``, sorted by their rows."""
    shape = _check_shape(shape, shifted)
    out = [Tableau(rows, shifted) for rows in _fillings(shape, shifted)]
    out.sort(key=lambda t: t.rows)
    return out


@lru_cache(maxsize=None)
def _fillings(shape: Shape, shifted: bool) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for r in _removable_rows(shape, shifted):
        smaller = list(shape)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop()
        for rows in _fillings(tuple(smaller), shifted):
            rows = list(rows) + [()] * (len(shape) - len(rows))
            rows[r] = rows[r] + (n,)
            out.append(tuple(rows))
    return tuple(out)


def hook_lengths(shape: Shape) -> list[list[int]]:
    shape = _check_shape(shape, False)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    return [[(p - c - 1) + (conj[c] - r - 1) + 1 for c in range(p)] for r, p in enumerate(shape)]


def count_syt_hook_formula(shape: Shape) -> int:
    """Number of standard tableaux of a straight shape by the hook-length formula."""
    hooks = hook_lengths(shape)
    return factorial(sum(shape)) // prod(h for row in hooks for h in row)


def count_shifted_syt(shape: Shape) -> int:
    """Schur's product formula for standard tableaux of a shifted shape."""
    shape = _check_shape(shape, True)
    value = Fraction(factorial(sum(shape)), prod(factorial(p) for p in shape))
    for i, a in enumerate(shape):
        for b in shape[i + 1:]:
            value *= Fraction(a - b, a + b)
    assert value.denominator == 1
    return int(value)


def count_shifted_staircase(n: int) -> int:
    """Standard tableaux of the shifted staircase (n-1, ..., 1): C(n,2)! * prod_{i<n-1} i!/(2i+1)!."""
    if n < 2:
        raise ValueError("staircase needs n >= 2")
    value = Fraction(factorial(comb(n, 2)))
    for i in range(n - 1):
        value *= Fraction(factorial(i), factorial(2 * i + 1))
    assert value.denominator == 1
    return int(value)


def staircase(n: int) -> Shape:
    return tuple(range(n - 1, 0, -1))


def hook_shape(n: int, k: int) -> Shape:
    """(k, 1^(n-k))."""
    return (k,) + (1,) * (n - k)


def hook_plus_box_shape(n: int, k: int) -> Shape:
    """(k, 2, 1^(n-k-2))."""
    return (k, 2) + (1,) * (n - k - 2)


def count_hook_plus_box(n: int, k: int) -> int:
    """f^(k,2,1^(n-k-2)) = (k-1)(n-k-1)/(n-1) * C(n,k)."""
    value = Fraction((k - 1) * (n - k - 1), n - 1) * comb(n, k)
    assert value.denominator == 1
    return int(value)


def generate_T_n(n: int) -> list[Tableau]:
    """Standard tableaux of shape (k, 2, 1^(n-k-2)) for 2 <= k <= n-2."""
    out = []
    for k in range(2, n - 1):
        out.extend(generate_syt(hook_plus_box_shape(n, k)))
    return sorted(out, key=lambda t: t.rows)


def generate_Hook_n(n: int) -> list[Tableau]:
    """Standard tableaux of hook shape (k, 1^(n-k)) for 1 <= k <= n."""
    out = []
    for k in range(1, n + 1):
        out.extend(generate_syt(hook_shape(n, k)))
    return sorted(out, key=lambda t: t.rows)


def partitions(n: int, max_part: int | None = None) -> list[Shape]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def strict_partitions_in_staircase(n: int) -> list[Shape]:
    """Shifted shapes contained in the staircase of order n (largest part <= n - 1)."""
    out = []

    def rec(prefix: tuple[int, ...], bound: int):
        out.append(prefix)
        for p in range(bound, 0, -1):
            rec(prefix + (p,), p - 1)

    rec((), n - 1)
    return out
