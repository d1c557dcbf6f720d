"""
Two bijections from non-unimodal arc permutations Z_n onto T_n, the standard
tableaux of shape (k, 2, 1^(n-k-2)) with 2 <= k <= n-2.

``phi`` preserves the descent set. ``psi_shape_map`` produces a tableau of the
same shape as ``phi`` but generally not the same descent set.

>>> str(phi((8, 9, 10, 7, 11, 1, 2, 6, 5, 3, 4)))
'1 2 3 5 8 11/4 7/6/9/10'
>>> str(psi_shape_map((3, 2, 4, 1, 5, 6, 11, 7, 10, 9, 8)))
'1 2 4 6 7 9/3 8/5/10/11'
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .families import is_arc, is_unimodal, psi_decode, psi_encode, PsiCode
from .perm import Perm, complement, inverse
from .tableaux import Tableau


def _check_z(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if len(p) < 4 or not is_arc(p) or is_unimodal(p):
        raise ValueError(f"{p} is not a non-unimodal arc permutation with n >= 4")
    return p


def hook_plus_box(first_row: Iterable[int], corner: int, n: int) -> Tableau:
    """The tableau with ``first_row`` on top, ``corner`` at (2,2) and everything else in column 1."""
    row = sorted(set(first_row))
    col = sorted(set(range(1, n + 1)) - set(row) - {corner})
    if not row or row[0] != 1 or col[0] == 1:
        raise ValueError("1 must lead the first row")
    return Tableau((tuple(row), (col[0], corner)) + tuple((c,) for c in col[1:]))


def in_T(t: Tableau) -> bool:
    shape = t.shape
    n = t.size
    return (
        not t.shifted
        and len(shape) >= 2
        and 2 <= shape[0] <= n - 2
        and shape[1] == 2
        and all(part == 1 for part in shape[2:])
    )


def _check_t(t: Tableau) -> None:
    if not in_T(t):
        raise ValueError(f"{t} is not of shape (k, 2, 1, ..., 1) with 2 <= k <= n-2")


def _phi_case_a(p: Perm) -> Tableau:
    # p^-1(1) > p^-1(n)
    n = len(p)
    j = p.index(1) + 1
    first = {i for i in range(1, n + 1) if p[i - 1] >= p[0]}
    first |= {i for i in range(j + 2, n + 1) if p[i - 2] < p[-1]}
    return hook_plus_box(first, j + 1, n)


def phi(p: Sequence[int]) -> Tableau:
    p = _check_z(p)
    if inverse(p)[0] > inverse(p)[-1]:
        return _phi_case_a(p)
    # the other case is the complement, with rows and columns exchanged
    return _phi_case_a(complement(p)).transpose()


def _phi_inverse_case_a(t: Tableau) -> Perm:
    n = t.size
    j = t.rows[1][1] - 1
    first = set(t.rows[0])
    ups = sum(1 for i in range(2, j) if i in first)
    start = n - ups
    p = [start]
    hi = lo = start
    for i in range(2, j):
        if i in first:
            hi += 1
            p.append(hi)
        else:
            lo -= 1
            p.append(lo)
    p.append(1)
    bottom, top = 1, lo
    for i in range(j + 1, n):
        if i + 1 in first:
            bottom += 1
            p.append(bottom)
        else:
            top -= 1
            p.append(top)
    p.append(next(v for v in range(1, n + 1) if v not in set(p)))
    return tuple(p)


def phi_inverse(t: Tableau) -> Perm:
    _check_t(t)
    j = t.rows[1][1] - 1
    if j in t.rows[0]:
        return complement(_phi_inverse_case_a(t.transpose()))
    return _phi_inverse_case_a(t)


def c_set(p: Sequence[int]) -> frozenset[int]:
    """Values i in 3..n with p(i-1) - 1 (mod n) among p(1), ..., p(i-2)."""
    p = tuple(p)
    n = len(p)
    if not is_arc(p):
        raise ValueError(f"{p} is not an arc permutation")
    return frozenset(i for i in range(3, n + 1) if (p[i - 2] - 2) % n + 1 in p[: i - 2])


def psi_shape_map(p: Sequence[int]) -> Tableau:
    p = _check_z(p)
    n = len(p)
    c = c_set(p)
    if inverse(p)[0] > inverse(p)[-1]:
        j = p.index(1) + 1
        column = set(range(1, n + 1)) - c
        return hook_plus_box(set(range(1, n + 1)) - column - {j + 1} | {1}, j + 1, n)
    j = p.index(n) + 1
    return hook_plus_box({1, 2} | c, j + 1, n)


def psi_shape_inverse(t: Tableau) -> Perm:
    """Recover p from C(p), which fixes every bit of its position code, and the corner entry."""
    _check_t(t)
    n = t.size
    j = t.rows[1][1] - 1
    case_a = 2 not in t.rows[0]
    if case_a:
        c = set(t.rows[0][1:]) | {j + 1}
        target = 1
    else:
        c = set(t.rows[0]) - {1, 2}
        target = n
    bits = tuple(1 if m + 2 in c else 0 for m in range(1, n - 1))
    hits = []
    for psi0 in range(n):
        q = psi_decode(PsiCode(n, psi0, bits))
        if q[j - 1] == target and not is_unimodal(q) and (inverse(q)[0] > inverse(q)[-1]) == case_a:
            hits.append(q)
    if len(hits) != 1:
        raise ValueError(f"{t} does not come from a non-unimodal arc permutation")
    return hits[0]


def phi_first_row_set(p: Sequence[int]) -> frozenset[int]:
    """The set I of the construction: the first row in one case, the first column in the other."""
    t = phi(p)
    p = tuple(p)
    return frozenset(t.rows[0]) if inverse(p)[0] > inverse(p)[-1] else frozenset(t.first_column())


def psi_code_bits(p: Sequence[int]) -> tuple[int, ...]:
    return psi_encode(p).bits
