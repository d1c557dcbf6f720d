"""
Partial fillings of the shifted staircase and the unimodal permutations they produce.

Rows of the staircase of order n are labelled 1..n-1 top to bottom and its
columns 2..n left to right, so row i holds the cells (i, j) for i < j <= n. An
entry in cell (i, j) stands for the transposition (i, j). Multiplying the
transpositions of a partial filling in the order of its entries, each factor
exchanging two *values* of the running product, gives a left-unimodal
permutation that depends only on which cells are filled.

>>> filling = Tableau(((1, 2, 3, 6, 8), (4, 5, 9, 10), (7,)), shifted=True)
>>> format_perm(replay_filling(filling, 7))
'4356217'
>>> shape_of_unimodal((4, 3, 5, 6, 2, 1, 7))
(5, 4, 1)
"""

from __future__ import annotations

from typing import Sequence

from .families import is_left_unimodal, is_unimodal
from .perm import Perm, conjugate_w0, format_perm, identity, swap_values  # noqa: F401
from .tableaux import Shape, Tableau, generate_syt

Cell = tuple[int, int]


def staircase_cells(shape: Shape) -> list[Cell]:
    """(row label, column label) of each cell of a shifted shape inside the staircase."""
    return [(i, i + c) for i, part in enumerate(shape, 1) for c in range(1, part + 1)]


def fits_staircase(shape: Shape, n: int) -> bool:
    return all(part <= n - i for i, part in enumerate(shape, 1))


def replay_filling(t: Tableau, n: int) -> Perm:
    """The product t_1 t_2 ... t_k of the transpositions attached to the entries of ``t``."""
    if not t.shifted:
        raise ValueError("staircase fillings are shifted tableaux")
    if not fits_staircase(t.shape, n):
        raise ValueError(f"shape {t.shape} does not fit in the staircase of order {n}")
    cell = {}
    for i, row in enumerate(t.rows, 1):
        for c, entry in enumerate(row, 1):
            cell[entry] = (i, i + c)
    p = identity(n)
    for entry in range(1, t.size + 1):
        a, b = cell[entry]
        p = swap_values(p, a, b)
    return p


def read_boundary(shape: Shape, n: int) -> Perm:
    """Read the lattice path separating filled from empty cells.

    Starting below the lowest diagonal cell that is filled, east steps read
    column labels and north steps read row labels, ending at the top right.
    """
    if not fits_staircase(shape, n):
        raise ValueError(f"shape {shape} does not fit in the staircase of order {n}")
    depth = len(shape)
    if depth == 0:
        return identity(n)
    word: list[int] = []
    col = depth  # right edge of the path so far, as a column label
    for i in range(depth, 0, -1):
        last = i + shape[i - 1]
        word.extend(range(col + 1, last + 1))
        col = max(col, last)
        word.append(i)
    word.extend(range(col + 1, n + 1))
    return tuple(word)


def _left_unimodal_shape(p: Sequence[int]) -> Shape:
    # letters below p(1) are row labels (north steps), the rest column labels (east steps);
    # row r is filled up to the largest column label read before r
    first = p[0]
    rows = {}
    top = first
    for v in p[1:]:
        if v > first:
            top = max(top, v)
        else:
            rows[v] = top - v
    return tuple(rows[r] for r in range(1, first))


def shape_of_unimodal(p: Sequence[int]) -> Shape:
    """The shifted shape attached to a unimodal permutation.

    For p outside L_n the shape is that of w0 p w0.
    """
    p = tuple(p)
    if not is_unimodal(p):
        raise ValueError(f"{p} is not unimodal")
    if is_left_unimodal(p):
        return _left_unimodal_shape(p)
    return _left_unimodal_shape(conjugate_w0(p))


def fillings_of(shape: Shape) -> list[Tableau]:
    """All complete fillings (linear extensions) of a shifted shape."""
    if not shape:
        return [Tableau((), shifted=True)]
    return generate_syt(shape, shifted=True)
