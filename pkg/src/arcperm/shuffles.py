"""
Shuffles of 1..k with k+1..n, their pattern characterization, rectangle
fillings and the weak order they induce.

>>> [format_perm(p) for p in generate_shuffles(2, 2)]
['1234', '1324', '1342', '3124', '3142', '3412']
>>> len(all_shuffles(5))
27
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .perm import (
    SHUFFLE_PATTERNS,
    Perm,
    all_perms,
    avoidance_class,
    descent_set,
    format_perm,  # noqa: F401
    identity,
    inverse,
    rsk,
    swap_values,
)
from .tableaux import Shape, Tableau, count_syt_hook_formula, generate_syt, partitions
from .weak_order import FinitePoset, count_maximal_chains, poset_from_relation, weak_leq


def generate_shuffles(k: int, m: int) -> list[Perm]:
    """Interleavings of 1..k and k+1..k+m, sorted."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    n = k + m
    out = []
    for slots in combinations(range(n), k):
        low, high = iter(range(1, k + 1)), iter(range(k + 1, n + 1))
        chosen = set(slots)
        out.append(tuple(next(low) if i in chosen else next(high) for i in range(n)))
    return sorted(out)


def all_shuffles(n: int) -> list[Perm]:
    """The union over k of the shuffles with k + m = n."""
    return sorted({p for k in range(n + 1) for p in generate_shuffles(k, n - k)})


def shuffle_pattern_check(n: int) -> bool:
    return all_shuffles(n) == avoidance_class(n, SHUFFLE_PATTERNS)


def inverse_descents_characterize(n: int) -> bool:
    """p is a shuffle iff Des(p^-1) is empty or a single position."""
    shuffles = set(all_shuffles(n))
    return all((len(descent_set(inverse(p))) <= 1) == (p in shuffles) for p in all_perms(n))


def union_of_knuth_classes(n: int) -> bool:
    shuffles = set(all_shuffles(n))
    classes: dict[Tableau, set[bool]] = defaultdict(set)
    for p in all_perms(n):
        classes[rsk(p)[0]].add(p in shuffles)
    return all(len(flags) == 1 for flags in classes.values())


def rectangle_permutation(t: Tableau, k: int, m: int) -> Perm:
    """Product of the transpositions of a partial filling of the k x m rectangle.

    Rows carry the labels k, ..., 1 from top to bottom and columns k+1, ..., k+m
    from left to right. Factors are applied in the order of the entries, each
    exchanging two values of the running product.
    """
    shape = t.shape
    if len(shape) > k or (shape and shape[0] > m):
        raise ValueError(f"shape {shape} does not fit in a {k} x {m} rectangle")
    cell = {}
    for r, row in enumerate(t.rows):
        for c, entry in enumerate(row):
            cell[entry] = (k - r, k + 1 + c)
    p = identity(k + m)
    for entry in range(1, t.size + 1):
        p = swap_values(p, *cell[entry])
    return p


def rectangle_shapes(k: int, m: int) -> list[Shape]:
    """Order ideals of the k x m rectangle, as partitions inside it."""
    return [shape for size in range(k * m + 1) for shape in partitions(size, m) if len(shape) <= k]


def rectangle_filling_check(k: int, m: int) -> bool:
    """Every partial filling gives a shuffle, one shape per shuffle, and all shuffles arise."""
    if k * m > 16:
        raise ValueError("k * m must be at most 16")
    by_shape: dict[Shape, set[Perm]] = {}
    for shape in rectangle_shapes(k, m):
        fillings = generate_syt(shape) if shape else [Tableau(())]
        by_shape[shape] = {rectangle_permutation(t, k, m) for t in fillings}
    if any(len(perms) != 1 for perms in by_shape.values()):
        return False
    produced = [next(iter(perms)) for perms in by_shape.values()]
    return len(set(produced)) == len(produced) and set(produced) == set(generate_shuffles(k, m))


def pi_k(n: int, k: int) -> Perm:
    """(k+1)(k+2)...n 1 2 ... k."""
    return tuple(range(k + 1, n + 1)) + tuple(range(1, k + 1))


def shuffle_poset(n: int) -> FinitePoset:
    return poset_from_relation(all_shuffles(n), weak_leq)


@dataclass
class ShuffleReport:
    n: int
    maxima: list[Perm]
    expected_maxima: list[Perm]
    interval_ok: dict[int, bool] = field(default_factory=dict)
    interval_sizes: dict[int, int] = field(default_factory=dict)
    chains: dict[int, int] = field(default_factory=dict)
    expected_chains: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.maxima == self.expected_maxima
            and all(self.interval_ok.values())
            and all(self.interval_sizes[k] == comb(self.n, k) for k in self.interval_sizes)
            and self.chains == self.expected_chains
        )


def shuffle_weak_order_check(n: int) -> ShuffleReport:
    """Maxima, intervals below each pi_k and their maximal chains in the induced weak order."""
    P = shuffle_poset(n)
    maxima = sorted(P.maximal())
    e = identity(n)
    report = ShuffleReport(n, maxima, sorted(pi_k(n, k) for k in range(1, n)))
    for k in range(1, n):
        top = pi_k(n, k)
        below = set(P.interval(e, top))
        report.interval_ok[k] = below == set(generate_shuffles(k, n - k))
        report.interval_sizes[k] = len(below)
        report.chains[k] = count_maximal_chains(P, e, top)
        report.expected_chains[k] = count_syt_hook_formula((n - k,) * k)
    return report
