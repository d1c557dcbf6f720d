"""
mu-unimodality, signed enumeration of arc permutations whose inverse is
mu-left-unimodal, and symmetric group characters.

A permutation lies in the inverse class L_mu^-1 when its values on each block
of consecutive positions cut out by mu first decrease and then increase. The
signed sum of (-1)^|Des(p) minus S(mu)| over such arc permutations equals the
character of the exterior algebra of the reflection representation of S_{n-1},
induced up to S_n.

>>> in_L_mu_inverse((5, 3, 6, 8, 7, 1, 4, 2), Partition.of((4, 3, 1)))
True
>>> count_arc_mu(4, (3, 1)), signed_sum_arc_mu(4, (3, 1)), regev_character(4, (3, 1))
(11, 1, 1)
>>> mn_character((2, 1), (3,))
-1
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .families import generate_family
from .perm import all_perms, descent_set, inverse, rsk
from .tableaux import (
    Shape,
    Tableau,
    count_syt_hook_formula,
    generate_syt,
    hook_plus_box_shape,
    hook_shape,
    partitions,
)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int] | Partition) -> Partition:
        return parts if isinstance(parts, Partition) else cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(tuple(int(t) for t in text.replace(",", " ").split()))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        """Number of parts larger than 1."""
        return sum(1 for p in self.parts if p > 1)

    @property
    def s(self) -> int:
        """Number of parts equal to 1."""
        return sum(1 for p in self.parts if p == 1)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        out, total = [], 0
        for p in self.parts:
            total += p
            out.append(total)
        return tuple(out)

    @property
    def marker_set(self) -> frozenset[int]:
        """S(mu), the set of block ends."""
        return frozenset(self.prefix_sums)

    def blocks(self) -> list[range]:
        """The 1-based positions of each block."""
        starts = (0,) + self.prefix_sums[:-1]
        return [range(a + 1, b + 1) for a, b in zip(starts, self.prefix_sums)]

    def z(self) -> int:
        """Size of the centralizer of an element of cycle type mu."""
        return prod(i**m * factorial(m) for i, m in Counter(self.parts).items())

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def _descents_prefix_in_blocks(des: Iterable[int], mu: Partition) -> bool:
    # inside each block, the descents among interior positions a..b-1 must be an initial segment
    des = set(des)
    for block in mu.blocks():
        seen_ascent = False
        for pos in range(block.start, block.stop - 1):
            if pos in des:
                if seen_ascent:
                    return False
            else:
                seen_ascent = True
    return True


def is_v_shaped(values: Sequence[int]) -> bool:
    """First decreasing, then increasing (either part may be empty)."""
    k = 0
    while k + 1 < len(values) and values[k] > values[k + 1]:
        k += 1
    return all(values[i] < values[i + 1] for i in range(k, len(values) - 1))


def in_L_mu_inverse(p: Sequence[int], mu: Partition | Iterable[int]) -> bool:
    """Whether the inverse of p is mu-left-unimodal, i.e. every block of p is V-shaped."""
    mu = Partition.of(mu)
    if len(p) != mu.n:
        raise ValueError(f"degree {len(p)} does not match |mu| = {mu.n}")
    return all(is_v_shaped([p[i - 1] for i in block]) for block in mu.blocks())


def is_mu_left_unimodal(p: Sequence[int], mu: Partition | Iterable[int]) -> bool:
    """Positions of the values in each block of mu decrease and then increase."""
    return in_L_mu_inverse(inverse(p), mu)


def is_mu_unimodal_tableau(t: Tableau, mu: Partition | Iterable[int]) -> bool:
    """Within every block of mu, the descents of t among interior positions form a prefix."""
    mu = Partition.of(mu)
    if t.size != mu.n:
        raise ValueError("size mismatch")
    return _descents_prefix_in_blocks(t.descent_set(), mu)


def mu_sign(des: Iterable[int], mu: Partition) -> int:
    return -1 if len(set(des) - mu.marker_set) % 2 else 1


def arc_mu_class(n: int, mu: Partition | Iterable[int]) -> list:
    mu = Partition.of(mu)
    if mu.n != n:
        raise ValueError(f"mu = {mu} is not a partition of {n}")
    return [p for p in generate_family(n, "A") if in_L_mu_inverse(p, mu)]


def count_arc_mu_formula(n: int, mu: Partition | Iterable[int]) -> int:
    """mu_1...mu_r 2^(r+s) (r + s/4 - sum 1/mu_i), over the parts larger than 1."""
    mu = Partition.of(mu)
    if mu.n != n:
        raise ValueError(f"mu = {mu} is not a partition of {n}")
    if n < 2:
        raise ValueError("the closed form needs n >= 2")
    big = [p for p in mu.parts if p > 1]
    r, s = mu.r, mu.s
    value = prod(big) * 2 ** (r + s) * (r + Fraction(s, 4) - sum(Fraction(1, m) for m in big))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} for mu = {mu}")
    return int(value)


def count_arc_mu(n: int, mu: Partition | Iterable[int]) -> int:
    """|A_n meet L_mu^-1| by the closed form; see ``arc_mu_class`` for the brute-force set."""
    return count_arc_mu_formula(n, mu)


def signed_sum(perms: Iterable[Sequence[int]], mu: Partition) -> int:
    return sum(mu_sign(descent_set(p), mu) for p in perms)


def signed_sum_arc_mu(n: int, mu: Partition | Iterable[int]) -> int:
    mu = Partition.of(mu)
    return signed_sum(arc_mu_class(n, mu), mu)


def regev_character(n: int, mu: Partition | Iterable[int]) -> int:
    """(1/4) s prod_j (1 + (-1)^(mu_j - 1))."""
    mu = Partition.of(mu)
    if mu.n != n:
        raise ValueError(f"mu = {mu} is not a partition of {n}")
    value = Fraction(mu.s, 4) * prod(1 + (-1) ** (m - 1) for m in mu.parts)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value}")
    return int(value)


def irreducible_character(shape: Shape, mu: Partition | Iterable[int]) -> int:
    """Signed sum over mu-unimodal standard tableaux of the given shape."""
    mu = Partition.of(mu)
    if sum(shape) != mu.n:
        raise ValueError("size mismatch")
    return sum(mu_sign(t.descent_set(), mu) for t in generate_syt(tuple(shape)) if is_mu_unimodal_tableau(t, mu))


def _beta_set(shape: Shape) -> tuple[int, ...]:
    m = len(shape)
    return tuple(part + m - 1 - i for i, part in enumerate(shape))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        total += (-1) ** height * _mn(beta - {b} | {c}, rest)
    return total


def mn_character(shape: Shape, mu: Partition | Iterable[int]) -> int:
    """Murnaghan-Nakayama rule, removing border strips on beta-sets."""
    mu = Partition.of(mu)
    if sum(shape) != mu.n:
        raise ValueError("size mismatch")
    return _mn(frozenset(_beta_set(tuple(shape))), mu.parts)


def decomposition_shapes(n: int) -> list[Shape]:
    """Irreducible constituents of the induced exterior algebra, with multiplicity."""
    shapes = [hook_shape(n, k) for k in range(1, n + 1)]
    shapes += [hook_shape(n, k) for k in range(2, n)]
    shapes += [hook_plus_box_shape(n, k) for k in range(2, n - 1)]
    return shapes


def decomposition_character(n: int, mu: Partition | Iterable[int]) -> int:
    return sum(mn_character(shape, mu) for shape in decomposition_shapes(n))


def dimension_identity(n: int) -> bool:
    return sum(count_syt_hook_formula(s) for s in decomposition_shapes(n)) == n * 2 ** (n - 2)


def column_orthogonality(n: int) -> bool:
    """sum over lambda of chi^lambda(mu)^2 = z_mu."""
    shapes = partitions(n)
    return all(sum(mn_character(lam, mu) ** 2 for lam in shapes) == Partition(mu).z() for mu in shapes)


def regev_report(n: int) -> list[dict]:
    rows = []
    for parts in partitions(n):
        mu = Partition(parts)
        closed = regev_character(n, mu)
        signed = signed_sum_arc_mu(n, mu)
        decomposed = decomposition_character(n, mu)
        rows.append(
            {
                "mu": list(mu.parts),
                "closed_form": closed,
                "signed_sum": signed,
                "decomposition": decomposed,
                "ok": closed == signed == decomposed,
            }
        )
    return rows


def verify_regev(n: int) -> bool:
    return all(row["ok"] for row in regev_report(n))


def regev_report_json(n: int) -> str:
    return json.dumps({"n": n, "rows": regev_report(n)}, indent=2)


def three_way_split(n: int, mu: Partition | Iterable[int]) -> dict[str, tuple[int, int]]:
    """(permutation side, tableau side) for the L, U minus L and Z pieces of the signed sum."""
    mu = Partition.of(mu)
    arcs = arc_mu_class(n, mu)
    left = set(generate_family(n, "L"))
    uni = set(generate_family(n, "U"))

    def tab(shapes: list[Shape]) -> int:
        return sum(
            mu_sign(t.descent_set(), mu)
            for s in shapes
            for t in generate_syt(s)
            if is_mu_unimodal_tableau(t, mu)
        )

    return {
        "L": (signed_sum([p for p in arcs if p in left], mu), tab([hook_shape(n, k) for k in range(1, n + 1)])),
        "U-L": (signed_sum([p for p in arcs if p in uni and p not in left], mu), tab([hook_shape(n, k) for k in range(2, n)])),
        "Z": (signed_sum([p for p in arcs if p not in uni], mu), tab([hook_plus_box_shape(n, k) for k in range(2, n - 1)])),
    }


def rsk_mu_unimodal_agrees(n: int) -> bool:
    """p is in L_mu^-1 exactly when its recording tableau is mu-unimodal, for all p and mu."""
    perms = all_perms(n)
    qs = [rsk(p)[1] for p in perms]
    for parts in partitions(n):
        mu = Partition(parts)
        if any(in_L_mu_inverse(p, mu) != is_mu_unimodal_tableau(q, mu) for p, q in zip(perms, qs)):
            return False
    return True
