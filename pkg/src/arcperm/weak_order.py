"""
Right weak order on S_n and its restriction to unimodal permutations.

>>> weak_leq((2, 1, 4, 3), (3, 4, 1, 2))
False
>>> P = build_weak_hasse(4, "U")
>>> len(P.elements), count_maximal_chains(P, (1, 2, 3, 4), (4, 3, 2, 1))
(14, 4)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Hashable, Iterable, Sequence

from .families import generate_family, is_left_unimodal, is_unimodal
from .perm import Perm, all_perms, compose, conjugate_w0, identity, inverse, inversions, longest, swap_positions
from .shifted import shape_of_unimodal


def weak_leq(p: Sequence[int], t: Sequence[int]) -> bool:
    """p <= t iff l(p) + l(p^-1 t) = l(t)."""
    if len(p) != len(t):
        raise ValueError("degree mismatch")
    return inversions(p) + inversions(compose(inverse(p), t)) == inversions(t)


def _shape_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def shape_domination_leq(p: Sequence[int], t: Sequence[int]) -> bool:
    """Weak-order comparison of unimodal permutations through their shifted shapes."""
    p, t = tuple(p), tuple(t)
    if not (is_unimodal(p) and is_unimodal(t)):
        raise ValueError("both permutations must be unimodal")
    if is_left_unimodal(p) and is_left_unimodal(t):
        return _shape_leq(shape_of_unimodal(p), shape_of_unimodal(t))
    cp, ct = conjugate_w0(p), conjugate_w0(t)
    if is_left_unimodal(cp) and is_left_unimodal(ct):
        return _shape_leq(shape_of_unimodal(cp), shape_of_unimodal(ct))
    return False


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset given by its elements and cover pairs (lower, upper)."""

    elements: tuple[Hashable, ...]
    covers: tuple[tuple[Hashable, Hashable], ...]
    labels: dict = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def up(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.elements]
        for a, b in self.covers:
            out[self.index[a]].append(self.index[b])
        return out

    @cached_property
    def down(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.elements]
        for a, b in self.covers:
            out[self.index[b]].append(self.index[a])
        return out

    @cached_property
    def topological_order(self) -> list[int]:
        indeg = [len(d) for d in self.down]
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != len(self.elements):
            raise ValueError("cover relation has a cycle")
        return order

    @cached_property
    def upsets(self) -> list[int]:
        """Bitmask of {y : x <= y} for each x."""
        masks = [1 << i for i in range(len(self.elements))]
        for i in reversed(self.topological_order):
            for j in self.up[i]:
                masks[i] |= masks[j]
        return masks

    @cached_property
    def downsets(self) -> list[int]:
        masks = [1 << i for i in range(len(self.elements))]
        for i in self.topological_order:
            for j in self.down[i]:
                masks[i] |= masks[j]
        return masks

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return bool(self.upsets[self.index[a]] >> self.index[b] & 1)

    def minimal(self) -> list[Hashable]:
        return [self.elements[i] for i, d in enumerate(self.down) if not d]

    def maximal(self) -> list[Hashable]:
        return [self.elements[i] for i, u in enumerate(self.up) if not u]

    @cached_property
    def rank(self) -> list[int]:
        """Length of the longest chain from a minimal element."""
        r = [0] * len(self.elements)
        for i in self.topological_order:
            for j in self.up[i]:
                r[j] = max(r[j], r[i] + 1)
        return r

    def interval(self, lo: Hashable, hi: Hashable) -> list[Hashable]:
        mask = self.upsets[self.index[lo]] & self.downsets[self.index[hi]]
        return [x for i, x in enumerate(self.elements) if mask >> i & 1]

    def hasse_edges(self) -> list[tuple[Hashable, Hashable]]:
        return list(self.covers)


def poset_from_relation(elements: Iterable[Hashable], leq) -> FinitePoset:
    """Build the Hasse diagram of an order given as a predicate (quadratic; small inputs only)."""
    elements = tuple(elements)
    m = len(elements)
    strict_up = [0] * m
    strict_down = [0] * m
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j and leq(a, b):
                strict_up[i] |= 1 << j
                strict_down[j] |= 1 << i
    covers = []
    for i in range(m):
        for j in range(m):
            if strict_up[i] >> j & 1 and not (strict_up[i] & strict_down[j]):
                covers.append((elements[i], elements[j]))
    return FinitePoset(elements, tuple(covers))


def build_weak_hasse(n: int, ground: str = "U") -> FinitePoset:
    """Hasse diagram of the weak order restricted to U_n or on all of S_n.

    Covers are right multiplications by an adjacent transposition that raise
    the length by one with both ends in the ground set.
    """
    ground = ground.upper()
    if ground == "U":
        elems = generate_family(n, "U")
    elif ground == "S":
        elems = all_perms(n)
    else:
        raise ValueError(f"unknown ground set {ground!r}")
    members = set(elems)
    covers = []
    labels = {}
    for p in elems:
        for i in range(1, n):
            if p[i - 1] < p[i]:
                q = swap_positions(p, i)
                if q in members:
                    covers.append((p, q))
                    labels[(p, q)] = i
    return FinitePoset(tuple(elems), tuple(covers), labels)


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    is_graded: bool
    is_modular: bool
    is_self_dual: bool


def _extremum(mask: int, sets: list[int]) -> int | None:
    # the unique element of ``mask`` whose up/down-set equals ``mask``
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        if sets[i] == mask:
            return i
        m ^= low
    return None


def meet_join_tables(P: FinitePoset) -> tuple[list[list[int | None]], list[list[int | None]]]:
    m = len(P.elements)
    meet = [[None] * m for _ in range(m)]
    join = [[None] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            meet[a][b] = meet[b][a] = _extremum(P.downsets[a] & P.downsets[b], P.downsets)
            join[a][b] = join[b][a] = _extremum(P.upsets[a] & P.upsets[b], P.upsets)
    return meet, join


def is_graded(P: FinitePoset) -> bool:
    r = P.rank
    if len(P.minimal()) != 1:
        return False
    return all(r[j] == r[i] + 1 for i in range(len(P.elements)) for j in P.up[i])


def find_anti_automorphism(P: FinitePoset) -> dict[int, int] | None:
    """An order-reversing bijection of P onto itself, by backtracking over ranks."""
    if not is_graded(P):
        return None
    m = len(P.elements)
    r = P.rank
    top = max(r) if r else 0
    order = sorted(range(m), key=lambda i: (r[i], i))
    by_rank: dict[int, list[int]] = {}
    for i in range(m):
        by_rank.setdefault(r[i], []).append(i)
    down_sets = [frozenset(d) for d in P.down]
    f: dict[int, int] = {}
    finv: dict[int, int] = {}
    used: set[int] = set()

    def ok(x: int, y: int) -> bool:
        if len(P.up[x]) != len(P.down[y]) or len(P.down[x]) != len(P.up[y]):
            return False
        # ranks are filled bottom-up, so every upper cover of y already has a preimage;
        # those preimages must be exactly the lower covers of x
        return frozenset(finv[u] for u in P.up[y]) == down_sets[x]

    def assign(k: int) -> bool:
        if k == m:
            return True
        x = order[k]
        for y in by_rank.get(top - r[x], []):
            if y in used or not ok(x, y):
                continue
            f[x], finv[y] = y, x
            used.add(y)
            if assign(k + 1):
                return True
            used.discard(y)
            del f[x], finv[y]
        return False

    return dict(f) if assign(0) else None


def check_lattice_properties(P: FinitePoset) -> LatticeReport:
    meet, join = meet_join_tables(P)
    m = len(P.elements)
    lattice = all(meet[a][b] is not None and join[a][b] is not None for a in range(m) for b in range(m))
    graded = is_graded(P)
    modular = False
    if lattice and graded:
        r = P.rank
        modular = all(
            r[a] + r[b] == r[meet[a][b]] + r[join[a][b]] for a in range(m) for b in range(a, m)
        )
    self_dual = find_anti_automorphism(P) is not None
    return LatticeReport(lattice, graded, modular, self_dual)


def count_maximal_chains(P: FinitePoset, lo: Hashable, hi: Hashable) -> int:
    """Number of maximal chains of the interval [lo, hi], by dynamic programming over covers."""
    if not P.leq(lo, hi):
        raise ValueError(f"{lo} is not below {hi}")
    inside = P.upsets[P.index[lo]] & P.downsets[P.index[hi]]
    chains = {P.index[lo]: 1}
    for i in P.topological_order:
        if not inside >> i & 1 or i not in chains:
            continue
        for j in P.up[i]:
            if inside >> j & 1:
                chains[j] = chains.get(j, 0) + chains[i]
    return chains[P.index[hi]]


def undirected_adjacency(P: FinitePoset) -> list[list[int]]:
    return [P.up[i] + P.down[i] for i in range(len(P.elements))]


def bfs_distances(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def count_geodesics(adj: Sequence[Sequence[int]], source: int, target: int) -> int:
    """Shortest paths from source to target, counted layer by layer."""
    dist = bfs_distances(adj, source)
    if dist[target] < 0:
        return 0
    ways = [0] * len(adj)
    ways[source] = 1
    for i in sorted(range(len(adj)), key=lambda v: dist[v]):
        if dist[i] < 0:
            continue
        for j in adj[i]:
            if dist[j] == dist[i] + 1:
                ways[j] += ways[i]
    return ways[target]


def gamma_summary(n: int) -> dict:
    """Diameter, antipodes and e-w0 geodesic count of the undirected Hasse diagram of Weak(U_n)."""
    P = build_weak_hasse(n, "U")
    adj = undirected_adjacency(P)
    e, w0 = P.index[identity(n)], P.index[longest(n)]
    diameter = max(max(bfs_distances(adj, i)) for i in range(len(adj)))
    return {
        "diameter": diameter,
        "expected_diameter": comb(n, 2),
        "e_w0_distance": bfs_distances(adj, e)[w0],
        "geodesics": count_geodesics(adj, e, w0),
    }
