"""
The graph X_n on arc permutations and the affine Weyl group action behind it.

Two arc permutations are adjacent when they differ by swapping two adjacent
letters. Through ``psi`` the graph becomes the Hasse diagram of the dominance
order on {0..n-1} x {0,1}^(n-2) plus 2^(n-3) wrap-around edges.

>>> g = build_arc_graph(4)
>>> len(g.vertices), diameter(g)
(16, 6)
>>> geodesic_count(g, (1, 2, 3, 4), (4, 3, 2, 1))
4
>>> dominance_distance((3, 0, 1), (0, 1, 1))
7
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, product
from math import comb
from typing import Iterable, Sequence

from .families import PsiCode, generate_family, is_arc, psi_encode
from .perm import Perm, identity, left_cycle_shift, longest, reverse, swap_positions
from .weak_order import FinitePoset, bfs_distances, count_geodesics

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ArcGraph:
    """Vertices are A_n in lexicographic order; ``adj[i]`` holds (neighbour index, generator i)."""

    n: int
    vertices: tuple[Perm, ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> list[list[int]]:
        return [[j for j, _ in nbrs] for nbrs in self.adj]

    def edges(self) -> list[tuple[Perm, Perm, int]]:
        """Each undirected edge once, as (u, v, generator) with u < v."""
        out = []
        for i, nbrs in enumerate(self.adj):
            for j, label in nbrs:
                if i < j:
                    out.append((self.vertices[i], self.vertices[j], label))
        return out

    def edge_set(self) -> set[frozenset[Perm]]:
        return {frozenset((u, v)) for u, v, _ in self.edges()}


def build_arc_graph(n: int) -> ArcGraph:
    if n < 2:
        raise ValueError("X_n needs n >= 2")
    verts = tuple(generate_family(n, "A"))
    index = {p: i for i, p in enumerate(verts)}
    adj = []
    for p in verts:
        nbrs = []
        for i in range(1, n):
            q = swap_positions(p, i)
            if q in index:
                nbrs.append((index[q], i))
        adj.append(tuple(nbrs))
    return ArcGraph(n, verts, tuple(adj))


def graph_distance(g: ArcGraph, u: Sequence[int], v: Sequence[int]) -> int:
    return bfs_distances(g.neighbours, g.index[tuple(u)])[g.index[tuple(v)]]


def diameter(g: ArcGraph) -> int:
    return max(max(bfs_distances(g.neighbours, i)) for i in range(len(g.vertices)))


def geodesic_vertices(g: ArcGraph, u: Sequence[int], v: Sequence[int]) -> set[Perm]:
    du = bfs_distances(g.neighbours, g.index[tuple(u)])
    dv = bfs_distances(g.neighbours, g.index[tuple(v)])
    total = du[g.index[tuple(v)]]
    return {w for i, w in enumerate(g.vertices) if du[i] + dv[i] == total}


def geodesic_count(g: ArcGraph, u: Sequence[int], v: Sequence[int]) -> int:
    return count_geodesics(g.neighbours, g.index[tuple(u)], g.index[tuple(v)])


def gamma_is_automorphism(g: ArcGraph, k: int = 1) -> bool:
    """Left multiplication by gamma^k maps A_n onto itself and edges onto edges."""
    shifted = {frozenset(left_cycle_shift(x, k) for x in e) for e in g.edge_set()}
    return set(left_cycle_shift(p, k) for p in g.vertices) == set(g.vertices) and shifted == g.edge_set()


# dominance order on the box {0..n-1} x {0,1}^(n-2)

def dominance_box(n: int) -> list[Vector]:
    return [(a,) + bits for a in range(n) for bits in product((0, 1), repeat=n - 2)]


def prefix_sums(v: Sequence[int]) -> list[int]:
    return list(accumulate(v))


def dominance_leq(v: Sequence[int], u: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(prefix_sums(v), prefix_sums(u)))


def dominance_rank(v: Sequence[int]) -> int:
    return sum(prefix_sums(v))


def dominance_meet(v: Sequence[int], u: Sequence[int]) -> Vector:
    lows = [min(a, b) for a, b in zip(prefix_sums(v), prefix_sums(u))]
    return tuple(b - a for a, b in zip([0] + lows, lows))


def dominance_join(v: Sequence[int], u: Sequence[int]) -> Vector:
    highs = [max(a, b) for a, b in zip(prefix_sums(v), prefix_sums(u))]
    return tuple(b - a for a, b in zip([0] + highs, highs))


def dominance_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """sum_j |sum_{i<=j} (a_i - b_i)|."""
    if len(a) != len(b):
        raise ValueError("vectors of different length")
    return sum(abs(x - y) for x, y in zip(prefix_sums(a), prefix_sums(b)))


def dominance_hasse(n: int) -> FinitePoset:
    """Hasse diagram of the dominance order on the box, covers found as minimal strict relations."""
    box = dominance_box(n)
    sums = [prefix_sums(v) for v in box]
    m = len(box)
    strict_up = [0] * m
    strict_down = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and all(a <= b for a, b in zip(sums[i], sums[j])):
                strict_up[i] |= 1 << j
                strict_down[j] |= 1 << i
    covers = tuple(
        (box[i], box[j])
        for i in range(m)
        for j in range(m)
        if strict_up[i] >> j & 1 and not strict_up[i] & strict_down[j]
    )
    return FinitePoset(tuple(box), covers)


def encoded_edges(g: ArcGraph) -> set[frozenset[Vector]]:
    return {frozenset((psi_encode(u).vector, psi_encode(v).vector)) for u, v, _ in g.edges()}


def is_wrap_edge(a: Vector, b: Vector, n: int) -> bool:
    """Adjacency type (iii) with first coordinates {0, n-1}."""
    return (
        {a[0], b[0]} == {0, n - 1}
        and (a[0] + a[1]) % n == (b[0] + b[1]) % n
        and a[2:] == b[2:]
    )


@dataclass(frozen=True)
class IsoReport:
    n: int
    isomorphic: bool
    hasse_edges: int
    wrap_edges: int
    expected_wrap_edges: int
    lemma_holds: bool


def adjacency_cases(a: Vector, b: Vector, n: int) -> tuple[bool, bool, bool]:
    """The three encoded adjacency conditions (adjacent-entry switch, last entry, first pair)."""
    m = len(a)
    switch = any(
        a[i] != a[i + 1] and b[:i] == a[:i] and b[i] == a[i + 1] and b[i + 1] == a[i] and b[i + 2:] == a[i + 2:]
        for i in range(1, m - 1)
    )
    last = a[:-1] == b[:-1] and a != b
    first_pair = (a[0] + a[1]) % n == (b[0] + b[1]) % n and a[2:] == b[2:] and a != b
    return switch, last, first_pair


def lemma_adjacency_holds(g: ArcGraph) -> bool:
    """u ~ v in X_n iff exactly one encoded adjacency condition holds, over all pairs."""
    n = g.n
    codes = [psi_encode(p).vector for p in g.vertices]
    edges = g.edge_set()
    for i, a in enumerate(codes):
        for j in range(i + 1, len(codes)):
            b = codes[j]
            exactly_one = sum(adjacency_cases(a, b, n)) == 1
            if exactly_one != (frozenset((g.vertices[i], g.vertices[j])) in edges):
                return False
    return True


def iso_report(n: int) -> IsoReport:
    g = build_arc_graph(n)
    enc = encoded_edges(g)
    hasse = {frozenset(c) for c in dominance_hasse(n).covers}
    wraps = {e for e in enc if is_wrap_edge(*sorted(e), n)}
    iso = enc == hasse | wraps and not hasse & wraps
    return IsoReport(n, iso, len(hasse), len(wraps), 2 ** (n - 3), lemma_adjacency_holds(g))


def check_iso_with_dominance(n: int) -> bool:
    if n < 3:
        raise ValueError("needs n >= 3")
    r = iso_report(n)
    return r.isomorphic and r.wrap_edges == r.expected_wrap_edges and r.lemma_holds


def shifted_dominance_bound(p: Sequence[int], t: Sequence[int]) -> int:
    """min over k of the dominance distance between psi(gamma^k p) and psi(gamma^k t).

    An upper bound for the distance in X_n since gamma acts by automorphisms.
    """
    n = len(p)
    return min(
        dominance_distance(psi_encode(left_cycle_shift(p, k)).vector, psi_encode(left_cycle_shift(t, k)).vector)
        for k in range(n)
    )


# the affine action

def rho_action(i: int, p: Sequence[int]) -> Perm:
    """rho_i(p) = p sigma_{i+1} if that is an arc permutation, else p."""
    p = tuple(p)
    n = len(p)
    if not 0 <= i <= n - 2:
        raise ValueError(f"rho_{i} undefined for n = {n}")
    if not is_arc(p):
        raise ValueError(f"{p} is not an arc permutation")
    q = swap_positions(p, i + 1)
    return q if is_arc(q) else p


def coxeter_relations(n: int) -> list[tuple[tuple[int, ...], int]]:
    """Relations (word, exponent) of the affine group acting on A_n.

    For n = 3 the group is infinite dihedral and only the involutions apply.
    """
    k = n - 2
    rels: list[tuple[tuple[int, ...], int]] = [((i,), 2) for i in range(k + 1)]
    if n < 4:
        return rels
    for i in range(k + 1):
        for j in range(i + 2, k + 1):
            rels.append(((i, j), 2))
    for i in range(k):
        if i in (0, n - 3):
            rels.append(((i, i + 1), 4))
        else:
            rels.append(((i, i + 1), 3))
    return rels


def _apply_word(word: Iterable[int], p: Perm, table: dict[tuple[int, Perm], Perm]) -> Perm:
    for i in word:
        p = table[(i, p)]
    return p


def coxeter_relations_hold(n: int) -> dict[str, bool]:
    """Check every relation pointwise on A_n; keys read like 'rho0rho1^4'."""
    arcs = generate_family(n, "A")
    table = {(i, p): rho_action(i, p) for i in range(n - 1) for p in arcs}
    out = {}
    for word, e in coxeter_relations(n):
        name = "".join(f"rho{i}" for i in word) + f"^{e}"
        out[name] = all(_apply_word(word * e, p, table) == p for p in arcs)
    return out


def rho_symmetry_holds(n: int) -> bool:
    """rho_i(p) = rho_{n-2-i}(p w0) w0."""
    return all(
        rho_action(i, p) == reverse(rho_action(n - 2 - i, reverse(p)))
        for p in generate_family(n, "A")
        for i in range(n - 1)
    )


def schreier_edges(n: int, generators: Iterable[int] | None = None) -> set[frozenset[Perm]]:
    gens = range(n - 1) if generators is None else generators
    out = set()
    for p in generate_family(n, "A"):
        for i in gens:
            q = rho_action(i, p)
            if q != p:
                out.add(frozenset((p, q)))
    return out


def schreier_graph_check(n: int) -> bool:
    return schreier_edges(n) == build_arc_graph(n).edge_set()


def orbits(n: int, generators: Iterable[int]) -> list[list[Perm]]:
    gens = list(generators)
    seen: set[Perm] = set()
    out = []
    for p in generate_family(n, "A"):
        if p in seen:
            continue
        orbit = {p}
        stack = [p]
        while stack:
            x = stack.pop()
            for i in gens:
                y = rho_action(i, x)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        out.append(sorted(orbit))
    return sorted(out)


def b_orbits(n: int) -> list[list[Perm]]:
    """Orbits of the parabolic subgroup generated by rho_1, ..., rho_{n-2}."""
    return orbits(n, range(1, n - 1))


def b_orbits_are_fibres(n: int) -> bool:
    fibres = [sorted(p for p in generate_family(n, "A") if p[0] == k) for k in range(1, n + 1)]
    return b_orbits(n) == sorted(fibres)


def action_is_transitive(n: int) -> bool:
    return len(orbits(n, range(n - 1))) == 1


@dataclass(frozen=True)
class GraphSummary:
    n: int
    diameter: int
    e_w0_distance: int
    geodesic_vertices_are_unimodal: bool
    geodesic_vertex_count: int
    geodesic_count: int


def summarize(n: int) -> GraphSummary:
    g = build_arc_graph(n)
    e, w0 = identity(n), longest(n)
    verts = geodesic_vertices(g, e, w0)
    return GraphSummary(
        n,
        diameter(g),
        graph_distance(g, e, w0),
        verts == set(generate_family(n, "U")),
        len(verts),
        geodesic_count(g, e, w0),
    )


def expected_diameter(n: int) -> int:
    return comb(n, 2)


def psi_vector(p: Sequence[int]) -> Vector:
    return psi_encode(p).vector


def code_of(vec: Sequence[int]) -> PsiCode:
    return PsiCode.from_vector(vec)
