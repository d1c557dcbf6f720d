from math import comb

import pytest
from hypothesis import given, settings

from arcperm.arc_graph import (
    adjacency_cases,
    b_orbits,
    build_arc_graph,
    check_iso_with_dominance,
    coxeter_relations_hold,
    diameter,
    dominance_box,
    dominance_distance,
    dominance_hasse,
    dominance_join,
    dominance_leq,
    dominance_meet,
    dominance_rank,
    gamma_is_automorphism,
    geodesic_count,
    geodesic_vertices,
    graph_distance,
    iso_report,
    rho_action,
    rho_symmetry_holds,
    schreier_graph_check,
    shifted_dominance_bound,
)
from arcperm.families import generate_family, psi_encode
from arcperm.perm import identity, inversions, longest, swap_positions
from arcperm.tableaux import count_shifted_staircase
from arcperm.weak_order import bfs_distances, meet_join_tables, undirected_adjacency
from strategies import arc_perms

X4_EDGES = {
    # the 20 edges of X_4, read off by hand from the adjacent-swap rule on the 16 arc permutations
    ("1234", "1243"), ("1234", "2134"), ("1243", "1423"), ("1243", "2143"), ("1432", "4132"),
    ("1432", "1423"), ("1432", "4312"), ("1423", "4123"), ("2134", "2143"), ("2143", "2413"),
    ("2341", "2314"), ("2341", "3241"), ("2314", "3214"), ("3214", "3241"), ("3412", "3421"),
    ("3412", "4312"), ("3421", "4321"), ("4123", "4132"), ("4312", "4321"), ("3241", "3421"),
}


def test_small_graphs():
    g = build_arc_graph(2)
    assert len(g.vertices) == 2 and len(g.edges()) == 1
    g = build_arc_graph(4)
    assert len(g.vertices) == 16
    assert diameter(g) == 6


def test_x4_edges_by_brute_force():
    g = build_arc_graph(4)
    arcs = set(generate_family(4, "A"))
    brute = {
        frozenset((u, swap_positions(u, i)))
        for u in arcs
        for i in range(1, 4)
        if swap_positions(u, i) in arcs
    }
    assert g.edge_set() == brute
    assert len(brute) == 20


@pytest.mark.parametrize("n", range(2, 9))
def test_every_vertex_has_a_last_swap(n):
    g = build_arc_graph(n)
    for nbrs in g.adj:
        assert n - 1 in {label for _, label in nbrs}


@pytest.mark.parametrize("n", range(2, 9))
def test_diameter_and_antipodes(n):
    g = build_arc_graph(n)
    assert diameter(g) == comb(n, 2)
    assert graph_distance(g, identity(n), longest(n)) == comb(n, 2)


def test_distance_to_self():
    g = build_arc_graph(5)
    assert all(graph_distance(g, v, v) == 0 for v in g.vertices)
    assert diameter(build_arc_graph(5)) == 10


@pytest.mark.parametrize("n", range(2, 8))
def test_geodesics_between_e_and_w0(n):
    g = build_arc_graph(n)
    verts = geodesic_vertices(g, identity(n), longest(n))
    assert verts == set(generate_family(n, "U"))
    assert len(verts) == 2**n - 2
    if n >= 3:
        assert geodesic_count(g, identity(n), longest(n)) == 2 * count_shifted_staircase(n)


def test_geodesic_count_values():
    assert [geodesic_count(build_arc_graph(n), identity(n), longest(n)) for n in (4, 5, 6)] == [4, 24, 572]


@pytest.mark.parametrize("n", range(2, 8))
def test_inversions_change_by_one_along_edges(n):
    for u, v, _ in build_arc_graph(n).edges():
        assert abs(inversions(u) - inversions(v)) == 1


@pytest.mark.parametrize("n", range(2, 8))
def test_gamma_acts_by_automorphisms(n):
    g = build_arc_graph(n)
    assert all(gamma_is_automorphism(g, k) for k in range(n))


def test_dominance_distance_examples():
    assert dominance_distance((2, 1, 0), (2, 1, 0)) == 0
    assert dominance_distance((3, 0, 1), (0, 1, 1)) == 3 + 2 + 2
    with pytest.raises(ValueError):
        dominance_distance((1, 0), (1, 0, 0))


@pytest.mark.parametrize("n", range(3, 7))
def test_dominance_distance_is_hasse_distance(n):
    H = dominance_hasse(n)
    adj = undirected_adjacency(H)
    for i, a in enumerate(H.elements):
        dist = bfs_distances(adj, i)
        for j, b in enumerate(H.elements):
            assert dist[j] == dominance_distance(a, b)
            assert dist[j] >= abs(dominance_rank(a) - dominance_rank(b))


@pytest.mark.parametrize("n", range(3, 6))
def test_dominance_meet_join_formulas(n):
    H = dominance_hasse(n)
    meet, join = meet_join_tables(H)
    box = H.elements
    for i, a in enumerate(box):
        for j, b in enumerate(box):
            assert box[meet[i][j]] == dominance_meet(a, b)
            assert box[join[i][j]] == dominance_join(a, b)


def test_dominance_box_and_rank():
    assert len(dominance_box(4)) == 16
    assert dominance_leq((0, 1, 1), (1, 0, 0)) is False
    assert dominance_leq((0, 1, 1), (1, 1, 0))
    assert H_rank_matches(4)


def H_rank_matches(n):
    H = dominance_hasse(n)
    return all(H.rank[i] == dominance_rank(v) for i, v in enumerate(H.elements))


@pytest.mark.parametrize("n", range(3, 9))
def test_iso_with_dominance(n):
    assert check_iso_with_dominance(n)
    assert iso_report(n).wrap_edges == 2 ** (n - 3)


def test_wrap_edge_counts_small():
    assert iso_report(3).wrap_edges == 1
    assert iso_report(4).wrap_edges == 2
    assert iso_report(5).wrap_edges == 4


def test_adjacency_cases_example():
    a = psi_encode((1, 2, 3, 4)).vector
    b = psi_encode((1, 2, 4, 3)).vector
    assert sum(adjacency_cases(a, b, 4)) == 1


@settings(max_examples=60)
@given(arc_perms(min_n=3, max_n=8), arc_perms(min_n=3, max_n=8))
def test_shifted_dominance_bound(p, t):
    if len(p) != len(t):
        return
    n = len(p)
    g = build_arc_graph(n)
    assert graph_distance(g, p, t) <= shifted_dominance_bound(p, t) <= comb(n, 2)


def test_shifted_dominance_bound_all_pairs_n5():
    g = build_arc_graph(5)
    index = g.index
    for u in g.vertices:
        dist = bfs_distances(g.neighbours, index[u])
        for v in g.vertices:
            assert dist[index[v]] <= shifted_dominance_bound(u, v) <= 10


def test_rho_examples():
    for p in generate_family(6, "A"):
        assert rho_action(4, p) == swap_positions(p, 5)
    assert rho_action(0, (1, 2, 3, 4)) == (2, 1, 3, 4)
    with pytest.raises(ValueError):
        rho_action(0, (1, 3, 2, 4))
    with pytest.raises(ValueError):
        rho_action(3, (1, 2, 3, 4))


@pytest.mark.parametrize("n", range(3, 8))
def test_coxeter_relations(n):
    rel = coxeter_relations_hold(n)
    assert all(rel.values())
    if n >= 4:
        assert "rho0rho1^4" in rel and f"rho{n - 3}rho{n - 2}^4" in rel


def test_n3_braid_relation_is_absent():
    # with only two generators there is no order-4 relation to check, and indeed none holds
    p = (1, 2, 3)
    q = p
    for _ in range(4):
        q = rho_action(1, rho_action(0, q))
    assert q != p


@pytest.mark.parametrize("n", range(2, 9))
def test_schreier_and_orbits(n):
    assert schreier_graph_check(n)
    orbits = b_orbits(n)
    assert len(orbits) == n
    assert all(len(o) == 2 ** (n - 2) and len({p[0] for p in o}) == 1 for o in orbits)
    assert rho_symmetry_holds(n)
