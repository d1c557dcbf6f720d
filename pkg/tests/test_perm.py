from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcperm.families import generate_family, is_arc
from arcperm.perm import (
    ARC_PATTERNS,
    UNIMODAL_PATTERNS,
    all_perms,
    as_perm,
    avoidance_class,
    avoids_all,
    cayley_length,
    compose,
    contains_pattern,
    contains_pattern_naive,
    descent_set,
    format_perm,
    identity,
    inverse,
    inversions,
    left_cycle_shift,
    longest,
    parse_perm,
    rsk,
    sigma,
    statistics,
)
from strategies import perms


def test_descent_set_examples():
    assert descent_set((3, 4, 2, 5, 6, 1)) == {2, 5}
    assert descent_set(identity(6)) == set()
    assert descent_set(longest(5)) == {1, 2, 3, 4}


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert all(inverse(inverse(p)) == p for p in all_perms(5))


def test_statistics():
    assert statistics((3, 2, 1)) == (3, 3, 3)
    assert statistics((1, 2, 3)) == (0, 0, 0)
    majs = Counter(statistics(p).maj for p in all_perms(3))
    assert [majs[k] for k in range(4)] == [1, 2, 2, 1]


def test_length_equals_inversions_via_cayley_bfs():
    for n in range(1, 6):
        for p in all_perms(n):
            assert cayley_length(p) == inversions(p)


def test_contains_pattern_examples():
    # 125436 is not an arc permutation; the arc pattern it contains is 1324 (1, 5, 4, 6)
    assert contains_pattern((1, 2, 5, 4, 3, 6), (1, 3, 2, 4))
    assert [q for q in ARC_PATTERNS if contains_pattern((1, 2, 5, 4, 3, 6), q)] == [(1, 3, 2, 4)]
    assert not contains_pattern((1, 2, 5, 4, 3, 6), (3, 1, 4, 2))
    assert not contains_pattern_naive((1, 2, 5, 4, 3, 6), (3, 1, 4, 2))
    assert contains_pattern((4, 2, 3), (1,))
    assert not contains_pattern((1, 2, 5, 4, 3), (2, 4, 1, 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_contains_pattern_matches_naive(n):
    pats = [p for k in range(1, 5) for p in all_perms(k)]
    sample = all_perms(n) if n <= 5 else all_perms(n)[:: 7 if n == 6 else 41]
    for p in sample:
        for pat in pats:
            assert contains_pattern(p, pat) == contains_pattern_naive(p, pat)


def test_avoids_all_counts_in_s4():
    assert sum(avoids_all(p, ARC_PATTERNS) for p in all_perms(4)) == 16
    assert sum(avoids_all(p, UNIMODAL_PATTERNS) for p in all_perms(4)) == 14
    assert avoids_all((2, 1), [])


def test_avoidance_class_growth_matches_filter():
    for n in range(1, 7):
        assert avoidance_class(n, ARC_PATTERNS) == [p for p in all_perms(n) if avoids_all(p, ARC_PATTERNS)]


def test_rsk_identity_is_one_row():
    P, Q = rsk(identity(5))
    assert P.rows == ((1, 2, 3, 4, 5),) and Q.rows == ((1, 2, 3, 4, 5),)


@pytest.mark.parametrize("n", range(1, 8))
def test_rsk_descents(n):
    for p in all_perms(n):
        P, Q = rsk(p)
        assert P.shape == Q.shape
        assert Q.descent_set() == descent_set(p)
        assert P.descent_set() == descent_set(inverse(p))


def test_rsk_of_left_unimodal_is_hook():
    for p in generate_family(6, "L"):
        P, _ = rsk(p)
        i = len(P.rows) - 1
        assert P.first_column() == tuple(range(1, i + 2))
        assert P.descent_set() == set(range(1, i + 1))


@given(perms())
def test_compose_identity_and_inverse(p):
    n = len(p)
    assert compose(p, identity(n)) == p
    assert compose(p, inverse(p)) == identity(n)
    assert left_cycle_shift(p, n) == p


def test_right_multiplication_swaps_positions():
    p = (3, 1, 4, 2)
    assert compose(p, sigma(4, 2)) == (3, 4, 1, 2)
    assert compose(sigma(4, 2), p) == (2, 1, 4, 3)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


def test_cycle_shift_preserves_arcs():
    for p in generate_family(5, "A"):
        for k in range(5):
            assert is_arc(left_cycle_shift(p, k))


def test_parse_and_format():
    assert parse_perm("4 3 5 2 1 7 6") == (4, 3, 5, 2, 1, 7, 6)
    assert parse_perm("4352176") == (4, 3, 5, 2, 1, 7, 6)
    assert parse_perm("2,1,3") == (2, 1, 3)
    assert format_perm(range(10, 0, -1)) == "10,9,8,7,6,5,4,3,2,1"
    with pytest.raises(ValueError):
        as_perm((1, 1, 2))


@given(perms(max_n=12))
def test_format_parse_round_trip(p):
    assert parse_perm(format_perm(p)) == p


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_sigma_is_involution(arg):
    n, i = arg
    assert compose(sigma(n, i), sigma(n, i)) == identity(n)


def test_inversions_brute_force():
    p = (3, 1, 4, 2)
    assert inversions(p) == sum(1 for a, b in combinations(p, 2) if a > b) == 3
