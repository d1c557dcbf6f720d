import json
import pytest

from arcperm.characters import (
    Partition,
    arc_mu_class,
    column_orthogonality,
    count_arc_mu,
    decomposition_character,
    dimension_identity,
    in_L_mu_inverse,
    irreducible_character,
    is_mu_left_unimodal,
    is_mu_unimodal_tableau,
    is_v_shaped,
    mn_character,
    regev_character,
    regev_report_json,
    rsk_mu_unimodal_agrees,
    signed_sum_arc_mu,
    three_way_split,
    verify_regev,
)
from arcperm.perm import all_perms, format_perm, inversions
from arcperm.tableaux import Tableau, partitions


def test_partition_basics():
    mu = Partition((1, 3, 4))
    assert mu.parts == (4, 3, 1)
    assert (mu.n, mu.r, mu.s) == (8, 2, 1)
    assert mu.marker_set == {4, 7, 8}
    assert [list(b) for b in mu.blocks()] == [[1, 2, 3, 4], [5, 6, 7], [8]]
    assert Partition.parse("2,1,1") == Partition((2, 1, 1))
    assert Partition((2, 2)).z() == 8
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_v_shapes():
    assert is_v_shaped((5, 3, 6, 8))
    assert is_v_shaped(()) and is_v_shaped((4, 3, 2)) and is_v_shaped((1, 2))
    assert not is_v_shaped((3, 8, 6))


def test_inverse_class_examples():
    mu = (4, 3, 1)
    assert in_L_mu_inverse((5, 3, 6, 8, 7, 1, 4, 2), mu)
    assert in_L_mu_inverse((3, 5, 6, 8, 7, 4, 1, 2), mu)
    assert not in_L_mu_inverse((5, 3, 8, 6, 7, 1, 4, 2), mu)
    assert not in_L_mu_inverse((5, 3, 6, 8, 1, 7, 4, 2), mu)
    with pytest.raises(ValueError):
        in_L_mu_inverse((1, 2, 3), mu)


def test_all_ones_partition_accepts_everything():
    assert all(in_L_mu_inverse(p, (1,) * 5) for p in all_perms(5))


def test_one_block_is_left_unimodal_inverse():
    from arcperm.families import generate_family

    L = set(generate_family(5, "L"))
    assert {p for p in all_perms(5) if is_mu_left_unimodal(p, (5,))} == L


def test_worked_list_n4():
    got = [format_perm(p) for p in arc_mu_class(4, (3, 1))]
    assert got == ["1234", "1243", "2134", "2143", "2341", "3214", "3241", "4123", "4132", "4312", "4321"]
    assert count_arc_mu(4, (3, 1)) == 11
    assert signed_sum_arc_mu(4, (3, 1)) == 1
    assert regev_character(4, (3, 1)) == 1
    assert decomposition_character(4, (3, 1)) == 1


def test_five_three_one_one():
    assert signed_sum_arc_mu(10, (5, 3, 1, 1)) == 8
    assert regev_character(10, (5, 3, 1, 1)) == 8
    assert count_arc_mu(10, (5, 3, 1, 1)) == len(arc_mu_class(10, (5, 3, 1, 1))) == 472


@pytest.mark.parametrize("n", range(2, 9))
def test_count_formula_matches_brute_force(n):
    for mu in partitions(n):
        assert count_arc_mu(n, mu) == len(arc_mu_class(n, mu))
    assert count_arc_mu(n, (1,) * n) == n * 2 ** (n - 2)


def test_count_formula_needs_n_at_least_two():
    with pytest.raises(ValueError):
        count_arc_mu(1, (1,))
    with pytest.raises(ValueError):
        count_arc_mu(5, (3, 1))


def test_even_part_kills_the_sum():
    for n in range(4, 9):
        for mu in partitions(n):
            if any(m % 2 == 0 for m in mu):
                assert signed_sum_arc_mu(n, mu) == 0
            else:
                mu_ = Partition(mu)
                assert signed_sum_arc_mu(n, mu) == mu_.s * 2 ** (mu_.r + mu_.s - 2)


def test_mn_examples():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (2, 1)) == 0
    for n in range(1, 7):
        for mu in partitions(n):
            assert mn_character((n,), mu) == 1
            # sign of a permutation of cycle type mu
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_sign_character_against_inversions():
    # independent oracle: the sign of the canonical permutation of each cycle type
    for mu in partitions(6):
        p, start = [], 1
        for m in mu:
            p += list(range(start + 1, start + m)) + [start]
            start += m
        assert mn_character((1,) * 6, mu) == (-1) ** inversions(p)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    assert column_orthogonality(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_unimodal_tableau_sum_is_mn(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert irreducible_character(lam, mu) == mn_character(lam, mu)


def test_trivial_character_by_tableau_sum():
    assert all(irreducible_character((5,), mu) == 1 for mu in partitions(5))


def test_mu_unimodal_tableau_uses_the_first_block():
    # for mu = (3) the only block starts at 1, and chi^(2,1)((3)) = -1 needs it
    assert is_mu_unimodal_tableau(Tableau(((1, 3), (2,))), (3,))
    assert not is_mu_unimodal_tableau(Tableau(((1, 2), (3,))), (3,))
    assert irreducible_character((2, 1), (3,)) == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_agreement(n):
    assert rsk_mu_unimodal_agrees(n)


@pytest.mark.parametrize("n", range(4, 9))
def test_regev_three_routes(n):
    assert verify_regev(n)


def test_regev_json():
    report = json.loads(regev_report_json(4))
    assert report["n"] == 4
    assert len(report["rows"]) == 5
    assert all(row["ok"] for row in report["rows"])


@pytest.mark.parametrize("n", range(4, 8))
def test_three_way_split(n):
    for mu in partitions(n):
        for perm_side, tab_side in three_way_split(n, mu).values():
            assert perm_side == tab_side


@pytest.mark.parametrize("n", range(2, 11))
def test_dimension_identity(n):
    assert dimension_identity(n)
    assert regev_character(n, (1,) * n) == n * 2 ** (n - 2)


def test_regev_identity_class_is_arc_count():
    assert regev_character(5, (1,) * 5) == 40
