from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcperm.families import (
    DescentWord,
    PsiCode,
    all_descent_words,
    count_by_descent_set,
    family_size,
    generate_family,
    is_arc,
    is_left_unimodal,
    is_unimodal,
    nu_decode,
    nu_encode,
    psi_decode,
    psi_encode,
)
from arcperm.perm import (
    ARC_PATTERNS,
    LEFT_UNIMODAL_PATTERNS,
    UNIMODAL_PATTERNS,
    all_perms,
    avoidance_class,
    descent_set,
    inverse,
    rsk,
)
from strategies import arc_perms


def test_membership_examples():
    assert is_left_unimodal((3, 4, 2, 5, 6, 1))
    assert is_unimodal((1, 6, 5, 2, 4, 3))
    assert is_arc((1, 2, 5, 4, 3))
    assert not is_arc((1, 2, 5, 4, 3, 6))


@pytest.mark.parametrize("n", range(1, 9))
def test_family_sizes_and_nesting(n):
    fams = {f: generate_family(n, f) for f in "LUAZ"}
    for f, members in fams.items():
        assert len(members) == family_size(n, f)
        assert members == sorted(members)
    assert set(fams["L"]) <= set(fams["U"]) <= set(fams["A"])
    assert set(fams["Z"]) == set(fams["A"]) - set(fams["U"])


def test_family_examples():
    assert len(generate_family(4, "A")) == 16
    assert generate_family(4, "Z") == [(2, 1, 4, 3), (3, 4, 1, 2)]
    assert generate_family(3, "Z") == []
    with pytest.raises(ValueError):
        generate_family(4, "Q")


@pytest.mark.parametrize("n", range(1, 8))
def test_generation_matches_definitions(n):
    s = all_perms(n)
    assert generate_family(n, "A") == [p for p in s if is_arc(p)]
    assert generate_family(n, "U") == [p for p in s if is_unimodal(p)]
    assert generate_family(n, "L") == [p for p in s if is_left_unimodal(p)]


@pytest.mark.parametrize("n", range(1, 9))
def test_pattern_characterizations(n):
    assert avoidance_class(n, ARC_PATTERNS) == generate_family(n, "A")
    assert avoidance_class(n, UNIMODAL_PATTERNS) == generate_family(n, "U")
    assert avoidance_class(n, LEFT_UNIMODAL_PATTERNS) == generate_family(n, "L")


def _interval_descents(n):
    sets = {"prefix": [], "suffix": []}
    for i in range(n):
        sets["prefix"].append(frozenset(range(1, i + 1)))
        sets["suffix"].append(frozenset(range(i + 1, n)))
    return sets


@pytest.mark.parametrize("n", range(2, 8))
def test_inverse_descent_characterizations(n):
    left = set(generate_family(n, "L"))
    uni = set(generate_family(n, "U"))
    arcs = set(generate_family(n, "A"))
    iv = _interval_descents(n)
    for p in all_perms(n):
        d = descent_set(inverse(p))
        assert (p in left) == (d in iv["prefix"])
        assert (p in uni) == (d in iv["prefix"] or d in iv["suffix"])
        q = inverse(p)
        if q[0] < q[-1]:
            ok = any(d == set(range(1, i + 1)) | set(range(j + 1, n)) for i in range(n) for j in range(i, n))
        else:
            ok = any(d == set(range(i + 1, j + 1)) for i in range(n) for j in range(i, n))
        assert (p in arcs) == ok


def _knuth_closed(n, members):
    classes = {}
    for p in all_perms(n):
        classes.setdefault(rsk(p)[0], set()).add(p in members)
    return all(len(v) == 1 for v in classes.values())


@pytest.mark.parametrize("n", range(4, 7))
def test_knuth_classes(n):
    assert _knuth_closed(n, set(generate_family(n, "L")))
    assert _knuth_closed(n, set(generate_family(n, "U")))
    assert not _knuth_closed(n, set(generate_family(n, "Z")))


def test_psi_examples():
    assert psi_encode((4, 3, 5, 2, 1, 7, 6)) == PsiCode(7, 3, (0, 1, 0, 0, 0))
    assert str(psi_encode((4, 3, 5, 2, 1, 7, 6))) == "3,0,1,0,0,0"
    assert psi_encode(tuple(range(1, 7))).vector == (0, 1, 1, 1, 1)
    assert PsiCode.parse("3,0,1,0,0,0") == PsiCode(7, 3, (0, 1, 0, 0, 0))


@pytest.mark.parametrize("n", range(2, 9))
def test_psi_round_trip(n):
    arcs = generate_family(n, "A")
    codes = {psi_encode(p) for p in arcs}
    assert len(codes) == n * 2 ** (n - 2)
    assert all(psi_decode(psi_encode(p)) == p for p in arcs)


def test_psi_code_validation():
    with pytest.raises(ValueError):
        PsiCode(4, 4, (0, 1))
    with pytest.raises(ValueError):
        PsiCode(4, 0, (0, 2))
    with pytest.raises(ValueError):
        psi_encode((1, 3, 2, 4))


def test_nu_examples():
    assert str(nu_encode((3, 4, 2, 5, 6, 1))) == "ADAAD"
    w = nu_encode((1, 2, 5, 4, 3))
    assert (w.letters, w.underline, str(w)) == ("AADD", 2, "A[AD]D")
    w = nu_encode((6, 5, 7, 8, 1, 4, 2, 3))
    assert (w.letters, w.underline, str(w)) == ("DAADADA", 4, "DAA[DA]DA")


def test_descent_word_validation():
    with pytest.raises(ValueError):
        DescentWord("AAD", 1)
    with pytest.raises(ValueError):
        DescentWord.parse("A[AA]D")
    assert DescentWord.parse("DAA[DA]DA") == DescentWord("DAADADA", 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_nu_is_a_bijection(n):
    arcs = generate_family(n, "A")
    words = all_descent_words(n)
    assert len(words) == len(arcs)
    assert sorted(nu_decode(w) for w in words) == arcs
    for p in arcs:
        w = nu_encode(p)
        assert nu_decode(w) == p
        assert {i for i, ch in enumerate(w.letters, 1) if ch == "D"} == descent_set(p)


@given(arc_perms())
def test_encodings_round_trip_random(p):
    assert psi_decode(psi_encode(p)) == p
    assert nu_decode(nu_encode(p)) == p
    assert DescentWord.parse(str(nu_encode(p))) == nu_encode(p)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.lists(st.integers(0, 1), min_size=n - 2, max_size=n - 2))))
def test_decode_then_encode(arg):
    n, psi0, bits = arg
    code = PsiCode(n, psi0, tuple(bits))
    assert psi_encode(psi_decode(code)) == code


@pytest.mark.parametrize("n", range(2, 9))
def test_count_by_descent_set(n):
    arcs = generate_family(n, "A")
    for mask in product((0, 1), repeat=n - 1):
        b = frozenset(i for i, bit in enumerate(mask, 1) if bit)
        assert count_by_descent_set(n, b) == sum(1 for p in arcs if descent_set(p) == b)


def test_count_by_descent_set_examples():
    assert count_by_descent_set(4, {2}) == 3
    assert count_by_descent_set(4, set()) == 1
