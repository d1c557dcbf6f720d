"""
Permutations in one-line notation over {1..n}, stored as plain tuples.

Positions and values are 1-indexed. Composition follows
``compose(p, q)[i] = p[q[i]]``, so ``compose(p, sigma(n, i))`` swaps the
letters in positions ``i`` and ``i + 1`` (right multiplication acts on
positions) while ``compose(sigma(n, i), p)`` swaps the values ``i`` and ``i + 1``.

>>> descent_set((3, 4, 2, 5, 6, 1))
frozenset({2, 5})
>>> inverse((2, 3, 1))
(3, 1, 2)
>>> contains_pattern((1, 2, 5, 4, 3, 6), (1, 3, 2, 4))
True
>>> contains_pattern((1, 2, 5, 4, 3, 6), (3, 1, 4, 2))
False
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from itertools import combinations, permutations
from typing import Iterable, NamedTuple, Sequence

from .tableaux import Tableau

Perm = tuple[int, ...]


def as_perm(values: Iterable[int]) -> Perm:
    p = tuple(int(v) for v in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_perm(text: str) -> Perm:
    """Read one-line notation: space/comma separated, or a bare digit string when n <= 9."""
    text = text.strip()
    if any(sep in text for sep in " ,"):
        return as_perm(int(tok) for tok in text.replace(",", " ").split())
    return as_perm(int(ch) for ch in text)


def format_perm(p: Sequence[int]) -> str:
    """Compact digit string for n <= 9, comma separated otherwise."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """w0 = n ... 2 1."""
    return tuple(range(n, 0, -1))


def sigma(n: int, i: int) -> Perm:
    """The adjacent transposition (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"sigma_{i} is not a generator of S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def transposition(n: int, a: int, b: int) -> Perm:
    p = list(range(1, n + 1))
    p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
    return tuple(p)


def all_perms(n: int) -> list[Perm]:
    """S_n in lexicographic order."""
    return list(permutations(range(1, n + 1)))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x - 1] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    q = [0] * len(p)
    for i, v in enumerate(p, 1):
        q[v - 1] = i
    return tuple(q)


def swap_positions(p: Sequence[int], i: int) -> Perm:
    """compose(p, sigma_i) without building sigma_i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def swap_values(p: Sequence[int], a: int, b: int) -> Perm:
    """compose((a b), p): exchange the values a and b wherever they sit."""
    return tuple(b if v == a else a if v == b else v for v in p)


def conjugate_w0(p: Sequence[int]) -> Perm:
    """w0 p w0: reverse and complement."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def complement(p: Sequence[int]) -> Perm:
    """w0 p: replace each value v by n + 1 - v."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse(p: Sequence[int]) -> Perm:
    """p w0."""
    return tuple(reversed(p))


def left_cycle_shift(p: Sequence[int], k: int) -> Perm:
    """gamma^k p where gamma is the n-cycle (1, 2, ..., n)."""
    n = len(p)
    return tuple((v - 1 + k) % n + 1 for v in p)


def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def major_index(p: Sequence[int]) -> int:
    return sum(descent_set(p))


class Statistics(NamedTuple):
    inv: int
    maj: int
    length: int


def statistics(p: Sequence[int]) -> Statistics:
    inv = inversions(p)
    return Statistics(inv, major_index(p), inv)


def cayley_length(p: Sequence[int]) -> int:
    """Word length of p in adjacent transpositions, by BFS from the identity.

    Independent of the inversion count; only meant for small n.
    """
    p = tuple(p)
    n = len(p)
    start = identity(n)
    if p == start:
        return 0
    seen = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(1, n):
            nxt = swap_positions(cur, i)
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                if nxt == p:
                    return seen[nxt]
                queue.append(nxt)
    raise AssertionError("Cayley graph of S_n is connected")


def standardize(values: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to a sequence of distinct numbers."""
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(ranks[v] for v in values)


def contains_pattern(p: Sequence[int], pat: Sequence[int]) -> bool:
    """Whether some subsequence of p is order-isomorphic to pat (pruned backtracking)."""
    n, k = len(p), len(pat)
    if k > n:
        return False
    if k == 0:
        return True
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for pos in range(start, n - (k - t) + 1):
            v = p[pos]
            if all((p[c] < v) == (pat[s] < pat[t]) for s, c in enumerate(chosen)):
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def contains_pattern_naive(p: Sequence[int], pat: Sequence[int]) -> bool:
    """Reference check over every subsequence."""
    pat = tuple(pat)
    return any(standardize(sub) == pat for sub in combinations(p, len(pat)))


def avoids_all(p: Sequence[int], pats: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(p, pat) for pat in pats)


def avoidance_class(n: int, pats: Iterable[Sequence[int]]) -> list[Perm]:
    """S_n(pats), sorted, grown by inserting the largest value into S_{n-1}(pats).

    Valid because a pattern class is closed under deleting entries.
    """
    pats = [tuple(pt) for pt in pats]
    level: set[Perm] = {()}
    for m in range(1, n + 1):
        nxt = set()
        for q in level:
            for pos in range(m):
                cand = q[:pos] + (m,) + q[pos:]
                if cand not in nxt and avoids_all(cand, pats):
                    nxt.add(cand)
        level = nxt
    return sorted(level)


def rsk(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK; returns (insertion tableau P, recording tableau Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


ARC_PATTERNS: tuple[Perm, ...] = (
    (1, 3, 2, 4), (1, 3, 4, 2), (2, 4, 1, 3), (2, 4, 3, 1),
    (3, 1, 2, 4), (3, 1, 4, 2), (4, 2, 1, 3), (4, 2, 3, 1),
)
UNIMODAL_PATTERNS: tuple[Perm, ...] = tuple(sorted(ARC_PATTERNS + ((2, 1, 4, 3), (3, 4, 1, 2))))
LEFT_UNIMODAL_PATTERNS: tuple[Perm, ...] = ((1, 3, 2), (3, 1, 2))
SHUFFLE_PATTERNS: tuple[Perm, ...] = ((3, 2, 1), (2, 1, 4, 3), (2, 4, 1, 3))
