"""
Left-unimodal, unimodal and arc permutations, and their two encodings.

L_n ⊂ U_n ⊂ A_n, and Z_n = A_n minus U_n collects the non-unimodal arc
permutations. The position encoding ``psi`` records the first letter and, for
each later letter but the last, whether it extends the current cyclic interval
upwards (1) or downwards (0). The descent encoding ``nu`` records the descent
word plus at most one underlined AD/DA pair marking where the prefix first
wraps around.

>>> psi_encode((4, 3, 5, 2, 1, 7, 6))
PsiCode(n=7, psi0=3, bits=(0, 1, 0, 0, 0))
>>> str(nu_encode((1, 2, 5, 4, 3)))
'A[AD]D'
>>> [format_perm(p) for p in generate_family(4, "Z")]
['2143', '3412']
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .perm import Perm, descent_set, format_perm

FAMILIES = ("L", "U", "A", "Z")


def _is_interval(values: set[int], lo: int, hi: int) -> bool:
    return hi - lo + 1 == len(values)


def is_left_unimodal(p: Sequence[int]) -> bool:
    """Every prefix is an interval of integers."""
    lo = hi = p[0] if p else 0
    for j, v in enumerate(p):
        lo, hi = min(lo, v), max(hi, v)
        if hi - lo != j:
            return False
    return True


def is_unimodal(p: Sequence[int]) -> bool:
    """Every prefix, or every suffix, is an interval of integers."""
    return is_left_unimodal(p) or is_left_unimodal(p[::-1])


def is_cyclic_interval(values: set[int], n: int) -> bool:
    """Whether ``values`` is an interval of Z_n (n identified with 0)."""
    if len(values) in (0, n):
        return True
    # a proper cyclic interval has exactly one element whose successor is missing
    ends = sum(1 for v in values if (v % n) + 1 not in values)
    return ends == 1


def is_arc(p: Sequence[int]) -> bool:
    """Every prefix is an interval of Z_n."""
    n = len(p)
    prefix: set[int] = set()
    for v in p:
        prefix.add(v)
        if not is_cyclic_interval(prefix, n):
            return False
    return True


def _wrap(m: int, n: int) -> int:
    return (m - 1) % n + 1


@lru_cache(maxsize=None)
def _arc_tuple(n: int) -> tuple[Perm, ...]:
    if n == 1:
        return ((1,),)
    out: set[Perm] = set()

    def grow(seq: list[int], lo: int, hi: int):
        # prefix occupies the cyclic interval lo, lo+1, ..., hi (mod n)
        if len(seq) == n:
            out.add(tuple(seq))
            return
        grow(seq + [_wrap(hi + 1, n)], lo, hi + 1)
        grow(seq + [_wrap(lo - 1, n)], lo - 1, hi)

    for first in range(1, n + 1):
        grow([first], first, first)
    return tuple(sorted(out))


def generate_family(n: int, family: str) -> list[Perm]:
    """Members of L_n, U_n, A_n or Z_n, sorted lexicographically.

    A_n is built constructively from its first letter by extending the cyclic
    interval at either end, so it does not rely on the pattern machinery.
    """
    if n < 1:
        raise ValueError("n must be positive")
    family = family.upper()
    arcs = _arc_tuple(n)
    if family == "A":
        return list(arcs)
    if family == "U":
        return [p for p in arcs if is_unimodal(p)]
    if family == "L":
        return [p for p in arcs if is_left_unimodal(p)]
    if family == "Z":
        return [p for p in arcs if not is_unimodal(p)]
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_size(n: int, family: str) -> int:
    """Closed-form sizes; the A, U, Z formulas hold for n >= 2."""
    family = family.upper()
    if family == "L":
        return 2 ** (n - 1)
    if n == 1:
        return 1 if family in ("U", "A") else 0
    if family == "U":
        return 2**n - 2
    if family == "A":
        return n * 2 ** (n - 2)
    if family == "Z":
        return 2 ** (n - 2) * (n - 4) + 2
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class PsiCode:
    """(psi0, psi_1..psi_{n-2}) with psi0 in 0..n-1 and bits in {0, 1}."""

    n: int
    psi0: int
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if self.n < 2:
            raise ValueError("psi codes need n >= 2")
        if not 0 <= self.psi0 < self.n:
            raise ValueError(f"psi0={self.psi0} outside 0..{self.n - 1}")
        if len(self.bits) != self.n - 2 or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"expected {self.n - 2} bits in {{0,1}}, got {self.bits}")

    @property
    def vector(self) -> tuple[int, ...]:
        return (self.psi0,) + self.bits

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> PsiCode:
        return cls(len(vec) + 1, vec[0], tuple(vec[1:]))

    @classmethod
    def parse(cls, text: str) -> PsiCode:
        return cls.from_vector([int(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.vector)


def psi_encode(p: Sequence[int]) -> PsiCode:
    n = len(p)
    if n < 2 or not is_arc(p):
        raise ValueError(f"{tuple(p)} is not an arc permutation with n >= 2")
    prefix = {p[0]}
    bits = []
    for i in range(1, n - 1):
        v = p[i]
        if _wrap(v - 1, n) in prefix:
            bits.append(1)
        else:
            assert _wrap(v + 1, n) in prefix
            bits.append(0)
        prefix.add(v)
    return PsiCode(n, p[0] - 1, tuple(bits))


def psi_decode(code: PsiCode) -> Perm:
    n = code.n
    first = code.psi0 + 1
    seq = [first]
    lo = hi = first
    for b in code.bits:
        if b:
            hi += 1
            seq.append(_wrap(hi, n))
        else:
            lo -= 1
            seq.append(_wrap(lo, n))
    seq.append(next(v for v in range(1, n + 1) if v not in set(seq)))
    return tuple(seq)


_WORD = re.compile(r"^([AD]*)(?:\[([AD]{2})\])?([AD]*)$")


@dataclass(frozen=True)
class DescentWord:
    """A word over {A, D} of length n-1 with an optional underlined pair.

    ``underline`` is the 1-based index of the left letter of the marked pair.
    """

    letters: str
    underline: int | None = None

    def __post_init__(self):
        if any(ch not in "AD" for ch in self.letters):
            raise ValueError(f"letters must be A or D: {self.letters!r}")
        u = self.underline
        if u is not None:
            if not 1 <= u <= len(self.letters) - 1:
                raise ValueError(f"underline {u} outside 1..{len(self.letters) - 1}")
            if self.letters[u - 1] == self.letters[u]:
                raise ValueError("the underlined pair must be AD or DA")

    @property
    def n(self) -> int:
        return len(self.letters) + 1

    @classmethod
    def parse(cls, text: str) -> DescentWord:
        """Read the bracketed form, e.g. ``DAA[DA]DA``."""
        m = _WORD.match(text.strip().upper())
        if not m:
            raise ValueError(f"cannot parse descent word {text!r}")
        head, pair, tail = m.groups()
        if pair is None:
            return cls(head + tail)
        return cls(head + pair + tail, len(head) + 1)

    def __str__(self) -> str:
        if self.underline is None:
            return self.letters
        u = self.underline
        return f"{self.letters[:u - 1]}[{self.letters[u - 1:u + 1]}]{self.letters[u + 1:]}"


def nu_encode(p: Sequence[int]) -> DescentWord:
    n = len(p)
    if not is_arc(p):
        raise ValueError(f"{tuple(p)} is not an arc permutation")
    des = descent_set(p)
    letters = "".join("D" if i in des else "A" for i in range(1, n))
    lo = hi = p[0]
    for k in range(2, n + 1):
        v = p[k - 1]
        lo, hi = min(lo, v), max(hi, v)
        if hi - lo != k - 1:
            return DescentWord(letters, k - 1)
    return DescentWord(letters)


def nu_decode(w: DescentWord) -> Perm:
    """Invert ``nu`` with the explicit two-part formula (prefix before the wrap, suffix after)."""
    n = w.n
    letters = " " + w.letters  # 1-based: letters[i] is w_i
    k = n + 1 if w.underline is None else w.underline + 1
    pair = None if w.underline is None else letters[k - 1] + letters[k]
    delta = n + 1 if pair == "DA" else k

    def count(letter: str, a: int, b: int) -> int:
        return sum(1 for j in range(a, b + 1) if letters[j] == letter)

    p = [0] * (n + 1)
    for i in range(1, min(k, n + 1)):
        if i == 1 or letters[i - 1] == "A":
            p[i] = delta - 1 - count("A", i, k - 2)
        else:
            p[i] = delta - k + 1 + count("D", i, k - 2)
    if k <= n:
        base = delta % n
        for i in range(k, n + 1):
            # the last letter is both ends of the remaining interval; either branch agrees
            if i == n or letters[i] == "A":
                p[i] = base + count("A", k, i - 1)
            else:
                p[i] = base + n - k - count("D", k, i - 1)
    return tuple(p[1:])


def all_descent_words(n: int) -> list[DescentWord]:
    """Every word of W_n: 2^(n-1) plain words plus all single underlinings."""
    out = []
    for mask in range(2 ** (n - 1)):
        letters = "".join("D" if mask >> (n - 2 - i) & 1 else "A" for i in range(n - 1))
        out.append(DescentWord(letters))
        for u in range(1, n - 1):
            if letters[u - 1] != letters[u]:
                out.append(DescentWord(letters, u))
    return out


def count_by_descent_set(n: int, descents: Sequence[int] | frozenset[int]) -> int:
    """#{p in A_n : Des(p) = B} = 1 + #{i in [n-2] : |B ∩ {i, i+1}| = 1}."""
    b = set(descents)
    if not b <= set(range(1, n)):
        raise ValueError(f"{sorted(b)} is not a subset of 1..{n - 1}")
    return 1 + sum(1 for i in range(1, n - 1) if (i in b) != (i + 1 in b))
