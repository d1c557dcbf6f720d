"""
Descent-set distributions and maj generating functions.

Generating functions in x_1..x_{n-1} that are multilinear are stored as maps
from subsets (monomials) to coefficients.

>>> d = descent_distribution(generate_family(4, "Z"))
>>> sorted((sorted(k), v) for k, v in d.table.items())
[([1, 3], 1), ([2], 1)]
>>> arc_maj_closed_form(3)
(1, 2, 2, 1)
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .families import generate_family
from .perm import descent_set, major_index
from .tableaux import Tableau, generate_Hook_n, generate_T_n

Monomial = frozenset[int]
Poly = dict[Monomial, int]


def _clean(p: Poly) -> Poly:
    return {m: c for m, c in p.items() if c}


def poly_add(*polys: Poly) -> Poly:
    out: Counter = Counter()
    for p in polys:
        for m, c in p.items():
            out[m] += c
    return _clean(out)


def poly_scale(p: Poly, c: int) -> Poly:
    return _clean({m: c * v for m, v in p.items()})


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Product of multilinear polynomials; a squared variable is an error."""
    out: Counter = Counter()
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                raise ValueError(f"variables {sorted(ma & mb)} would be squared")
            out[ma | mb] += ca * cb
    return _clean(out)


def poly_prod(factors: Iterable[Poly]) -> Poly:
    out: Poly = {frozenset(): 1}
    for f in factors:
        out = poly_mul(out, f)
    return out


ONE: Poly = {frozenset(): 1}


def x(*indices: int) -> Poly:
    """The monomial x_{i1} x_{i2} ..."""
    return {frozenset(indices): 1}


def one_plus(i: int) -> Poly:
    return {frozenset(): 1, frozenset((i,)): 1}


def one_plus_range(a: int, b: int) -> Poly:
    """(1 + x_a)(1 + x_{a+1}) ... (1 + x_b); empty product is 1."""
    return poly_prod(one_plus(i) for i in range(a, b + 1))


@dataclass
class DescentDistribution:
    n: int
    table: dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        self.table = _clean({frozenset(k): v for k, v in self.table.items()})
        if any(v < 0 for v in self.table.values()):
            raise ValueError("negative coefficient in a descent distribution")

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def __getitem__(self, descents: Iterable[int]) -> int:
        return self.table.get(frozenset(descents), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DescentDistribution):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def specialize(self) -> tuple[int, ...]:
        """x_i -> q^i, giving the maj polynomial as a coefficient tuple."""
        coeffs = [0] * (comb(self.n, 2) + 1)
        for m, c in self.table.items():
            coeffs[sum(m)] += c
        return _trim(coeffs)

    def to_json(self) -> str:
        rows = sorted(self.table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        return json.dumps({",".join(map(str, sorted(k))): v for k, v in rows})

    @classmethod
    def from_json(cls, n: int, text: str) -> DescentDistribution:
        raw = json.loads(text)
        return cls(n, {frozenset(int(t) for t in k.split(",") if t): v for k, v in raw.items()})


def _degree(obj) -> int:
    return obj.size if isinstance(obj, Tableau) else len(obj)


def _descents(obj) -> frozenset[int]:
    return obj.descent_set() if isinstance(obj, Tableau) else descent_set(obj)


def descent_distribution(family: Sequence, n: int | None = None) -> DescentDistribution:
    """Histogram of descent sets over permutations or standard tableaux of one size.

    ``n`` is required only when the family is empty.
    """
    family = list(family)
    sizes = {_degree(obj) for obj in family} | ({n} if n is not None else set())
    if len(sizes) != 1:
        raise ValueError(f"need exactly one size, got {sorted(sizes)}")
    return DescentDistribution(sizes.pop(), dict(Counter(_descents(obj) for obj in family)))


def from_poly(n: int, p: Poly) -> DescentDistribution:
    return DescentDistribution(n, p)


def arc_descent_closed_form(n: int) -> DescentDistribution:
    """(1+x_1)...(1+x_{n-1}) (1 + sum_i (x_i + x_{i+1}) / ((1+x_i)(1+x_{i+1}))), denominators cleared."""
    if n < 2:
        raise ValueError("n >= 2")
    terms = [one_plus_range(1, n - 1)]
    for i in range(1, n - 1):
        terms.append(poly_prod([one_plus_range(1, i - 1), poly_add(x(i), x(i + 1)), one_plus_range(i + 2, n - 1)]))
    return from_poly(n, poly_add(*terms))


def unimodal_descent_closed_form(n: int) -> DescentDistribution:
    """2(1+x_1)...(1+x_{n-1}) - 1 - x_1...x_{n-1}."""
    if n < 2:
        raise ValueError("n >= 2")
    return from_poly(n, poly_add(poly_scale(one_plus_range(1, n - 1), 2), poly_scale(ONE, -1), poly_scale(x(*range(1, n)), -1)))


def z_descent_closed_form(n: int) -> DescentDistribution:
    a, u = arc_descent_closed_form(n), unimodal_descent_closed_form(n)
    return from_poly(n, poly_add(a.table, poly_scale(u.table, -1)))


def hook_descent_closed_form(n: int) -> DescentDistribution:
    return from_poly(n, one_plus_range(1, n - 1))


def t_descent_closed_form(n: int) -> DescentDistribution:
    """Sum over the entry i+2 in the box (2,2), split on whether i+1 sits in the first row or column.

    T_2 and T_3 are empty, so the sum is zero there.
    """
    if n < 2:
        raise ValueError("n >= 2")
    terms = []
    for i in range(2, n - 1):
        head = one_plus_range(1, i - 1)
        tail = one_plus_range(i + 2, n - 1)
        in_row = poly_add(head, poly_scale(ONE, -1))
        in_col = poly_add(head, poly_scale(x(*range(1, i)), -1))
        terms.append(poly_prod([in_row, x(i + 1), tail]))
        terms.append(poly_prod([in_col, x(i), tail]))
    return from_poly(n, poly_add(*terms))


CLOSED_FORMS = {
    "A": arc_descent_closed_form,
    "U": unimodal_descent_closed_form,
    "Z": z_descent_closed_form,
    "HOOK": hook_descent_closed_form,
    "T": t_descent_closed_form,
}


def brute_distribution(n: int, family: str) -> DescentDistribution:
    family = family.upper()
    if family == "HOOK":
        return descent_distribution(generate_Hook_n(n), n)
    if family == "T":
        return descent_distribution(generate_T_n(n), n)
    return descent_distribution(generate_family(n, family), n)


# maj polynomials as coefficient tuples

def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def qpoly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def qpoly_add(*polys: Sequence[int]) -> tuple[int, ...]:
    out = [0] * max(len(p) for p in polys)
    for p in polys:
        for i, c in enumerate(p):
            out[i] += c
    return _trim(out)


def q_monomial(k: int, c: int = 1) -> tuple[int, ...]:
    return tuple([0] * k + [c])


def q_integer(n: int) -> tuple[int, ...]:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    return (1,) * n


def q_one_plus_range(a: int, b: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for i in range(a, b + 1):
        out = qpoly_mul(out, qpoly_add((1,), q_monomial(i)))
    return out


def maj_polynomial(family: Sequence) -> tuple[int, ...]:
    counts = Counter(major_index(p) if not isinstance(p, Tableau) else sum(p.descent_set()) for p in family)
    if not counts:
        return (0,)
    return _trim([counts.get(k, 0) for k in range(max(counts) + 1)])


def arc_maj_closed_form(n: int) -> tuple[int, ...]:
    """(1+q)(1+q^2)...(1+q^{n-2}) [n]_q."""
    if n < 2:
        raise ValueError("n >= 2")
    return qpoly_mul(q_one_plus_range(1, n - 2), q_integer(n))


def z_maj_closed_form(n: int) -> tuple[int, ...]:
    """The arc form minus 2(1+q)...(1+q^{n-1}), plus 1 + q^{C(n,2)}."""
    twice = tuple(-2 * c for c in q_one_plus_range(1, n - 1))
    return qpoly_add(arc_maj_closed_form(n), twice, (1,), q_monomial(comb(n, 2)))


def unimodal_descent_identity(n: int) -> bool:
    return brute_distribution(n, "U") == unimodal_descent_closed_form(n)


def tz_equidistribution(n: int) -> bool:
    if n < 4:
        raise ValueError("n >= 4")
    return brute_distribution(n, "T") == brute_distribution(n, "Z")
