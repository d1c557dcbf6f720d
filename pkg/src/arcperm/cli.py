"""
Command-line interface.

    arcperm gen 4 Z
    arcperm verify regev 4..7
    arcperm encode "4 3 5 2 1 7 6" psi
    arcperm decode "A[AD]D" nu
    arcperm biject "8 9 10 7 11 1 2 6 5 3 4" phi
    arcperm graph 4 xn --format json

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from . import arc_graph, bijections, claims, weak_order
from .families import DescentWord, PsiCode, generate_family, nu_decode, nu_encode, psi_decode, psi_encode
from .perm import format_perm, parse_perm
from .shuffles import all_shuffles
from .tableaux import Tableau, generate_Hook_n, generate_T_n

FAMILY_CAP = 12
EXHAUSTIVE_CAP = 8
GEN_FAMILIES = ("L", "U", "A", "Z", "T", "HOOK", "SHUF")


class UsageError(Exception):
    pass


def _cap(default: int) -> int:
    raw = os.environ.get("ARCPERM_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ARCPERM_MAX_N must be an integer, got {raw!r}") from None


def _check_n(n: int, cap: int, lo: int = 1) -> None:
    if n < lo:
        raise UsageError(f"n must be at least {lo}")
    if n > cap:
        raise UsageError(f"n = {n} exceeds the size cap {cap} (set ARCPERM_MAX_N to override)")


def parse_range(text: str) -> range:
    """'4..7' or '5'."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None


def parse_tableau(text: str) -> Tableau:
    """Rows separated by '/', entries by spaces or commas."""
    rows = []
    for chunk in text.split("/"):
        entries = chunk.replace(",", " ").split()
        if entries:
            rows.append(tuple(int(e) for e in entries))
    return Tableau(tuple(rows))


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_gen(args) -> int:
    family = args.family.upper()
    if family not in GEN_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(GEN_FAMILIES)}")
    _check_n(args.n, _cap(FAMILY_CAP))
    if family == "T":
        items = [str(t) for t in generate_T_n(args.n)]
    elif family == "HOOK":
        items = [str(t) for t in generate_Hook_n(args.n)]
    elif family == "SHUF":
        items = [format_perm(p) for p in all_shuffles(args.n)]
    else:
        items = [format_perm(p) for p in generate_family(args.n, family)]
    with _output(args.out) as out:
        if args.format == "json":
            json.dump({"n": args.n, "family": family, "count": len(items), "items": items}, out)
            out.write("\n")
        else:
            for item in items:
                out.write(item + "\n")
            out.write(f"# count {len(items)}\n")
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for cid, c in claims.CLAIMS.items():
            print(f"{cid}\t{c.min_n}..{c.max_n}\t{c.statement}")
        return 0
    if args.claim is None:
        raise UsageError("a claim id is required (see --list)")
    if args.claim not in claims.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r} (see --list)")
    claim = claims.CLAIMS[args.claim]
    text = args.range or args.range_opt
    ns = parse_range(text) if text else range(claim.min_n, claim.max_n + 1)
    # cheap claims (family counts) are registered beyond the exhaustive cap
    cap = _cap(max(EXHAUSTIVE_CAP, claim.max_n))
    for n in ns:
        _check_n(n, cap, lo=claim.min_n)
    checks = claims.run_claim(args.claim, ns)
    ok = all(c.ok for c in checks)
    report = {"claim": args.claim, "statement": claim.statement, "ok": ok, "checks": [c.as_dict() for c in checks]}
    with _output(args.out) as out:
        json.dump(report, out, indent=2)
        out.write("\n")
    return 0 if ok else 1


def cmd_encode(args) -> int:
    p = parse_perm(args.perm)
    if args.scheme == "psi":
        print(psi_encode(p))
    else:
        print(nu_encode(p))
    return 0


def cmd_decode(args) -> int:
    if args.scheme == "psi":
        p = psi_decode(PsiCode.parse(args.code))
    else:
        p = nu_decode(DescentWord.parse(args.code))
    print(format_perm(p))
    return 0


def cmd_biject(args) -> int:
    if args.inverse:
        t = parse_tableau(args.value)
        p = bijections.phi_inverse(t) if args.map == "phi" else bijections.psi_shape_inverse(t)
        print(format_perm(p))
    else:
        p = parse_perm(args.value)
        t = bijections.phi(p) if args.map == "phi" else bijections.psi_shape_map(p)
        print(t)
    return 0


def graph_data(n: int, what: str) -> dict:
    if what == "xn":
        g = arc_graph.build_arc_graph(n)
        nodes = [format_perm(v) for v in g.vertices]
        edges = [[format_perm(u), format_perm(v), label] for u, v, label in g.edges()]
    elif what == "weak-u":
        P = weak_order.build_weak_hasse(n, "U")
        nodes = [format_perm(v) for v in P.elements]
        edges = [[format_perm(a), format_perm(b), P.labels[(a, b)]] for a, b in P.covers]
    elif what == "dominance":
        H = arc_graph.dominance_hasse(n)
        name = lambda v: ",".join(map(str, v))  # noqa: E731
        nodes = [name(v) for v in H.elements]
        edges = [[name(a), name(b), None] for a, b in H.covers]
    else:
        raise UsageError(f"unknown graph {what!r}")
    return {"n": n, "nodes": sorted(nodes), "edges": sorted(edges, key=lambda e: (e[0], e[1]))}


def to_dot(data: dict, directed: bool) -> str:
    kind, arrow = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{kind} G {{"]
    for node in data["nodes"]:
        lines.append(f'  "{node}";')
    for a, b, label in data["edges"]:
        attr = f' [label="{label}"]' if label is not None else ""
        lines.append(f'  "{a}" {arrow} "{b}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    lo = 3 if args.what == "dominance" else 2
    _check_n(args.n, _cap(EXHAUSTIVE_CAP), lo=lo)
    data = graph_data(args.n, args.what)
    with _output(args.out) as out:
        if args.format == "json":
            json.dump(data, out)
            out.write("\n")
        else:
            out.write(to_dot(data, directed=args.what != "xn"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcperm", description="Toolkit for arc permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="list a family")
    p.add_argument("n", type=int)
    p.add_argument("family", help="L, U, A, Z, T, HOOK or SHUF")
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a registered claim over a range of n")
    p.add_argument("claim", nargs="?")
    p.add_argument("range", nargs="?", help="a..b")
    p.add_argument("--range", dest="range_opt", help="a..b")
    p.add_argument("--list", action="store_true", help="list claim ids")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode an arc permutation")
    p.add_argument("perm")
    p.add_argument("scheme", choices=("psi", "nu"))
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a psi or nu code")
    p.add_argument("code")
    p.add_argument("scheme", choices=("psi", "nu"))
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("biject", help="apply phi or the shape-preserving map")
    p.add_argument("value", help="a permutation, or a tableau like '1 2 3/4 5/6' with --inverse")
    p.add_argument("map", choices=("phi", "psi"))
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("graph", help="export X_n, Weak(U_n) or the dominance order")
    p.add_argument("n", type=int)
    p.add_argument("what", choices=("xn", "weak-u", "dominance"))
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"arcperm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
