"""Classical expander families on Z_n^2 and SL2(Z_n).

Multi-edges and loops are kept exactly as the transformations produce them.
"""
from __future__ import annotations

from collections import Counter, deque
from typing import Sequence

from .dynamics import IDENTITY, T1, T2, T3, T4, AffineGen
from .graphs import Graph

T3_BAR = T4 @ T3.inverse() @ T4.inverse()

MARGULIS = (("1", IDENTITY), ("T1", T1), ("T2", T2), ("T3", T3), ("T4", T4))
MARGULIS_BAR = (("1", IDENTITY), ("T1", T1), ("T2", T2), ("T3bar", T3_BAR), ("T4", T4))
GABBER_GALIL = (("1", IDENTITY), ("T3", T3), ("T3bar", T3_BAR), ("T1T3", T1 @ T3), ("T2T3", T2 @ T3))


def _torus_labels(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(n) for y in range(n)]


def bipartite_from_maps(n: int, maps: Sequence[tuple[str, AffineGen]], name: str) -> Graph:
    """Left copy ``("L", x, y)`` joined to ``("R", T(x, y))`` for each map ``T``."""
    pts = _torus_labels(n)
    labels = [("L",) + p for p in pts] + [("R",) + p for p in pts]
    pairs = []
    for p in pts:
        for tag, gen in maps:
            pairs.append((("L",) + p, ("R",) + gen.apply_mod(p[0], p[1], n), tag))
    return Graph.from_edges(labels, pairs, name=f"{name}{n}")


def margulis_M(n: int) -> Graph:
    return bipartite_from_maps(n, MARGULIS, "M")


def margulis_Mbar(n: int) -> Graph:
    return bipartite_from_maps(n, MARGULIS_BAR, "Mbar")


def gabber_galil_L(n: int) -> Graph:
    return bipartite_from_maps(n, GABBER_GALIL, "L")


def left_multisets(graph: Graph) -> dict:
    """Right neighbours of each left vertex, with multiplicity."""
    out: dict = {}
    for u, v, _ in graph.edges:
        a, b = graph.labels[u], graph.labels[v]
        if a[0] == "R":
            a, b = b, a
        out.setdefault(a, Counter())[b] += 1
    return out


def schreier_Mcirc(n: int) -> Graph:
    """Schreier graph of Z_n^2 for {1, T1, T2, T3, T4} and inverses.

    Every vertex ``v`` gets the edge ``{v, T v}`` for each of the five maps;
    the identity contributes a loop, so the graph is 10-regular with loops
    counted twice.
    """
    pts = _torus_labels(n)
    pairs = []
    for p in pts:
        for tag, gen in MARGULIS:
            pairs.append((p, gen.apply_mod(p[0], p[1], n), tag))
    return Graph.from_edges(pts, pairs, name=f"Mcirc{n}")


def identity_matching(n: int) -> list[tuple]:
    """One edge ``(L x, R x)`` per vertex of Z_n^2 (the identity matching)."""
    return [(("L",) + p, ("R",) + p) for p in _torus_labels(n)]


def strip_side(graph: Graph) -> Graph:
    """Relabel ``("L", x, y)`` as ``(x, y)`` after a matching quotient."""
    return Graph([lab[1:] for lab in graph.labels], list(graph.edges), graph.name)


def same_multigraph(g: Graph, h: Graph) -> bool:
    """Exact equality of labelled multigraphs (the identity bijection is an isomorphism)."""
    if set(g.labels) != set(h.labels):
        return False

    def key(graph):
        return Counter(tuple(sorted((graph.labels[u], graph.labels[v]))) for u, v, _ in graph.edges)

    return key(g) == key(h)


# -- SL2(Z_n) Cayley graphs ------------------------------------------------


def _matmul(a: tuple, b: tuple, n: int) -> tuple:
    return (
        (a[0] * b[0] + a[1] * b[2]) % n,
        (a[0] * b[1] + a[1] * b[3]) % n,
        (a[2] * b[0] + a[3] * b[2]) % n,
        (a[2] * b[1] + a[3] * b[3]) % n,
    )


def selberg_generators(n: int, k: int) -> dict[str, tuple]:
    """``a_k, b_k`` and their inverses as flattened 2x2 matrices mod n."""
    return {
        "a": (1, k % n, 0, 1),
        "A": (1, (-k) % n, 0, 1),
        "b": (1, 0, k % n, 1),
        "B": (1, 0, (-k) % n, 1),
    }


def selberg_cayley(n: int, k: int = 1) -> Graph:
    """Cayley graph of ``<a_k, b_k>`` mod n under right multiplication.

    Edges ``{g, g a}`` and ``{g, g b}``; the inverse generators give the same
    undirected edges, so the graph is 4-regular counting loops twice.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    gens = selberg_generators(n, k)
    ident = (1, 0, 0, 1)
    seen = {ident: 0}
    order = [ident]
    q = deque([ident])
    while q:
        g = q.popleft()
        for s in "aAbB":
            h = _matmul(g, gens[s], n)
            if h not in seen:
                seen[h] = len(order)
                order.append(h)
                q.append(h)
    labels = sorted(order)
    pairs = [(g, _matmul(g, gens[s], n), s) for g in labels for s in "ab"]
    return Graph.from_edges(labels, pairs, name=f"Sel{n},{k}")


def sl2_order(n: int) -> int:
    """|SL2(Z_n)| by brute-force enumeration."""
    return sum(
        1
        for a in range(n)
        for b in range(n)
        for c in range(n)
        for d in range(n)
        if (a * d - b * c) % n == 1 % n
    )


def left_translation_is_automorphism(graph: Graph, h: tuple, n: int) -> bool:
    """Whether ``g -> h g`` preserves the edge multiset of a Cayley graph."""
    image = {lab: _matmul(h, lab, n) for lab in graph.labels}
    if set(image.values()) != set(graph.labels):
        return False
    orig = Counter(tuple(sorted((graph.labels[u], graph.labels[v]))) for u, v, _ in graph.edges)
    moved = Counter(tuple(sorted((image[graph.labels[u]], image[graph.labels[v]]))) for u, v, _ in graph.edges)
    return orig == moved
