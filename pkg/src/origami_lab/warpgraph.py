"""Level graphs of warped cones over origami surfaces.

The level at scale ``t`` is discretised on the grid of denominator ``t``: a
grid step has length ``1/t`` on the surface, i.e. length 1 after scaling by
``t``, so metric edges and generator jumps both cost one hop.
"""
from __future__ import annotations

import hashlib
import itertools
import os
import pickle
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .dynamics import check_k, f2_ball, grid_apply
from .errors import FibreMismatch, GapNotDiverging, NotAMatching
from .graphs import Graph, default_label
from .surface import (
    Surface,
    SurfacePoint,
    covering_map,
    from_triple,
    grid_neighbors,
    grid_triples,
    to_triple,
)

CACHE_ENV = "ORIGAMI_LAB_CACHE"


class LevelGraph(Graph):
    """Grid points of the surface at level ``t`` with Metric and Warp(a|b) edges."""

    def __init__(self, surface: Surface, k: int, t: int, triples, edges, warped: bool = True):
        labels = [from_triple(q, t) for q in triples]
        super().__init__(labels, edges, name=f"level(m={surface.m},k={k},t={t}{'' if warped else ',unwarped'})")
        self.surface = surface
        self.k = k
        self.t = t
        self.warped = warped
        self.triples = list(triples)
        self.triple_index = {q: i for i, q in enumerate(self.triples)}

    def __reduce__(self):
        return (LevelGraph, (self.surface, self.k, self.t, self.triples, self.edges, self.warped))

    def base_vertex(self) -> int:
        """Index of the cone point over the origin (canonical corner of square 0)."""
        return self.triple_index[(self.surface.corner_rep[0], 0, 0)]

    def metric_only(self) -> Graph:
        return Graph(self.labels, [e for e in self.edges if e[2] == "Metric"], name=self.name + "[metric]")


def _level_edges(surface: Surface, k: int, t: int, triples, warped: bool):
    index = {q: i for i, q in enumerate(triples)}
    seen: set[tuple[int, int]] = set()
    edges = []
    for i, p in enumerate(triples):
        for q in grid_neighbors(surface, t, p):
            j = index[q]
            key = (min(i, j), max(i, j))
            if key not in seen:
                seen.add(key)
                edges.append((key[0], key[1], "Metric"))
    if warped:
        for letter in "ab":
            for i, p in enumerate(triples):
                q = grid_apply(surface, letter, k, t, p)
                j = index[q]
                if i == j:
                    continue
                key = (min(i, j), max(i, j))
                if key not in seen:
                    seen.add(key)
                    edges.append((key[0], key[1], f"Warp({letter})"))
    edges.sort()
    return edges


def _cache_path(surface: Surface, k: int, t: int, warped: bool) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    key = f"{surface.datum.to_json()}|{k}|{t}|{warped}|v1"
    return Path(root) / f"level-{hashlib.sha256(key.encode()).hexdigest()[:20]}.pkl"


def build_level(surface: Surface, k: int, t: int, warped: bool = True) -> LevelGraph:
    """Level graph at scale ``t``; ``warped=False`` gives the metric-only control."""
    check_k(surface, k)
    if t < 1:
        raise ValueError("t must be >= 1")
    path = _cache_path(surface, k, t, warped)
    if path is not None and path.exists():
        with open(path, "rb") as fh:
            return pickle.load(fh)
    triples = grid_triples(surface, t)
    level = LevelGraph(surface, k, t, triples, _level_edges(surface, k, t, triples, warped), warped)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "wb") as fh:
            pickle.dump(level, fh)
        tmp.replace(path)
    return level


def warped_distance(level: LevelGraph, u: SurfacePoint, v: SurfacePoint) -> int:
    return level.distance(u, v)


def dg_wordball(surface: Surface, k: int, t: int, u: SurfacePoint, v: SurfacePoint, R: int) -> Fraction:
    """``min_{|g| <= R} |g| + t * d(g u, v)`` with ``d`` the L1 grid path metric."""
    check_k(surface, k)
    level = build_level(surface, k, t, warped=False)
    dist = level.bfs(level.vertex(v))
    pu = to_triple(u, t)
    best = None
    for word in f2_ball(R):
        p = pu
        for c in reversed(word):
            p = grid_apply(surface, c, k, t, p)
        val = len(word) + int(dist[level.triple_index[p]])
        if best is None or val < best:
            best = val
    return Fraction(best)


def level_csv_distances(level: LevelGraph, pairs: Sequence[tuple[SurfacePoint, SurfacePoint]]) -> str:
    rows = ["u,v,distance"]
    for u, v in pairs:
        rows.append(f"{u},{v},{level.distance(u, v)}")
    return "\n".join(rows) + "\n"


def vertex_label(p) -> str:
    return str(p) if isinstance(p, SurfacePoint) else default_label(p)


# -- matchings and quotients -------------------------------------------------


def check_matching(graph: Graph, matching: Sequence[tuple]) -> list[tuple[int, int]]:
    pairs = []
    used: set[int] = set()
    available = graph.edge_counter()
    for e in matching:
        u, v = graph.vertex(e[0]), graph.vertex(e[1])
        a, b = min(u, v), max(u, v)
        if a == b or available[(a, b)] <= 0:
            raise NotAMatching(f"{e!r} is not an edge between distinct vertices")
        if a in used or b in used:
            raise NotAMatching(f"edges of the matching share the endpoint in {e!r}")
        used.update((a, b))
        available[(a, b)] -= 1
        pairs.append((a, b))
    return pairs


def matching_quotient(graph: Graph, matching: Sequence[tuple]) -> tuple[Graph, dict]:
    """Identify the endpoints of each matching edge.

    Returns the quotient multigraph (matched edges become loops; every other
    edge is kept with its multiplicity) and the quotient map on labels.  A
    merged vertex keeps the label of its lower-indexed endpoint.
    """
    pairs = check_matching(graph, matching)
    rep = list(range(graph.n))
    for a, b in pairs:
        rep[b] = a
    kept = [i for i in range(graph.n) if rep[i] == i]
    new_index = {old: j for j, old in enumerate(kept)}
    edges = []
    for u, v, kind in graph.edges:
        a, b = new_index[rep[u]], new_index[rep[v]]
        edges.append((min(a, b), max(a, b), kind))
    labels = [graph.labels[i] for i in kept]
    qmap = {graph.labels[i]: graph.labels[rep[i]] for i in range(graph.n)}
    return Graph(labels, edges, name=graph.name + "/matching"), qmap


def quotient_qi_violations(graph: Graph, matching: Sequence[tuple]) -> list[tuple]:
    """Pairs violating ``d'(qu, qv) <= d(u, v) <= 2 d'(qu, qv) + 1``."""
    quotient, qmap = matching_quotient(graph, matching)
    d = graph.all_pairs()
    dq = quotient.all_pairs()
    qi = np.array([quotient.index[qmap[lab]] for lab in graph.labels], dtype=np.int64)
    dq_lift = dq[np.ix_(qi, qi)]
    bad = (dq_lift > d) | (d > 2 * dq_lift + 1)
    return [(graph.labels[u], graph.labels[v]) for u, v in zip(*np.nonzero(bad))]


# -- coarse disjoint unions --------------------------------------------------


@dataclass
class CoarseUnion:
    """Finite coarse disjoint union: intra-component graph metrics, constant gaps between components."""

    components: list[Graph]
    indices: list[int]
    gaps: dict[tuple[int, int], int] = field(default_factory=dict)

    def distance(self, a: tuple, b: tuple) -> int:
        (i, u), (j, v) = a, b
        if i == j:
            return self.components[self.indices.index(i)].distance(u, v)
        return self.gaps[(min(i, j), max(i, j))]

    def component_distance(self, i: int, j: int) -> int:
        return 0 if i == j else self.gaps[(min(i, j), max(i, j))]

    def to_edgelist(self) -> str:
        lines = []
        for idx, g in zip(self.indices, self.components):
            for u, v, kind in g.edges:
                lines.append(f"{idx}|{vertex_label(g.labels[u])} {idx}|{vertex_label(g.labels[v])} {kind}")
        for (i, j), gap in sorted(self.gaps.items()):
            lines.append(f"# gap {i} {j} {gap}")
        return "\n".join(lines) + ("\n" if lines else "")


def _gap_rule(rule, diams: dict[int, int]) -> Callable[[int, int], int]:
    if callable(rule):
        return rule
    if rule == "sum":
        return lambda i, j: i + j
    if rule == "diam-sum":
        return lambda i, j: diams[i] + diams[j] + i + j
    raise ValueError(f"unknown gap rule {rule!r}")


def coarse_union(graphs: Sequence[Graph], gap_rule="sum", indices: Sequence[int] | None = None) -> CoarseUnion:
    graphs = list(graphs)
    indices = list(indices) if indices is not None else list(range(1, len(graphs) + 1))
    if len(indices) != len(graphs):
        raise ValueError("one index per component is required")
    diams = {i: g.diameter() for i, g in zip(indices, graphs)} if gap_rule == "diam-sum" else {}
    rule = _gap_rule(gap_rule, diams)
    gaps = {}
    for i, j in itertools.combinations(sorted(indices), 2):
        gaps[(i, j)] = int(rule(i, j))
    by_sum: dict[int, list[int]] = {}
    for (i, j), gap in gaps.items():
        if gap <= 0:
            raise GapNotDiverging(f"gap between {i} and {j} is {gap}")
        by_sum.setdefault(i + j, []).append(gap)
    sums = sorted(by_sum)
    for s0, s1 in zip(sums, sums[1:]):
        if max(by_sum[s0]) >= min(by_sum[s1]):
            raise GapNotDiverging(f"gap rule is not strictly increasing in n+m between sums {s0} and {s1}")
    return CoarseUnion(graphs, indices, gaps)


# -- fibre divergence ------------------------------------------------------


@dataclass
class FiberTable:
    levels: list[int]
    points: list[SurfacePoint]
    # (i, j) -> distances per level
    distances: dict[tuple[int, int], list[int]]

    def strictly_increasing(self, pair: tuple[int, int]) -> bool:
        d = self.distances[pair]
        return all(a < b for a, b in zip(d, d[1:]))

    def non_decreasing(self, pair: tuple[int, int]) -> bool:
        d = self.distances[pair]
        return all(a <= b for a, b in zip(d, d[1:]))

    def to_csv(self) -> str:
        rows = ["level,i,j,u,v,distance"]
        for (i, j), ds in sorted(self.distances.items()):
            for t, d in zip(self.levels, ds):
                rows.append(f"{t},{i},{j},{self.points[i]},{self.points[j]},{d}")
        return "\n".join(rows) + "\n"


def fiber_divergence(surface: Surface, k: int, points: Sequence[SurfacePoint], levels: Sequence[int]) -> FiberTable:
    """Warped distances between points of one covering-map fibre, level by level."""
    points = list(points)
    images = {covering_map(surface, p) for p in points}
    if len(images) > 1:
        raise FibreMismatch(f"points have different torus images: {sorted(images)}")
    levels = sorted(levels)
    table = FiberTable(levels, points, {pair: [] for pair in itertools.combinations(range(len(points)), 2)})
    if len(points) < 2:
        return table
    for t in levels:
        level = build_level(surface, k, t)
        for i in range(len(points)):
            dist = level.bfs(level.vertex(points[i]))
            for j in range(i + 1, len(points)):
                table.distances[(i, j)].append(int(dist[level.vertex(points[j])]))
    return table


def all_matchings(graph: Graph):
    """Every matching (as a list of label pairs) of the simple graph underlying ``graph``, empty one included."""
    pairs = sorted({(u, v) for u, v, _ in graph.edges if u != v})

    def rec(i: int, used: frozenset, chosen: list):
        if i == len(pairs):
            yield [(graph.labels[a], graph.labels[b]) for a, b in chosen]
            return
        yield from rec(i + 1, used, chosen)
        a, b = pairs[i]
        if a not in used and b not in used:
            yield from rec(i + 1, used | {a, b}, chosen + [pairs[i]])

    yield from rec(0, frozenset(), [])
