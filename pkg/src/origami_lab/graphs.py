"""Finite multigraphs with labelled vertices and tagged edges.

One container serves the level graphs, the classical families and the
small test graphs.  Multiplicities and loops are kept as given; callers that
want the simple graph use :meth:`Graph.simple`.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import Disconnected, VertexNotFound


@dataclass
class Graph:
    labels: list
    # (u, v, kind) per edge copy, u <= v, stored with multiplicity
    edges: list[tuple[int, int, str]] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        self._adj = None

    @classmethod
    def from_edges(cls, labels: Sequence, pairs: Iterable[tuple], kind: str = "E", name: str = "") -> "Graph":
        labels = list(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for e in pairs:
            u, v = index[e[0]], index[e[1]]
            k = e[2] if len(e) > 2 else kind
            edges.append((min(u, v), max(u, v), k))
        return cls(labels, edges, name)

    @property
    def n(self) -> int:
        return len(self.labels)

    def vertex(self, label) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise VertexNotFound(f"{label!r} is not a vertex") from None

    def edge_counter(self) -> Counter:
        """Multiset of unordered vertex pairs (kinds ignored)."""
        return Counter((u, v) for u, v, _ in self.edges)

    def adjacency(self) -> sp.csr_matrix:
        """Symmetric adjacency; a loop contributes 2 to its diagonal entry."""
        if self._adj is None:
            if self.edges:
                e = np.array([(u, v) for u, v, _ in self.edges], dtype=np.int64)
                rows = np.concatenate([e[:, 0], e[:, 1]])
                cols = np.concatenate([e[:, 1], e[:, 0]])
            else:
                rows = cols = np.zeros(0, dtype=np.int64)
            data = np.ones(len(rows), dtype=np.float64)
            self._adj = sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))
            self._adj.sum_duplicates()
        return self._adj

    def degrees(self) -> np.ndarray:
        """Degrees counting multiplicity, loops twice."""
        return np.asarray(self.adjacency().sum(axis=1)).ravel()

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def neighbor_lists(self) -> list[list[int]]:
        """Distinct non-loop neighbours of each vertex, sorted."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return [sorted(s) for s in nbrs]

    def simple(self) -> "Graph":
        """Drop loops and collapse parallel edges, keeping the first kind seen."""
        seen = {}
        for u, v, k in self.edges:
            if u != v and (u, v) not in seen:
                seen[(u, v)] = k
        return Graph(list(self.labels), [(u, v, k) for (u, v), k in seen.items()], self.name)

    def bfs(self, source: int, cutoff: int | None = None) -> np.ndarray:
        """Hop distances from ``source``; -1 marks unreachable (or beyond ``cutoff``)."""
        nbrs = self._nbrs()
        dist = np.full(self.n, -1, dtype=np.int64)
        dist[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            du = dist[u]
            if cutoff is not None and du >= cutoff:
                continue
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    q.append(w)
        return dist

    def _nbrs(self) -> list[list[int]]:
        if getattr(self, "_nbr_cache", None) is None:
            self._nbr_cache = self.neighbor_lists()
        return self._nbr_cache

    def distance(self, u, v) -> int:
        iu, iv = self.vertex(u), self.vertex(v)
        d = int(self.bfs(iu)[iv])
        if d < 0:
            raise Disconnected(f"{u!r} and {v!r} lie in different components")
        return d

    def all_pairs(self) -> np.ndarray:
        return np.stack([self.bfs(i) for i in range(self.n)]) if self.n else np.zeros((0, 0), dtype=np.int64)

    def is_connected(self) -> bool:
        return self.n == 0 or bool((self.bfs(0) >= 0).all())

    def diameter(self) -> int:
        if self.n == 0:
            return 0
        d = self.all_pairs()
        if (d < 0).any():
            raise Disconnected("graph is not connected")
        return int(d.max())

    def kind_counts(self) -> dict[str, int]:
        return dict(sorted(Counter(k for _, _, k in self.edges).items()))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def torus_grid_graph(n: int) -> Graph:
    """Discrete torus Z_n x Z_n with nearest-neighbour edges (collapsed for n <= 2)."""
    labels = [(x, y) for x in range(n) for y in range(n)]
    pairs = set()
    for x, y in labels:
        for q in (((x + 1) % n, y), (x, (y + 1) % n)):
            if q != (x, y):
                pairs.add(tuple(sorted([(x, y), q])))
    return Graph.from_edges(labels, sorted(pairs), name=f"T{n}")


def default_label(label) -> str:
    if isinstance(label, tuple):
        return ":".join(default_label(x) for x in label)
    return str(label)


def to_edgelist(graph: Graph, fmt: Callable[[Hashable], str] = default_label) -> str:
    """One line ``u v KIND`` per edge copy."""
    return "".join(f"{fmt(graph.labels[u])} {fmt(graph.labels[v])} {k}\n" for u, v, k in graph.edges)


_DOT_COLORS = {"Metric": "black", "E": "black"}
_WARP_COLORS = ["red", "blue", "darkgreen", "orange", "purple", "brown"]


def to_dot(graph: Graph, fmt: Callable[[Hashable], str] = default_label) -> str:
    kinds = sorted({k for _, _, k in graph.edges})
    colors = dict(_DOT_COLORS)
    extra = [k for k in kinds if k not in colors]
    for i, k in enumerate(extra):
        colors[k] = _WARP_COLORS[i % len(_WARP_COLORS)]
    lines = [f'graph "{graph.name or "G"}" {{']
    for lab in graph.labels:
        lines.append(f'  "{fmt(lab)}";')
    for u, v, k in graph.edges:
        lines.append(f'  "{fmt(graph.labels[u])}" -- "{fmt(graph.labels[v])}" [label="{k}", color={colors[k]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
