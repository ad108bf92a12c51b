"""Discrete fundamental groups at scale r.

The r-scale complex of a finite metric space has an edge between points at
distance <= r, and a 2-cell for every 3-cycle and every 4-cycle of that edge
graph.  A 4-cycle with a chord is the sum of two triangles, so by default only
chordless 4-cycles are materialised; this changes neither pi_1 nor H_1.

``pi1_presentation`` gives the spanning-tree presentation, ``h1`` computes
homology from the boundary matrices, and ``try_trivialize`` runs bounded
Tietze eliminations that either empty the generating set (with a replayable
trace) or give up.  ``contract_loop`` works directly with r-loops and
r-homotopies.
"""
from __future__ import annotations

import heapq
import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import Disconnected, NotAnRLoop
from .graphs import Graph
from .intlinalg import sparse_invariant_factors


@dataclass
class ScaleComplex:
    labels: list
    r: int
    base: int
    edges: list[tuple[int, int]]  # u < v
    triangles: list[tuple[int, int, int]]
    squares: list[tuple[int, int, int, int]]  # closed walk u-a-v-b-u
    neighbors: list[set] = field(repr=False, default_factory=list)

    def __post_init__(self):
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        if not self.neighbors:
            nb = [set() for _ in self.labels]
            for u, v in self.edges:
                nb[u].add(v)
                nb[v].add(u)
            self.neighbors = nb

    @property
    def n(self) -> int:
        return len(self.labels)

    def cells(self) -> list[tuple[int, ...]]:
        return list(self.triangles) + list(self.squares)

    def is_connected(self) -> bool:
        return len(_bfs_tree(self.neighbors, self.base)[1]) == self.n

    def summary(self) -> dict:
        return {
            "vertices": self.n,
            "r": self.r,
            "edges": len(self.edges),
            "triangles": len(self.triangles),
            "squares": len(self.squares),
        }


def r_neighborhoods(graph: Graph, r: int) -> list[set[int]]:
    out = []
    for i in range(graph.n):
        d = graph.bfs(i, cutoff=r)
        out.append(set(np.flatnonzero((d > 0) & (d <= r)).tolist()))
    return out


def build_scale_complex(graph: Graph, r: int, base=None, chorded_squares: bool = False) -> ScaleComplex:
    """Triangle-and-square filled r-scale complex of the graph metric."""
    if r < 1:
        raise ValueError("r must be >= 1")
    nb = r_neighborhoods(graph, r)
    base_index = 0 if base is None else (base if isinstance(base, (int, np.integer)) else graph.vertex(base))
    edges = sorted((u, v) for u in range(graph.n) for v in nb[u] if u < v)
    triangles = []
    for u, v in edges:
        for w in sorted(nb[u] & nb[v]):
            if w > v:
                triangles.append((u, v, w))
    squares = []
    for u in range(graph.n):
        # opposite corner v of a 4-cycle u-a-v-b with u the smallest vertex
        two_step: dict[int, list[int]] = {}
        for a in sorted(nb[u]):
            if a < u:
                continue
            for v in nb[a]:
                if v > u and v != a:
                    two_step.setdefault(v, []).append(a)
        for v in sorted(two_step):
            mids = two_step[v]
            if len(mids) < 2:
                continue
            if not chorded_squares and v in nb[u]:
                continue
            for a, b in itertools.combinations(sorted(mids), 2):
                if not chorded_squares and b in nb[a]:
                    continue
                squares.append((u, a, v, b))
    return ScaleComplex(list(graph.labels), r, int(base_index), edges, triangles, squares, nb)


def _bfs_tree(neighbors: Sequence[set], root: int) -> tuple[dict, list]:
    parent = {root: None}
    order = [root]
    q = deque([root])
    while q:
        u = q.popleft()
        for w in sorted(neighbors[u]):
            if w not in parent:
                parent[w] = u
                order.append(w)
                q.append(w)
    return parent, order


def _cycle_edges(cell: Sequence[int]):
    """Directed edges of the closed walk through ``cell``."""
    return list(zip(cell, list(cell[1:]) + [cell[0]]))


# -- homology -------------------------------------------------------------


@dataclass
class H1Summary:
    betti1: int
    torsion: list[int]

    def is_trivial(self) -> bool:
        return self.betti1 == 0 and not self.torsion


def h1(cx: ScaleComplex) -> H1Summary:
    """H_1 over Z from the boundary matrices: rank ker d1 - rank im d2, torsion from SNF(d2)."""
    components = 0
    seen: set[int] = set()
    for v in range(cx.n):
        if v not in seen:
            components += 1
            seen.update(_bfs_tree(cx.neighbors, v)[1])
    rank_d1 = cx.n - components
    cycle_rank = len(cx.edges) - rank_d1
    rows = []
    for cell in cx.cells():
        row: dict[int, int] = {}
        for a, b in _cycle_edges(cell):
            e = cx.edge_index[(min(a, b), max(a, b))]
            row[e] = row.get(e, 0) + (1 if a < b else -1)
        rows.append({k: v for k, v in row.items() if v})
    elim = sparse_invariant_factors(rows, len(cx.edges), max_rank=cycle_rank)
    return H1Summary(cycle_rank - elim.rank, elim.torsion)


# -- presentations ----------------------------------------------------------


@dataclass
class Presentation:
    generators: list[tuple[int, int]]  # non-tree edges (u, v), u < v
    relators: list[tuple[int, ...]]  # letters +-(g+1)
    tree_parent: dict = field(repr=False, default_factory=dict)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def to_json(self) -> str:
        return json.dumps({"generators": self.generators, "relators": [list(r) for r in self.relators]})


def free_reduce(word: Sequence[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word: Sequence[int]) -> list[int]:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def path_word(walk: Sequence[int], gen_index: dict) -> list[int]:
    """Generator word of a closed walk; tree edges read as the identity."""
    word = []
    for a, b in zip(walk, walk[1:]):
        key = (min(a, b), max(a, b))
        g = gen_index.get(key)
        if g is not None:
            word.append((g + 1) if a < b else -(g + 1))
    return word


def pi1_presentation(cx: ScaleComplex) -> Presentation:
    parent, order = _bfs_tree(cx.neighbors, cx.base)
    if len(order) != cx.n:
        raise Disconnected("the 1-skeleton is not connected")
    tree = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    gens = [e for e in cx.edges if e not in tree]
    gen_index = {e: i for i, e in enumerate(gens)}
    relators = []
    for cell in cx.cells():
        relators.append(tuple(free_reduce(path_word(list(cell) + [cell[0]], gen_index))))
    return Presentation(gens, relators, parent)


def abelianized_h1(pres: Presentation) -> H1Summary:
    """Homology as the abelianisation of the presentation (second, independent route)."""
    rows = []
    for rel in pres.relators:
        row: dict[int, int] = {}
        for x in rel:
            g = abs(x) - 1
            row[g] = row.get(g, 0) + (1 if x > 0 else -1)
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    elim = sparse_invariant_factors(rows, pres.n_generators)
    return H1Summary(pres.n_generators - elim.rank, elim.torsion)


@dataclass
class TrivializeResult:
    status: str  # "Trivial" or "Unknown"
    trace: list[tuple[int, int]]  # (relator index, eliminated generator)
    steps: int
    remaining_generators: int

    @property
    def trivial(self) -> bool:
        return self.status == "Trivial"

    def to_json(self) -> str:
        return json.dumps({"status": self.status, "trace": self.trace, "steps": self.steps})


def try_trivialize(pres: Presentation, budget: int = 10_000_000, max_substitution: int = 8) -> TrivializeResult:
    """Tietze eliminations: solve a relator for a generator occurring once in it, substitute everywhere.

    Short relators go first (length 1 kills a generator, length 2 identifies
    two).  Longer substitutions of length up to ``max_substitution`` are tried
    only when no short relator remains.  ``budget`` caps the number of
    letters rewritten.  Never claims non-triviality.
    """
    rels = [cyclic_reduce(r) for r in pres.relators]
    occ: dict[int, set[int]] = {g: set() for g in range(pres.n_generators)}
    for i, r in enumerate(rels):
        for x in r:
            occ[abs(x) - 1].add(i)
    alive = set(range(pres.n_generators))
    trace: list[tuple[int, int]] = []
    spent = 0
    heap = [(len(r), i) for i, r in enumerate(rels) if r]
    heapq.heapify(heap)

    def solvable(r):
        counts: dict[int, int] = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        singles = [g for g, c in counts.items() if c == 1]
        return min(singles) - 1 if singles else None

    while alive and spent <= budget:
        chosen = None
        deferred = []
        while heap:
            length, i = heapq.heappop(heap)
            r = rels[i]
            if len(r) != length or not r:
                continue  # stale entry
            g = solvable(r)
            if g is None:
                continue
            if length - 1 > max_substitution:
                deferred.append((length, i))
                break
            chosen = (i, g)
            break
        for item in deferred:
            heapq.heappush(heap, item)
        if chosen is None:
            break
        i, g = chosen
        r = rels[i]
        pos = next(j for j, x in enumerate(r) if abs(x) - 1 == g)
        rotated = r[pos:] + r[:pos]
        sign = 1 if rotated[0] > 0 else -1
        rest = rotated[1:]
        # g^sign * rest = 1  =>  g = rest^-1 (sign=+1) or g = rest (sign=-1)
        replacement = [-x for x in reversed(rest)] if sign == 1 else list(rest)
        trace.append((i, g))
        alive.discard(g)
        for j in sorted(occ[g]):
            old = rels[j]
            new = []
            for x in old:
                if abs(x) - 1 == g:
                    new.extend(replacement if x > 0 else [-y for y in reversed(replacement)])
                else:
                    new.append(x)
            new = cyclic_reduce(new)
            spent += len(new)
            for x in old:
                occ[abs(x) - 1].discard(j)
            for x in new:
                occ[abs(x) - 1].add(j)
            rels[j] = new
            if new:
                heapq.heappush(heap, (len(new), j))
        occ[g] = set()
    status = "Trivial" if not alive else "Unknown"
    return TrivializeResult(status, trace, spent, len(alive))


# -- loops and r-homotopies ---------------------------------------------------


class RMetric:
    """Truncated graph distances at scale r, computed lazily per vertex."""

    def __init__(self, graph: Graph, r: int):
        self.graph = graph
        self.r = r
        self._balls: dict[int, dict[int, int]] = {}

    def ball(self, u: int) -> dict[int, int]:
        b = self._balls.get(u)
        if b is None:
            d = self.graph.bfs(u, cutoff=self.r)
            idx = np.flatnonzero(d >= 0)
            b = dict(zip(idx.tolist(), d[idx].tolist()))
            self._balls[u] = b
        return b

    def close(self, u: int, v: int) -> bool:
        return v in self.ball(u)


def is_r_loop(metric: RMetric, loop: Sequence[int], base: int) -> bool:
    if not loop or loop[0] != base or loop[-1] != base:
        return False
    return all(metric.close(a, b) for a, b in zip(loop, loop[1:]))


class _Recorder:
    """Applies macro rewrites to a loop and records the elementary steps."""

    def __init__(self, loop: list[int], base: int):
        self.loop = list(loop)
        self.base = base
        self.steps: list[dict] = []

    def move(self, changes: dict[int, int]):
        self.steps.append({"op": "move", "changes": [[i, self.loop[i], v] for i, v in sorted(changes.items())]})
        for i, v in changes.items():
            self.loop[i] = v

    def extend(self, side: str):
        self.steps.append({"op": "extend", "side": side})
        if side == "start":
            self.loop.insert(0, self.base)
        else:
            self.loop.append(self.base)

    def retract(self, side: str):
        self.steps.append({"op": "retract", "side": side})
        if side == "start":
            self.loop.pop(0)
        else:
            self.loop.pop()

    def unstutter(self, i: int):
        """Remove position i+1 given loop[i] == loop[i+1]."""
        n = len(self.loop) - 1
        if i == 0:
            self.retract("start")
            return
        for j in range(i + 1, n):
            self.move({j: self.loop[j + 1]})
        self.retract("end")

    def stutter(self, i: int):
        """Duplicate position i."""
        self.extend("end")
        n = len(self.loop) - 2
        for j in range(n, i, -1):
            self.move({j: self.loop[j - 1]})

    def shortcut(self, i: int):
        """Drop interior point i (its neighbours are r-close)."""
        self.move({i: self.loop[i + 1]})
        self.unstutter(i)

    def flip(self, i: int, w: int, metric: RMetric):
        """Replace interior point i by w (w r-close to both neighbours of i)."""
        if metric.close(self.loop[i], w):
            self.move({i: w})
            return
        self.stutter(i - 1)
        # positions: i-1, i (dup of i-1), i+1 (old x_i), i+2 (x_{i+1})
        self.move({i: w, i + 1: self.loop[i + 2]})
        self.unstutter(i + 1)


@dataclass
class ContractResult:
    status: str  # "Contracted" or "Unknown"
    trace: list[dict]
    expansions: int

    def to_json(self, labels: Sequence | None = None) -> str:
        def lab(x):
            return str(labels[x]) if labels is not None else x

        out = []
        for s in self.trace:
            if s["op"] == "move":
                out.append({"op": "move", "changes": [[i, lab(a), lab(b)] for i, a, b in s["changes"]]})
            else:
                out.append(dict(s))
        return json.dumps({"status": self.status, "trace": out})


def _normalize(loop: Sequence[int]) -> tuple[int, ...]:
    out = [loop[0]]
    for x in loop[1:]:
        if x != out[-1]:
            out.append(x)
    return tuple(out)


def _greedy_shortcuts(loop: Sequence[int], metric: RMetric) -> tuple[list, list[tuple[str, int]]]:
    """Repeatedly drop interior points whose neighbours are r-close; returns loop and ops."""
    loop = list(loop)
    ops = []
    changed = True
    while changed:
        changed = False
        i = 1
        while i < len(loop) - 1:
            if loop[i] == loop[i - 1]:
                ops.append(("unstutter", i - 1))
                loop.pop(i)
                changed = True
                continue
            if metric.close(loop[i - 1], loop[i + 1]):
                ops.append(("shortcut", i))
                loop.pop(i)
                changed = True
                continue
            i += 1
        if len(loop) >= 2 and loop[-2] == loop[-1]:
            ops.append(("unstutter", len(loop) - 2))
            loop.pop()
            changed = True
    return loop, ops


def _as_index(graph: Graph, x) -> int:
    """Labels are looked up first; bare ints are indices only if they are not labels."""
    try:
        return graph.vertex(x)
    except Exception:
        if isinstance(x, (int, np.integer)) and 0 <= x < graph.n:
            return int(x)
        raise


def contract_loop(graph: Graph, r: int, loop: Sequence, budget: int = 20_000, base=None) -> ContractResult:
    """Search for an r-homotopy from ``loop`` to the constant loop.

    ``loop`` is a sequence of vertex labels (or indices).  Rewrites are
    shortcuts (drop a point whose neighbours are r-close) and square flips
    (replace a point by the fourth corner of a 4-cycle of r-close points),
    explored best-first by (length, total distance to the base).  Every
    rewrite is recorded as elementary r-homotopy steps: pointwise r-close
    moves of a fixed-length loop and trivial extensions at the base point.
    """
    idx = [_as_index(graph, x) for x in loop]
    b = idx[0] if base is None else _as_index(graph, base)
    metric = RMetric(graph, r)
    if not is_r_loop(metric, idx, b):
        raise NotAnRLoop("input is not an r-loop at the base point")
    dist_to_base = graph.bfs(b)
    rec = _Recorder(idx, b)
    _radial_phase(rec, graph, metric, dist_to_base)
    if all(x == b for x in rec.loop):
        return ContractResult("Contracted", rec.steps, 0)
    rec_ops: dict[tuple, tuple] = {}

    def potential(lp):
        return (len(lp), int(sum(dist_to_base[x] for x in lp)))

    start, ops = _greedy_shortcuts(rec.loop, metric)
    start = tuple(start)
    rec_ops[start] = (None, ops)
    heap = [(potential(start), start)]
    seen = {start}
    expansions = 0
    goal = None
    while heap and expansions < budget:
        _, cur = heapq.heappop(heap)
        if all(x == b for x in cur):
            goal = cur
            break
        expansions += 1
        for i in range(1, len(cur) - 1):
            prev, nxt = cur[i - 1], cur[i + 1]
            cands = set(metric.ball(prev)) & set(metric.ball(nxt))
            for w in sorted(cands):
                if w == cur[i]:
                    continue
                flipped = list(cur)
                flipped[i] = w
                nxt_loop, more = _greedy_shortcuts(flipped, metric)
                nxt_loop = tuple(nxt_loop)
                if nxt_loop in seen:
                    continue
                seen.add(nxt_loop)
                rec_ops[nxt_loop] = (cur, [("flip", i, w)] + more)
                heapq.heappush(heap, (potential(nxt_loop), nxt_loop))
    if goal is None:
        return ContractResult("Unknown", [], expansions)
    chain = []
    node = goal
    while node is not None:
        parent, ops = rec_ops[node]
        chain.append(ops)
        node = parent
    for ops in reversed(chain):
        for op in ops:
            if op[0] == "shortcut":
                rec.shortcut(op[1])
            elif op[0] == "unstutter":
                rec.unstutter(op[1])
            else:
                rec.flip(op[1], op[2], metric)
    return ContractResult("Contracted", rec.steps, expansions)


def _radial_phase(rec: _Recorder, graph: Graph, metric: RMetric, dist_to_base: np.ndarray) -> None:
    """Move every point one step towards the base at once, while the result stays an r-loop."""
    nbrs = graph.neighbor_lists()
    toward = {}
    while True:
        new = []
        for x in rec.loop:
            if dist_to_base[x] == 0:
                new.append(x)
                continue
            if x not in toward:
                toward[x] = min(w for w in nbrs[x] if dist_to_base[w] == dist_to_base[x] - 1)
            new.append(toward[x])
        if new == rec.loop or not all(metric.close(p, q) for p, q in zip(new, new[1:])):
            return
        rec.move({i: w for i, (v, w) in enumerate(zip(rec.loop, new)) if v != w})
