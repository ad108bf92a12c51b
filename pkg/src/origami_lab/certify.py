"""Independent replay of triviality certificates.

Nothing here reuses the search code in :mod:`origami_lab.pi1`: relators are
rewritten with plain list operations and distances come from a local BFS on
the raw edge list.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Sequence


@dataclass
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] + x == 0:
            out.pop()
        else:
            out.append(x)
    while len(out) >= 2 and out[0] + out[-1] == 0:
        out = out[1:-1]
    return out


def check_tietze_trace(n_generators: int, relators: Sequence[Sequence[int]], trace: Sequence[Sequence[int]]) -> Verdict:
    """Replay (relator index, generator) eliminations; every generator must disappear.

    Generators are numbered 0..n-1 and letters are +-(g+1).  Each step needs
    the named generator to occur exactly once in the current form of the
    named relator; solving for it and substituting is a Tietze move, so an
    empty generating set proves the presented group trivial.
    """
    rels = [_reduce(list(r)) for r in relators]
    # generator -> relators mentioning it, so a step only rewrites those
    occ: dict[int, set[int]] = {g: set() for g in range(n_generators)}
    for rid, r in enumerate(rels):
        for x in r:
            occ[abs(x) - 1].add(rid)
    remaining = set(range(n_generators))

    def inv(w):
        return [-x for x in reversed(w)]

    for step, (rid, g) in enumerate(trace):
        if not 0 <= rid < len(rels):
            return Verdict(False, f"step {step}: no relator {rid}")
        if g not in remaining:
            return Verdict(False, f"step {step}: generator {g} already eliminated")
        word = rels[rid]
        hits = [i for i, x in enumerate(word) if abs(x) == g + 1]
        if len(hits) != 1:
            return Verdict(False, f"step {step}: generator {g} occurs {len(hits)} times in relator {rid}")
        i = hits[0]
        # before . g^e . after = 1  =>  g^e = before^-1 after^-1
        value = inv(word[:i]) + inv(word[i + 1:])
        if word[i] < 0:
            value = inv(value)
        sub = {g + 1: value, -(g + 1): inv(value)}
        for j in occ.pop(g):
            old = {abs(x) - 1 for x in rels[j]}
            rels[j] = _reduce([y for x in rels[j] for y in (sub[x] if abs(x) == g + 1 else [x])])
            new = {abs(x) - 1 for x in rels[j]}
            for h in old - new - {g}:
                occ[h].discard(j)
            for h in new - old:
                occ[h].add(j)
        remaining.discard(g)
    if remaining:
        return Verdict(False, f"{len(remaining)} generators survive")
    return Verdict(True)


def check_presentation_certificate(pres, result) -> Verdict:
    if result.status != "Trivial":
        return Verdict(False, "not a Trivial certificate")
    return check_tietze_trace(pres.n_generators, pres.relators, result.trace)


class _Balls:
    def __init__(self, n: int, edges: Sequence[tuple[int, int]], r: int):
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            if u != v:
                self.adj[u].add(v)
                self.adj[v].add(u)
        self.r = r
        self.cache: dict[int, set[int]] = {}

    def ball(self, u: int) -> set[int]:
        if u not in self.cache:
            seen = {u}
            frontier = deque([(u, 0)])
            while frontier:
                x, d = frontier.popleft()
                if d == self.r:
                    continue
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        frontier.append((y, d + 1))
            self.cache[u] = seen
        return self.cache[u]

    def close(self, u: int, v: int) -> bool:
        return v in self.ball(u)


def replay_homotopy(n: int, edges, r: int, loop: Sequence[int], steps: Sequence[dict]) -> Verdict:
    """Replay an r-homotopy on vertex indices; must end at a constant loop at the base."""
    balls = _Balls(n, [(u, v) for u, v, *_ in edges], r)
    cur = list(loop)
    if not cur:
        return Verdict(False, "empty loop")
    base = cur[0]

    def is_loop(lp):
        return lp[0] == base and lp[-1] == base and all(balls.close(a, b) for a, b in zip(lp, lp[1:]))

    if not is_loop(cur):
        return Verdict(False, "input is not an r-loop at its first point")
    for k, st in enumerate(steps):
        op = st["op"]
        if op == "move":
            new = list(cur)
            for i, old, val in st["changes"]:
                if not 0 <= i < len(cur) or cur[i] != old:
                    return Verdict(False, f"step {k}: position {i} does not hold {old}")
                if not balls.close(old, val):
                    return Verdict(False, f"step {k}: {old} -> {val} is not an r-move")
                new[i] = val
            cur = new
        elif op == "extend":
            cur = [base] + cur if st["side"] == "start" else cur + [base]
        elif op == "retract":
            if len(cur) < 2:
                return Verdict(False, f"step {k}: cannot retract a single point")
            pair = cur[:2] if st["side"] == "start" else cur[-2:]
            if pair != [base, base]:
                return Verdict(False, f"step {k}: retraction of a non-trivial end")
            cur = cur[1:] if st["side"] == "start" else cur[:-1]
        else:
            return Verdict(False, f"step {k}: unknown op {op!r}")
        if not is_loop(cur):
            return Verdict(False, f"step {k}: intermediate is not an r-loop")
    if any(x != base for x in cur):
        return Verdict(False, "final loop is not constant")
    return Verdict(True)


def replay_homotopy_json(graph, r: int, loop_labels: Sequence, trace_json: str) -> Verdict:
    """Replay a serialised trace whose points are written as ``str(label)``."""
    by_name = {str(lab): i for i, lab in enumerate(graph.labels)}
    data = json.loads(trace_json)
    if data.get("status") != "Contracted":
        return Verdict(False, "not a contraction certificate")
    steps = []
    for st in data["trace"]:
        if st["op"] == "move":
            steps.append({"op": "move", "changes": [[i, by_name[str(a)], by_name[str(b)]] for i, a, b in st["changes"]]})
        else:
            steps.append(st)
    loop = [by_name[str(x)] for x in loop_labels]
    return replay_homotopy(graph.n, graph.edges, r, loop, steps)
