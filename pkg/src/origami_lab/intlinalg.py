"""Integer invariant factors of large sparse matrices.

Unit pivots are eliminated first (row operations only, then the pivot row and
column are dropped, which leaves the Smith form unchanged up to a leading 1).
Whatever survives is handed to a dense Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .errors import OverflowGuard

ENTRY_LIMIT = 1 << 4096


@dataclass
class Elimination:
    unit_pivots: int
    residual: list[dict[int, int]]
    residual_cols: list[int]
    factors: list[int] = field(default_factory=list)  # invariant factors of the residual, non-zero

    @property
    def rank(self) -> int:
        return self.unit_pivots + len(self.factors)

    @property
    def torsion(self) -> list[int]:
        return [abs(f) for f in self.factors if abs(f) != 1]


def _axpy(target: dict[int, int], coef: int, source: dict[int, int], col_rows: dict[int, set], rid: int) -> None:
    for c, v in source.items():
        nv = target.get(c, 0) + coef * v
        if nv:
            if abs(nv) > ENTRY_LIMIT:
                raise OverflowGuard("entry growth exceeded the arbitrary-precision budget")
            if c not in target:
                col_rows.setdefault(c, set()).add(rid)
            target[c] = nv
        elif c in target:
            del target[c]
            col_rows[c].discard(rid)


def sparse_invariant_factors(rows: list[dict[int, int]], ncols: int, max_rank: int | None = None) -> Elimination:
    """Invariant factors of the matrix whose non-zero rows are ``rows`` (col -> entry).

    ``max_rank`` allows an early exit once that many unit pivots are found
    (all invariant factors are then 1).
    """
    rows = [dict(r) for r in rows if r]
    alive = set(range(len(rows)))
    col_rows: dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    pivots = 0
    progress = True
    while progress and alive:
        progress = False
        for i in sorted(alive):
            if i not in alive:
                continue
            r = rows[i]
            if not r:
                alive.discard(i)
                continue
            units = [c for c, v in r.items() if v in (1, -1)]
            if not units:
                continue
            c = min(units, key=lambda cc: (len(col_rows[cc]), cc))
            p = r[c]
            for j in sorted(col_rows[c] - {i}):
                coef = -rows[j][c] * p
                _axpy(rows[j], coef, r, col_rows, j)
                if not rows[j]:
                    alive.discard(j)
            for cc in r:
                col_rows[cc].discard(i)
            alive.discard(i)
            rows[i] = {}
            pivots += 1
            progress = True
            if max_rank is not None and pivots >= max_rank:
                return Elimination(pivots, [], [], [])
    residual = [rows[i] for i in sorted(alive) if rows[i]]
    cols = sorted({c for r in residual for c in r})
    elim = Elimination(pivots, residual, cols)
    if residual:
        elim.factors = [f for f in dense_invariant_factors(residual, cols) if f != 0]
    return elim


def dense_invariant_factors(rows: list[dict[int, int]], cols: list[int]) -> list[int]:
    pos = {c: j for j, c in enumerate(cols)}
    mat = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            mat[i][pos[c]] = v
    dm = DomainMatrix([[ZZ(v) for v in row] for row in mat], (len(rows), len(cols)), ZZ)
    return [int(f) for f in invariant_factors(dm)]
