"""Origami (square-tiled) surfaces.

Squares are indexed ``0..m-1``.  The left side of square ``i`` is glued to the
right side of square ``sigma[i]`` and the top side of ``i`` to the bottom side
of ``tau[i]``.  Consequently stepping *right* out of square ``i`` lands in
``sigma^-1(i)`` and stepping *up* lands in ``tau(i)``.

Points are stored with half-open coordinates ``x, y in [0, 1)`` so every point
of the surface has exactly one representative, except the cone points at
square corners; those are canonicalised to the smallest square index of their
corner class.  All arithmetic is exact (``fractions.Fraction``).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import InvalidGenus, InvalidPermutation, NotTransitive

# corner slots of a closed square
BL, BR, TL, TR = range(4)


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``{0..m-1}`` stored as its image array."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection of 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(m))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def power(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        result = Permutation.identity(len(self))
        for _ in range(abs(e) % self.order()):
            result = base * result
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))


@dataclass(frozen=True)
class OrigamiDatum:
    m: int
    sigma: Permutation
    tau: Permutation

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "sigma": list(self.sigma.images), "tau": list(self.tau.images)})

    @classmethod
    def from_dict(cls, data: dict) -> "OrigamiDatum":
        return cls(int(data["m"]), Permutation(tuple(data["sigma"])), Permutation(tuple(data["tau"])))


class SurfacePoint(NamedTuple):
    square: int
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"{self.square}:{self.x.numerator}/{self.x.denominator}:{self.y.numerator}/{self.y.denominator}"


class TorusPoint(NamedTuple):
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Surface:
    datum: OrigamiDatum
    right_step: Permutation
    up_step: Permutation
    corner_classes: tuple[tuple[int, ...], ...]
    genus: int
    # square -> canonical square for its bottom-left corner
    corner_rep: tuple[int, ...] = field(repr=False)
    # canonical square -> closed-square corner tuples (square, slot) of that cone point
    corner_tuples: dict = field(repr=False, compare=False, hash=False)
    # row i lists the squares reached from i after 0, 1, ..., order-1 steps
    right_powers: tuple = field(repr=False, compare=False, hash=False, default=())
    up_powers: tuple = field(repr=False, compare=False, hash=False, default=())

    @property
    def m(self) -> int:
        return self.datum.m

    @property
    def is_torus(self) -> bool:
        return self.datum.m == 1

    def step_right(self, square: int, j: int) -> int:
        """Square reached after ``j`` unit steps to the right (negative ``j`` = left)."""
        row = self.right_powers[square]
        return row[j % len(row)]

    def step_up(self, square: int, j: int) -> int:
        row = self.up_powers[square]
        return row[j % len(row)]

    def canonical(self, square: int, x: Fraction, y: Fraction) -> SurfacePoint:
        """Reduce arbitrary real coordinates in ``square`` to the canonical representative."""
        x = Fraction(x)
        y = Fraction(y)
        jx = math.floor(x)
        jy = math.floor(y)
        if jx:
            square = self.step_right(square, jx)
            x -= jx
        if jy:
            square = self.step_up(square, jy)
            y -= jy
        if x == 0 and y == 0:
            square = self.corner_rep[square]
        return SurfacePoint(square, x, y)

    def is_canonical(self, p: SurfacePoint) -> bool:
        return (
            0 <= p.square < self.m
            and 0 <= p.x < 1
            and 0 <= p.y < 1
            and (p.x != 0 or p.y != 0 or self.corner_rep[p.square] == p.square)
        )


def _power_rows(perm: Permutation) -> tuple[tuple[int, ...], ...]:
    order = perm.order()
    rows = []
    for i in range(len(perm)):
        row = [i]
        for _ in range(order - 1):
            row.append(perm(row[-1]))
        rows.append(tuple(row))
    return tuple(rows)


def _is_transitive(m: int, sigma: Permutation, tau: Permutation) -> bool:
    ds = DisjointSet(range(m))
    for i in range(m):
        ds.merge(i, sigma(i))
        ds.merge(i, tau(i))
    return ds.n_subsets == 1


def corner_union_find(m: int, sigma: Permutation, tau: Permutation) -> list[set[tuple[int, int]]]:
    """Identify the 4m closed-square corners under the four side gluings."""
    ds = DisjointSet((i, c) for i in range(m) for c in range(4))
    for i in range(m):
        # left side of i = right side of sigma(i)
        ds.merge((i, BL), (sigma(i), BR))
        ds.merge((i, TL), (sigma(i), TR))
        # top side of i = bottom side of tau(i)
        ds.merge((i, TL), (tau(i), BL))
        ds.merge((i, TR), (tau(i), BR))
    return [set(s) for s in ds.subsets()]


def commutator_cycle_count(datum: OrigamiDatum) -> int:
    """Number of cycles of tau sigma^-1 tau^-1 sigma, an independent corner count."""
    s, t = datum.sigma, datum.tau
    return len((t * s.inverse() * t.inverse() * s).cycles())


def validate_datum(m: int, sigma, tau) -> Surface:
    """Build a :class:`Surface` from an origami datum, checking transitivity."""
    if m < 1:
        raise InvalidPermutation("m must be positive")
    sigma = sigma if isinstance(sigma, Permutation) else Permutation(tuple(sigma))
    tau = tau if isinstance(tau, Permutation) else Permutation(tuple(tau))
    if len(sigma) != m or len(tau) != m:
        raise InvalidPermutation(f"permutations must act on {m} points")
    if not _is_transitive(m, sigma, tau):
        raise NotTransitive("<sigma, tau> has more than one orbit")
    classes = corner_union_find(m, sigma, tau)
    corner_rep = [0] * m
    corner_classes = []
    corner_tuples = {}
    for cls in classes:
        squares = sorted(i for i, c in cls if c == BL)
        rep = squares[0]
        for i in squares:
            corner_rep[i] = rep
        corner_classes.append(tuple(squares))
        corner_tuples[rep] = tuple(sorted(cls))
    corner_classes.sort()
    n_corners = len(corner_classes)
    twice_genus = 2 + m - n_corners
    if twice_genus % 2 or twice_genus < 2:
        raise InvalidPermutation(f"inconsistent corner count {n_corners} for m={m}")
    return Surface(
        datum=OrigamiDatum(m, sigma, tau),
        right_step=sigma.inverse(),
        up_step=tau,
        corner_classes=tuple(corner_classes),
        genus=twice_genus // 2,
        corner_rep=tuple(corner_rep),
        corner_tuples=corner_tuples,
        right_powers=_power_rows(sigma.inverse()),
        up_powers=_power_rows(tau),
    )


def surface_from_datum(datum: OrigamiDatum) -> Surface:
    return validate_datum(datum.m, datum.sigma, datum.tau)


def staircase(g: int) -> OrigamiDatum:
    """Staircase of genus ``g`` on ``2g-1`` squares, numbered bottom-up."""
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    m = 2 * g - 1
    sigma = Permutation.from_cycles(m, [(i, i + 1) for i in range(0, m - 1, 2)])
    tau = Permutation.from_cycles(m, [(i, i + 1) for i in range(1, m - 1, 2)])
    return OrigamiDatum(m, sigma, tau)


def torus() -> Surface:
    return surface_from_datum(staircase(1))


def genus(surface: Surface) -> int:
    """Genus from the Euler characteristic V - E + F with V corners, E = 2m, F = m."""
    chi = len(surface.corner_classes) - 2 * surface.m + surface.m
    return (2 - chi) // 2


def covering_map(surface: Surface, p: SurfacePoint) -> TorusPoint:
    return TorusPoint(p.x, p.y)


def fibre(surface: Surface, q: TorusPoint) -> set[SurfacePoint]:
    x, y = Fraction(q.x), Fraction(q.y)
    return {surface.canonical(i, x, y) for i in range(surface.m)}


def grid_points(surface: Surface, n: int) -> list[SurfacePoint]:
    """All canonical points with coordinates in ``(1/n)Z``, sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [
        SurfacePoint(i, Fraction(a, n), Fraction(b, n))
        for i, a, b in grid_triples(surface, n)
    ]


def grid_triples(surface: Surface, n: int) -> list[tuple[int, int, int]]:
    """Integer form ``(square, a, b)`` of :func:`grid_points` (point ``(a/n, b/n)``)."""
    out = []
    for i in range(surface.m):
        for a in range(n):
            for b in range(n):
                if a == 0 and b == 0 and surface.corner_rep[i] != i:
                    continue
                out.append((i, a, b))
    return out


def grid_canonical(surface: Surface, n: int, sq: int, a: int, b: int) -> tuple[int, int, int]:
    """Integer analogue of :meth:`Surface.canonical` at denominator ``n``."""
    ja, a = divmod(a, n)
    jb, b = divmod(b, n)
    if ja:
        sq = surface.step_right(sq, ja)
    if jb:
        sq = surface.step_up(sq, jb)
    if a == 0 and b == 0:
        sq = surface.corner_rep[sq]
    return sq, a, b


def _corner_rays(surface: Surface, n: int, rep: int) -> list[tuple[int, int, int]]:
    rays = []
    for i, slot in surface.corner_tuples[rep]:
        if slot == BL:
            rays += [(i, 1, 0), (i, 0, 1)]
        elif slot == BR:
            rays += [(i, n - 1, 0), (i, n, 1)]
        elif slot == TL:
            rays += [(i, 1, n), (i, 0, n - 1)]
        else:
            rays += [(i, n - 1, n), (i, n, n - 1)]
    return rays


def grid_neighbors(surface: Surface, n: int, p: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """Distinct grid neighbours of the integer grid point ``p`` (excluding ``p``)."""
    sq, a, b = p
    if a == 0 and b == 0:
        raw = _corner_rays(surface, n, surface.corner_rep[sq])
    else:
        raw = [(sq, a + 1, b), (sq, a - 1, b), (sq, a, b + 1), (sq, a, b - 1)]
    out = set()
    for q in raw:
        q = grid_canonical(surface, n, *q)
        if q != p:
            out.add(q)
    return sorted(out)


def metric_neighbors(surface: Surface, n: int, p: SurfacePoint) -> list[SurfacePoint]:
    """Grid neighbours of ``p`` at spacing ``1/n``, crossing square sides via the gluing.

    Regular points have at most four neighbours.  A cone point is adjacent to
    the first grid point along every side emanating from it, so its degree is
    ``4 * (number of squares in its corner class)``.
    """
    trip = to_triple(p, n)
    return [from_triple(q, n) for q in grid_neighbors(surface, n, trip)]


def to_triple(p: SurfacePoint, n: int) -> tuple[int, int, int]:
    a = Fraction(p.x) * n
    b = Fraction(p.y) * n
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"{p} is not a grid point at denominator {n}")
    return p.square, int(a), int(b)


def from_triple(q: tuple[int, int, int], n: int) -> SurfacePoint:
    return SurfacePoint(q[0], Fraction(q[1], n), Fraction(q[2], n))


def surface_summary(surface: Surface) -> dict:
    return {
        "m": surface.m,
        "sigma": list(surface.datum.sigma.images),
        "tau": list(surface.datum.tau.images),
        "genus": surface.genus,
        "corner_classes": [list(c) for c in surface.corner_classes],
    }


def grid_csv(points: Sequence[SurfacePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["square", "xnum", "xden", "ynum", "yden"])
    for p in points:
        w.writerow([p.square, p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator])
    return buf.getvalue()


def parse_point(text: str) -> SurfacePoint:
    """Parse ``"sq:xnum/xden:ynum/yden"``."""
    sq, x, y = text.split(":")
    return SurfacePoint(int(sq), Fraction(x), Fraction(y))
