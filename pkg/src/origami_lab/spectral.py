"""Expansion certificates: exact Cheeger constants, spectral gaps, Z^2 expansion."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .eigen import combinatorial_laplacian, normalized_laplacian, smallest_deflated
from .errors import ContainsOrigin, Disconnected, TooLarge, ZeroFunction
from .graphs import Graph

CHUNK_BITS = 20


@dataclass(frozen=True)
class CheegerResult:
    h: Fraction
    witness: tuple  # vertex labels of a minimising set

    @property
    def boundary(self) -> int:
        return self.h.numerator * len(self.witness) // self.h.denominator


def _edge_arrays(graph: Graph):
    u, v, w = [], [], []
    for (a, b), mult in sorted(graph.edge_counter().items()):
        if a != b:
            u.append(a)
            v.append(b)
            w.append(mult)
    return np.array(u, dtype=np.uint64), np.array(v, dtype=np.uint64), np.array(w, dtype=np.int64)


def boundary_size(graph: Graph, subset: Iterable) -> int:
    """Edges (with multiplicity) leaving ``subset``; loops never count."""
    inside = {graph.vertex(x) for x in subset}
    return sum(1 for a, b, _ in graph.edges if (a in inside) != (b in inside))


def cheeger_exact(graph: Graph, max_vertices: int = 22) -> CheegerResult:
    """Minimum of |dA|/|A| over 1 <= |A| <= |V|/2 by enumerating all subsets."""
    n = graph.n
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the enumeration limit {max_vertices}")
    if n < 2:
        raise TooLarge("Cheeger constant needs at least two vertices")
    if not graph.is_connected():
        raise Disconnected("graph is not connected")
    eu, ev, ew = _edge_arrays(graph)
    half = n // 2
    best: Fraction | None = None
    best_mask = 0
    total = 1 << n
    step = 1 << min(CHUNK_BITS, n)
    one = np.uint64(1)
    for start in range(1, total, step):
        masks = np.arange(start, min(start + step, total), dtype=np.uint64)
        size = np.bitwise_count(masks).astype(np.int64)
        ok = size <= half
        if not ok.any():
            continue
        masks, size = masks[ok], size[ok]
        bnd = np.zeros(len(masks), dtype=np.int64)
        for a, b, w in zip(eu, ev, ew):
            bnd += w * (((masks >> a) ^ (masks >> b)) & one).astype(np.int64)
        ratio = bnd / size
        lo = ratio.min()
        cand = np.flatnonzero(ratio <= lo + 1e-9)
        for i in cand:
            f = Fraction(int(bnd[i]), int(size[i]))
            if best is None or f < best:
                best, best_mask = f, int(masks[i])
    witness = tuple(graph.labels[i] for i in range(n) if best_mask >> i & 1)
    return CheegerResult(best, witness)


def rayleigh(graph: Graph, f) -> float:
    """Sum over edges of |f(u) - f(v)|^2 divided by sum over vertices of |f(v)|^2."""
    if isinstance(f, dict):
        f = np.array([f[lab] for lab in graph.labels], dtype=complex)
    f = np.asarray(f)
    den = float(np.sum(np.abs(f) ** 2))
    if den == 0:
        raise ZeroFunction("f vanishes identically")
    num = sum(abs(f[a] - f[b]) ** 2 for a, b, _ in graph.edges)
    return float(num) / den


@dataclass
class SpectralReport:
    lambda2: float  # normalised Laplacian
    residual: float
    iterations: int
    degree_bound: int  # max degree with multiplicity, loops excluded
    rayleigh_gap: float | None = None  # combinatorial Laplacian lambda_2 (min Rayleigh quotient on 1-perp)

    @property
    def cheeger_lower(self) -> float:
        return self.lambda2 / 2

    @property
    def cheeger_upper(self) -> float | None:
        if self.rayleigh_gap is None:
            return None
        return math.sqrt(2 * self.degree_bound * max(self.rayleigh_gap, 0.0))

    def as_dict(self) -> dict:
        d = asdict(self)
        d["cheeger_lower"] = self.cheeger_lower
        d["cheeger_upper"] = self.cheeger_upper
        return d


def loopless_max_degree(graph: Graph) -> int:
    deg = np.zeros(graph.n, dtype=np.int64)
    for a, b, _ in graph.edges:
        if a != b:
            deg[a] += 1
            deg[b] += 1
    return int(deg.max()) if graph.n else 0


def lambda2(graph: Graph, tol: float = 1e-9, with_rayleigh: bool = True, max_iter: int = 100_000) -> SpectralReport:
    """Second-smallest eigenvalue of the normalised Laplacian (and of D - A)."""
    if graph.n < 2:
        raise Disconnected("need at least two vertices")
    if not graph.is_connected():
        raise Disconnected("graph is not connected")
    adj = graph.adjacency()
    L, kernel = normalized_laplacian(adj)
    res = smallest_deflated(L, kernel, tol=tol, max_iter=max_iter)
    report = SpectralReport(res.value, res.residual, res.iterations, loopless_max_degree(graph))
    if with_rayleigh:
        Lc, kc = combinatorial_laplacian(adj)
        scale = max(1.0, float(np.abs(Lc).sum(axis=1).max()))
        rc = smallest_deflated(Lc, kc, tol=tol * scale, max_iter=max_iter)
        report.rayleigh_gap = rc.value
    return report


def dense_spectrum(graph: Graph, normalized: bool = True) -> np.ndarray:
    """Full spectrum via dense symmetric eigensolve (oracle for :func:`lambda2`)."""
    adj = graph.adjacency()
    L, _ = normalized_laplacian(adj) if normalized else combinatorial_laplacian(adj)
    return np.linalg.eigvalsh(L.toarray())


@dataclass
class SandwichReport:
    h: Fraction
    lambda2: float
    rayleigh_gap: float
    degree_bound: int
    lower: float
    upper: float
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def cheeger_sandwich(graph: Graph, slack: float = 1e-8, max_vertices: int = 22) -> tuple[bool, SandwichReport]:
    """Check ``lambda2/2 <= h <= sqrt(2 D mu2)`` with ``h`` exact.

    ``lambda2`` is the normalised gap, ``mu2`` the minimal Rayleigh quotient
    on functions orthogonal to constants (combinatorial Laplacian gap) and
    ``D`` the maximal degree.  ``slack`` absorbs the eigensolver tolerance.
    """
    res = cheeger_exact(graph, max_vertices=max_vertices)
    spec = lambda2(graph)
    h = float(res.h)
    lower, upper = spec.cheeger_lower, spec.cheeger_upper
    rep = SandwichReport(
        res.h, spec.lambda2, spec.rayleigh_gap, spec.degree_bound, lower, upper,
        lower <= h + slack, h <= upper + slack,
    )
    return rep.ok, rep


# -- expansion on Z^2 -----------------------------------------------------


@dataclass(frozen=True)
class Z2Check:
    size: int
    image_size: int

    @property
    def ok(self) -> bool:
        return self.image_size >= 2 * self.size


def z2_images(A: Iterable[tuple[int, int]], k: int) -> set[tuple[int, int]]:
    out = set()
    for x, y in A:
        out.add((x + k * y, y))
        out.add((x - k * y, y))
        out.add((x, y + k * x))
        out.add((x, y - k * x))
    return out


def z2_expansion_check(A: Iterable[tuple[int, int]], k: int) -> Z2Check:
    """|a A u a^-1 A u b A u b^-1 A| against 2|A| for finite A in Z^2 minus the origin."""
    A = {(int(x), int(y)) for x, y in A}
    if (0, 0) in A:
        raise ContainsOrigin("A must not contain (0, 0)")
    return Z2Check(len(A), len(z2_images(A, k)))


def z2_rng(seed: int, index: int) -> np.random.Generator:
    """Stream ``index`` of the counter-based Philox generator keyed by ``seed``."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, index, 0]))


def random_z2_set(seed: int, index: int, max_size: int = 64, bound: int = 1000) -> set[tuple[int, int]]:
    rng = z2_rng(seed, index)
    size = int(rng.integers(1, max_size + 1))
    pts = rng.integers(-bound, bound + 1, size=(size, 2))
    A = {(int(x), int(y)) for x, y in pts if (x, y) != (0, 0)}
    return A or {(1, 0)}


def _z2_rows(args) -> list[str]:
    seed, k, lo, hi, max_size, bound = args
    rows = []
    for i in range(lo, hi):
        c = z2_expansion_check(random_z2_set(seed, i, max_size, bound), k)
        rows.append(f"{i},{c.size},{c.image_size},{int(c.ok)}")
    return rows


def z2_random_check(seed: int, count: int, k: int, max_size: int = 64, bound: int = 1000, threads: int = 1) -> list[str]:
    """CSV rows ``index,size,image_size,ok``; identical for every thread count."""
    chunk = max(1, -(-count // max(1, threads * 4)))
    jobs = [(seed, k, lo, min(lo + chunk, count), max_size, bound) for lo in range(0, count, chunk)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_z2_rows, jobs))
    else:
        parts = [_z2_rows(j) for j in jobs]
    return [row for part in parts for row in part]


# -- scans ---------------------------------------------------------------


SCAN_HEADER = "level,vertices,maxdeg,lambda2,lower,upper,control_lambda2"


@dataclass
class ScanRow:
    level: int
    vertices: int
    maxdeg: int
    lambda2: float
    lower: float
    upper: float
    control_lambda2: float | None

    def csv(self) -> str:
        ctrl = "" if self.control_lambda2 is None else f"{self.control_lambda2:.10e}"
        return f"{self.level},{self.vertices},{self.maxdeg},{self.lambda2:.10e},{self.lower:.10e},{self.upper:.10e},{ctrl}"


def _scan_one(args) -> ScanRow:
    builder, control_builder, level = args
    g = builder(level)
    rep = lambda2(g)
    ctrl = None
    if control_builder is not None:
        ctrl = lambda2(control_builder(level), with_rayleigh=False).lambda2
    return ScanRow(level, g.n, g.max_degree(), rep.lambda2, rep.cheeger_lower, rep.cheeger_upper, ctrl)


def expansion_scan(
    builder: Callable[[int], Graph],
    levels: Sequence[int],
    control_builder: Callable[[int], Graph] | None = None,
    threads: int = 1,
) -> list[ScanRow]:
    """Spectral data per level; ``threads > 1`` uses a process pool (results are order-stable)."""
    levels = list(levels)
    if levels != sorted(levels):
        raise ValueError("levels must be sorted")
    jobs = [(builder, control_builder, t) for t in levels]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_scan_one, jobs))
    return [_scan_one(j) for j in jobs]


def scan_csv(rows: Sequence[ScanRow]) -> str:
    return SCAN_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
