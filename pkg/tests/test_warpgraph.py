from fractions import Fraction as F
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from origami_lab.classical import identity_matching, margulis_M, schreier_Mcirc, same_multigraph, strip_side
from origami_lab.dynamics import Generator, apply_generator
from origami_lab.errors import FibreMismatch, GapNotDiverging, KNotAdmissible, NotAMatching, VertexNotFound
from origami_lab.graphs import Graph, path_graph
from origami_lab.surface import SurfacePoint, grid_points, metric_neighbors, staircase, surface_from_datum, torus
from origami_lab.warpgraph import (
    all_matchings,
    build_level,
    coarse_union,
    dg_wordball,
    fiber_divergence,
    matching_quotient,
    quotient_qi_violations,
    warped_distance,
)

from conftest import nx_to_graph


def oracle_level_edges(surface, k, t):
    """Edge set from the exact-rational operations only."""
    pts = grid_points(surface, t)
    edges = set()
    for p in pts:
        for q in metric_neighbors(surface, t, p):
            edges.add(frozenset((p, q)))
        for c in "aAbB":
            q = apply_generator(surface, Generator(c, k), p)
            if q != p:
                edges.add(frozenset((p, q)))
    return edges


@pytest.mark.parametrize("g,k,t", [(1, 1, 5), (1, 3, 4), (2, 2, 4), (2, 2, 7), (3, 2, 3)])
def test_level_matches_oracle(g, k, t):
    s = surface_from_datum(staircase(g))
    level = build_level(s, k, t)
    got = {frozenset((level.labels[u], level.labels[v])) for u, v, _ in level.edges}
    assert got == oracle_level_edges(s, k, t)
    assert len(got) == len(level.edges)  # multi-edges collapsed
    assert all(u != v for u, v, _ in level.edges)  # no loops


def test_trivial_levels():
    t1 = build_level(torus(), 1, 1)
    assert t1.n == 1 and t1.edges == []
    t2 = build_level(torus(), 2, 2)
    assert t2.kind_counts() == {"Metric": 4}
    assert nx.is_isomorphic(nx.Graph([(u, v) for u, v, _ in t2.edges]), nx.cycle_graph(4))


def test_z2_level_t4(z2):
    level = build_level(z2, 2, 4)
    assert level.n == 46
    assert level.is_connected()
    assert level.kind_counts() == {"Metric": 96, "Warp(a)": 24, "Warp(b)": 24}
    # 8 at regular points, 12 at the cone point (three squares meet there)
    assert level.max_degree() == 12
    deg = level.degrees()
    assert deg[level.base_vertex()] == 12
    assert all(d <= 8 for i, d in enumerate(deg) if i != level.base_vertex())


@pytest.mark.parametrize("t", [4, 8, 16, 32])
def test_degree_bound_independent_of_t(z2, t):
    assert build_level(z2, 2, t).max_degree() <= 12


def test_inadmissible_k(z2):
    with pytest.raises(KNotAdmissible):
        build_level(z2, 1, 4)


def test_warp_edge_consistency(z2):
    level = build_level(z2, 2, 6)
    for u, v, kind in level.edges:
        if kind.startswith("Warp"):
            c = kind[5]
            p, q = level.labels[u], level.labels[v]
            assert apply_generator(z2, Generator(c, 2), p) == q or apply_generator(z2, Generator(c, 2), q) == p


def test_distance_examples(z2):
    t2 = build_level(torus(), 2, 2)
    assert warped_distance(t2, SurfacePoint(0, F(0), F(0)), SurfacePoint(0, F(1, 2), F(1, 2))) == 2
    level = build_level(z2, 2, 8)
    for p in level.labels:
        assert warped_distance(level, p, p) == 0
        for c in "aAbB":
            assert warped_distance(level, p, apply_generator(z2, Generator(c, 2), p)) <= 1
    with pytest.raises(VertexNotFound):
        warped_distance(level, SurfacePoint(0, F(1, 3), F(0)), p)


def test_metric_axioms_random_triples(z2):
    level = build_level(z2, 2, 8)
    d = level.all_pairs()
    assert (d == d.T).all()
    rng = np.random.default_rng(3)
    for _ in range(2000):
        a, b, c = rng.integers(0, level.n, 3)
        assert d[a, c] <= d[a, b] + d[b, c]
    # warping only shortens: level distance <= grid distance
    grid = build_level(z2, 2, 8, warped=False).all_pairs()
    assert (d <= grid).all()


def test_dg_wordball_examples(z2):
    u = SurfacePoint(0, F(1, 4), F(1, 2))
    assert dg_wordball(z2, 2, 4, u, u, 0) == 0
    v = apply_generator(z2, Generator("a", 2), u)
    assert dg_wordball(z2, 2, 4, u, v, 1) <= 1
    vals = [dg_wordball(z2, 2, 8, u, SurfacePoint(2, F(5, 8), F(1, 8)), R) for R in range(5)]
    assert all(b <= a for a, b in zip(vals, vals[1:]))


def test_dg_wordball_window_on_torus():
    """Frozen window: on 50 seeded random pairs (torus, n=8, k=1, R=6), d <= D_G <= d + 1."""
    T = torus()
    level = build_level(T, 1, 8)
    pts = grid_points(T, 8)
    rng = np.random.default_rng(2024)
    diffs = []
    for _ in range(50):
        u, v = pts[rng.integers(len(pts))], pts[rng.integers(len(pts))]
        diffs.append(int(dg_wordball(T, 1, 8, u, v, 6)) - level.distance(u, v))
    assert min(diffs) >= 0 and max(diffs) <= 1


def test_matching_quotient_path_example():
    g = path_graph(3)
    q, qmap = matching_quotient(g, [(0, 1)])
    assert q.n == 2
    assert g.distance(0, 2) == 2
    assert q.distance(qmap[0], qmap[2]) == 1
    assert quotient_qi_violations(g, [(0, 1)]) == []


def test_matching_errors():
    g = path_graph(4)
    with pytest.raises(NotAMatching):
        matching_quotient(g, [(0, 1), (1, 2)])
    with pytest.raises(NotAMatching):
        matching_quotient(g, [(0, 2)])


def test_empty_matching_is_identity():
    g = nx_to_graph(nx.petersen_graph())
    q, _ = matching_quotient(g, [])
    assert same_multigraph(q, g)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_identity_matching_gives_schreier(n):
    q, _ = matching_quotient(margulis_M(n), identity_matching(n))
    assert same_multigraph(strip_side(q), schreier_Mcirc(n))


def test_all_matchings_counts():
    # matchings of K4: 1 + 6 + 3; of the path P4: 1 + 3 + 1
    assert sum(1 for _ in all_matchings(nx_to_graph(nx.complete_graph(4)))) == 10
    assert sum(1 for _ in all_matchings(path_graph(4))) == 5


@given(st.integers(2, 8), st.floats(0.15, 0.9), st.integers(0, 10**6))
def test_quotient_qi_random_graphs(n, p, seed):
    G = nx.gnp_random_graph(n, p, seed=seed)
    if not nx.is_connected(G):
        return
    g = nx_to_graph(G)
    for m in all_matchings(g):
        assert quotient_qi_violations(g, m) == []


def test_coarse_union_examples():
    single = Graph.from_edges([0], [])
    cu = coarse_union([single, single], gap_rule="sum")
    assert cu.component_distance(1, 2) == 3
    assert cu.distance((1, 0), (2, 0)) == 3
    empty = coarse_union([])
    assert empty.components == [] and empty.gaps == {}
    fam = [schreier_Mcirc(n) for n in range(2, 9)]
    cu = coarse_union(fam, gap_rule="diam-sum", indices=range(2, 9))
    assert cu.distance((3, (0, 0)), (3, (1, 2))) == fam[1].distance((0, 0), (1, 2))
    text = cu.to_edgelist()
    assert text.count("# gap") == 21
    with pytest.raises(GapNotDiverging):
        coarse_union([single, single, single], gap_rule=lambda i, j: 5)


def test_fiber_divergence(z2):
    pts = [SurfacePoint(0, F(1, 2), F(0)), SurfacePoint(1, F(1, 2), F(0))]
    table = fiber_divergence(z2, 2, pts, [4, 8, 16])
    d = table.distances[(0, 1)]
    assert all(x > 0 for x in d) and table.non_decreasing((0, 1))
    assert d == [4, 6, 8]
    assert fiber_divergence(z2, 2, pts[:1], [4, 8]).distances == {}
    with pytest.raises(FibreMismatch):
        fiber_divergence(z2, 2, [pts[0], SurfacePoint(1, F(1, 4), F(0))], [4])
    assert table.to_csv().splitlines()[0] == "level,i,j,u,v,distance"


def test_fiber_same_orbit_bounded_by_word(z2):
    from origami_lab.dynamics import apply_word, orbit_word

    p = SurfacePoint(0, F(1, 4), F(0))
    q = SurfacePoint(1, F(1, 4), F(0))
    w = orbit_word(z2, 2, p, q)
    assert w == "Bab" and apply_word(z2, w, p, k=2) == q
    table = fiber_divergence(z2, 2, [p, q], [4, 8, 16, 32])
    assert max(table.distances[(0, 1)]) <= len(w)


def test_level_pickle_roundtrip(z2, tmp_path, monkeypatch):
    monkeypatch.setenv("ORIGAMI_LAB_CACHE", str(tmp_path))
    a = build_level(z2, 2, 6)
    b = build_level(z2, 2, 6)
    assert list(tmp_path.iterdir())
    assert a.edges == b.edges and a.labels == b.labels
