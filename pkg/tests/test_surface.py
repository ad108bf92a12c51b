from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from origami_lab.errors import InvalidGenus, InvalidPermutation, NotTransitive
from origami_lab.surface import (
    OrigamiDatum,
    Permutation,
    SurfacePoint,
    TorusPoint,
    commutator_cycle_count,
    covering_map,
    fibre,
    genus,
    grid_points,
    metric_neighbors,
    parse_point,
    staircase,
    surface_from_datum,
    validate_datum,
)


@st.composite
def transitive_data(draw, max_m=12):
    m = draw(st.integers(1, max_m))
    sigma = draw(st.permutations(range(m)))
    tau = draw(st.permutations(range(m)))
    # splice in an m-cycle on a random subset of positions to force transitivity sometimes
    if draw(st.booleans()):
        order = draw(st.permutations(range(m)))
        cyc = [0] * m
        for i in range(m):
            cyc[order[i]] = order[(i + 1) % m]
        sigma = cyc
    return m, list(sigma), list(tau)


def _orbits(m, sigma, tau):
    seen, count = set(), 0
    for s in range(m):
        if s in seen:
            continue
        count += 1
        stack = [s]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack += [sigma[x], tau[x]]
    return count


def test_torus_datum(torus1):
    assert torus1.genus == 1
    assert len(torus1.corner_classes) == 1


def test_z2_genus(z2):
    assert z2.genus == 2
    assert z2.corner_classes == ((0, 1, 2),)
    assert z2.right_step.images == (1, 0, 2)
    assert z2.up_step.images == (0, 2, 1)


def test_disjoint_tori_rejected():
    with pytest.raises(NotTransitive):
        validate_datum(2, [0, 1], [0, 1])


def test_bad_permutation_rejected():
    with pytest.raises(InvalidPermutation):
        validate_datum(2, [0, 0], [1, 0])
    with pytest.raises(InvalidPermutation):
        validate_datum(3, [1, 0], [0, 2, 1])


def test_staircase_data():
    assert staircase(1) == OrigamiDatum(1, Permutation((0,)), Permutation((0,)))
    assert staircase(2).sigma.images == (1, 0, 2) and staircase(2).tau.images == (0, 2, 1)
    d4 = staircase(4)
    assert d4.m == 7
    assert d4.sigma == Permutation.from_cycles(7, [(0, 1), (2, 3), (4, 5)])
    assert d4.tau == Permutation.from_cycles(7, [(1, 2), (3, 4), (5, 6)])
    with pytest.raises(InvalidGenus):
        staircase(0)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5, 6])
def test_staircase_genus(g):
    s = surface_from_datum(staircase(g))
    assert s.genus == g == genus(s)
    # one cone point for every staircase
    assert len(s.corner_classes) == 1


def test_datum_json_roundtrip():
    d = OrigamiDatum.from_dict({"m": 3, "sigma": [1, 0, 2], "tau": [0, 2, 1]})
    assert d == staircase(2)
    assert OrigamiDatum.from_dict(__import__("json").loads(d.to_json())) == d


@given(transitive_data())
def test_corner_classes_match_commutator(data):
    m, sigma, tau = data
    if _orbits(m, sigma, tau) != 1:
        with pytest.raises(NotTransitive):
            validate_datum(m, sigma, tau)
        return
    s = validate_datum(m, sigma, tau)
    assert len(s.corner_classes) == commutator_cycle_count(s.datum)
    # Euler identity
    assert 2 * s.genus - 2 + len(s.corner_classes) == m
    assert genus(s) == s.genus


def test_commutator_oracle_many_random():
    rng = np.random.default_rng(11)
    done = 0
    while done < 1000:
        m = int(rng.integers(1, 13))
        sigma, tau = list(rng.permutation(m)), list(rng.permutation(m))
        if _orbits(m, sigma, tau) != 1:
            continue
        s = validate_datum(m, sigma, tau)
        assert len(s.corner_classes) == commutator_cycle_count(s.datum)
        done += 1


def test_covering_map_and_fibres(z2, torus1):
    assert covering_map(z2, SurfacePoint(2, F(1, 3), F(1, 2))) == TorusPoint(F(1, 3), F(1, 2))
    assert covering_map(z2, SurfacePoint(0, F(0), F(0))) == (0, 0)
    assert len(fibre(z2, TorusPoint(F(1, 2), F(1, 2)))) == 3
    assert fibre(z2, TorusPoint(F(0), F(0))) == {SurfacePoint(0, F(0), F(0))}
    assert len(fibre(torus1, TorusPoint(F(1, 5), F(3, 7)))) == 1


@pytest.mark.parametrize("g,n", [(1, 2), (2, 1), (2, 4), (3, 5), (4, 3)])
def test_grid_point_count(g, n):
    s = surface_from_datum(staircase(g))
    expect = s.m * n * n - (s.m - len(s.corner_classes))
    assert len(grid_points(s, n)) == expect
    if (g, n) == (2, 4):
        assert expect == 46


@pytest.mark.parametrize("g,n", [(2, 3), (3, 4)])
def test_fibres_partition_grid(g, n):
    s = surface_from_datum(staircase(g))
    total = sum(len(fibre(s, TorusPoint(F(a, n), F(b, n)))) for a in range(n) for b in range(n))
    assert total == len(grid_points(s, n))


def test_metric_neighbors_examples(torus1, z2):
    p = SurfacePoint(0, F(1, 2), F(0))
    assert sorted(metric_neighbors(torus1, 2, p)) == [SurfacePoint(0, F(0), F(0)), SurfacePoint(0, F(1, 2), F(1, 2))]
    right = [q for q in metric_neighbors(z2, 2, SurfacePoint(0, F(1, 2), F(1, 2))) if q.y == F(1, 2) and q.x == 0]
    # left neighbour stays in square 0, right neighbour crosses into right_step(0) = 1
    assert right == [SurfacePoint(0, F(0), F(1, 2)), SurfacePoint(1, F(0), F(1, 2))]


@pytest.mark.parametrize("g,n", [(1, 5), (2, 4), (2, 7), (3, 4)])
def test_metric_neighbors_symmetric_connected(g, n):
    s = surface_from_datum(staircase(g))
    pts = grid_points(s, n)
    nb = {p: set(metric_neighbors(s, n, p)) for p in pts}
    for p, qs in nb.items():
        for q in qs:
            assert p in nb[q]
        cone = p.x == 0 and p.y == 0
        assert len(qs) <= (4 * max(len(c) for c in s.corner_classes) if cone else 4)
    seen, stack = set(), [pts[0]]
    while stack:
        p = stack.pop()
        if p not in seen:
            seen.add(p)
            stack.extend(nb[p])
    assert len(seen) == len(pts)


def test_cone_point_degree(z2):
    # three squares meet at the single cone point: 12 incident grid edges
    assert len(metric_neighbors(z2, 4, SurfacePoint(0, F(0), F(0)))) == 12


def test_parse_point_roundtrip():
    p = SurfacePoint(2, F(3, 8), F(1, 2))
    assert parse_point(str(p)) == p


def test_canonical_wraps(z2):
    assert z2.canonical(0, F(3, 2), F(0, 1)) == SurfacePoint(1, F(1, 2), F(0))
    assert z2.canonical(1, F(0), F(1)) == SurfacePoint(0, F(0), F(0))
    assert all(z2.is_canonical(p) for p in grid_points(z2, 3))
