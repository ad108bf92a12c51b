import os

import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from origami_lab.graphs import Graph
from origami_lab.surface import staircase, surface_from_datum, validate_datum

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def z2():
    return surface_from_datum(staircase(2))


@pytest.fixture(scope="session")
def z3():
    return surface_from_datum(staircase(3))


@pytest.fixture(scope="session")
def torus1():
    return validate_datum(1, [0], [0])


def nx_to_graph(G: nx.Graph) -> Graph:
    return Graph.from_edges(sorted(G.nodes()), [(u, v, "E") for u, v in G.edges()])


def random_connected(rng: np.random.Generator, n_max: int, p_lo: float = 0.2, p_hi: float = 0.9) -> nx.Graph:
    while True:
        n = int(rng.integers(2, n_max + 1))
        p = float(rng.uniform(p_lo, p_hi))
        G = nx.gnp_random_graph(n, p, seed=int(rng.integers(0, 2**31)))
        if nx.is_connected(G):
            return G


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
