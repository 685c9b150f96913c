from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from starsep.generators import (bowtie_graph, cycle_graph, diamond_graph,
                                path_graph, prism_graph, pyramid_graph,
                                theta_graph, w93_graph, wheel_graph)
from starsep.graph_core import Graph, WeightFn


@pytest.fixture
def p9():
    return path_graph(9)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def w93():
    return w93_graph()


@pytest.fixture
def uniform():
    return WeightFn.uniform


def named_graph_zoo() -> dict[str, Graph]:
    """Every named construction, for detector round trips."""
    zoo = {
        "P9": path_graph(9),
        "P2": path_graph(2),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "C7": cycle_graph(7),
        "K4": Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
        "K5": Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)]),
        "diamond": diamond_graph(),
        "bowtie": bowtie_graph(),
        "W93": w93_graph(),
        "W84": wheel_graph(8, (1, 3, 5, 7)),
        "W5": wheel_graph(5, (1, 2, 3, 4, 5)),
        "THETA233": theta_graph(2, 3, 3),
        "THETA222": theta_graph(2, 2, 2),
        "PYR122": pyramid_graph(1, 2, 2),
        "PYR222": pyramid_graph(2, 2, 2),
        "PRISM111": prism_graph(1, 1, 1),
        "PRISM122": prism_graph(1, 2, 2),
    }
    return zoo


def seeded_random_graphs(count: int, max_n: int, base_seed: int = 0):
    """Deterministic mixed-density random graph stream for oracle
    comparisons."""
    out = []
    for i in range(count):
        rng = random.Random(base_seed + i)
        n = rng.randint(4, max_n)
        p = rng.choice((0.15, 0.25, 0.35, 0.5, 0.65))
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < p]
        out.append(Graph(n, edges))
    return out


@st.composite
def small_graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(all_edges) if all_edges
                          else st.nothing(), unique=True,
                          max_size=len(all_edges))) if all_edges else []
    return Graph(n, picks)
