import random
from fractions import Fraction

import pytest

from starsep.errors import CapacityError, InputError
from starsep.generators import (complete_graph, sample_class, theta_graph,
                                w93_graph)
from starsep.graph_core import Graph, mask_of, popcount
from starsep.treewidth import (TreeDecomposition, build_td, certify,
                               exact_treewidth, validate_td)

from . import oracles
from .conftest import seeded_random_graphs


def test_exact_treewidth_basics(p9, c6):
    assert exact_treewidth(p9) == 1
    assert exact_treewidth(c6) == 2
    assert exact_treewidth(complete_graph(5)) == 4
    assert exact_treewidth(Graph(3, [])) == 0
    assert exact_treewidth(Graph(0, [])) == -1
    assert exact_treewidth(theta_graph(2, 2, 2)) == 2
    assert exact_treewidth(w93_graph()) == 3


def test_exact_treewidth_cap():
    with pytest.raises(CapacityError):
        exact_treewidth(complete_graph(15))


def test_exact_treewidth_vs_bruteforce():
    for i, g in enumerate(seeded_random_graphs(25, 7, base_seed=400)):
        ours = exact_treewidth(g)
        ref = oracles.brute_treewidth(oracles.to_nx(g))
        assert ours == ref, (i, ours, ref)


def test_validate_td_examples(p9, c6):
    bags = tuple(mask_of([i, i + 1]) for i in range(8))
    edges = tuple((i, i + 1) for i in range(7))
    td = TreeDecomposition(bags, edges)
    res = validate_td(p9, td)
    assert res.passed and td.width == 1
    # drop one edge bag: edge-cover failure
    broken = TreeDecomposition(bags[:3] + bags[4:],
                               tuple((i, i + 1) for i in range(6)))
    res2 = validate_td(p9, broken)
    assert not res2.passed
    assert any(f["condition"] == "edge_cover" for f in res2.failures)
    # C6 with a fan of bags through vertex 5
    fan = TreeDecomposition(
        (mask_of([0, 1, 5]), mask_of([1, 2, 5]), mask_of([2, 3, 5]),
         mask_of([3, 4, 5])),
        ((0, 1), (1, 2), (2, 3)))
    res3 = validate_td(c6, fan)
    assert res3.passed and fan.width == 2


def test_validate_td_connectivity_failure():
    g = Graph(3, [(0, 1), (1, 2)])
    td = TreeDecomposition((mask_of([0, 1]), mask_of([1, 2]), mask_of([0])),
                           ((0, 1), (1, 2)))
    res = validate_td(g, td)
    assert not res.passed
    assert any(f["condition"] == "connected_subtree" for f in res.failures)


def _exhaustive_oracle(graph, w):
    """Independent balanced-separator oracle for build_td tests."""
    from starsep.central_bag import is_balanced_separator
    from starsep.graph_core import subsets_of_size
    for size in range(0, popcount(graph.verts) + 1):
        for x in subsets_of_size(graph.verts, size):
            if is_balanced_separator(graph, w, graph.verts, x):
                return x
    raise AssertionError("unreachable")


def test_build_td_guarantees(p9, c6):
    for g, tw in ((p9, 1), (c6, 2), (w93_graph(), 3)):
        sizes = []

        def oracle(graph, w):
            x = _exhaustive_oracle(graph, w)
            sizes.append(popcount(x))
            return x

        td = build_td(g, oracle)
        assert validate_td(g, td).passed
        assert td.width >= tw
        assert td.width <= 2 * max(sizes)


def test_build_td_disconnected():
    g = Graph(5, [(0, 1), (3, 4)])
    td = build_td(g, _exhaustive_oracle)
    assert validate_td(g, td).passed


def test_certify_fixtures(p9, c6, w93):
    res9 = certify(p9, 4)
    assert res9.report["width"] <= 2 and res9.report["exact_treewidth"] == 1
    assert res9.report["validation_passed"]
    res6 = certify(c6, 4)
    assert res6.report["width"] == 2 == res6.report["exact_treewidth"]
    resw = certify(w93, 4)
    assert resw.report["width"] >= resw.report["exact_treewidth"] == 3
    for g, res in ((p9, res9), (c6, res6), (w93, resw)):
        assert res.report["width_le_2x_max_separator"]
        assert res.report["width_le_measured_bound"]
        assert validate_td(g, res.td).passed


def test_certify_rejects_nonmember():
    with pytest.raises(InputError):
        certify(complete_graph(4), 4)


def test_certify_random_members():
    for seed in range(15):
        sr = sample_class(12, 4, seed + 900)
        res = certify(sr.graph, 4)
        assert res.report["validation_passed"]
        assert res.report["width_ge_exact"]
        assert res.report["width_le_2x_max_separator"]
        assert all(c.ok() for c in res.certificates)


def test_weighted_separator_existence_spotcheck():
    """Graphs of treewidth k admit balanced separators of size k+1 for
    arbitrary weights (checked exhaustively on small instances)."""
    rng = random.Random(5)
    for g in seeded_random_graphs(12, 7, base_seed=777):
        if not g.verts:
            continue
        k = exact_treewidth(g)
        h = oracles.to_nx(g)
        raw = [rng.randint(0, 6) for _ in range(g.n)]
        if sum(raw) == 0:
            raw[0] = 1
        total = sum(raw)
        weights = {v: Fraction(raw[v], total) for v in g.vertex_list()}
        found = oracles.exhaustive_balanced_separator(
            h, weights, k + 1, Fraction(1, 2))
        assert found is not None
