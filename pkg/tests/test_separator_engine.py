from fractions import Fraction

import pytest

from starsep.central_bag import is_balanced_separator
from starsep.detectors import holes
from starsep.errors import InputError
from starsep.generators import cycle_graph, sample_cutset_free_member
from starsep.graph_core import Graph, WeightFn, bit_list, mask_of
from starsep.hub_division import hub_division
from starsep.separator_engine import (aux_graph, balanced_vertex_separator,
                                      central_bag_separator, main_separator,
                                      ramsey_vs_4, verify_certificate,
                                      wheelfree_separator)



def test_ramsey_budgets():
    assert ramsey_vs_4(3) == 9
    assert ramsey_vs_4(4) == 18
    assert ramsey_vs_4(5) == 25
    assert ramsey_vs_4(6) >= 36  # upper bound fallback


def test_aux_graph_c5():
    c5 = cycle_graph(5)
    aux = aux_graph(c5, c5.verts, WeightFn.uniform(c5), 0)
    assert sorted(map(bit_list, aux.cliques)) == [[1], [4]]
    assert list(map(bit_list, aux.comps)) == [[2, 3]]
    assert sorted(aux.graph.edges()) == [(0, 2), (1, 2)]


def test_aux_graph_w93_is_six_cycle(w93):
    aux = aux_graph(w93, w93.verts, WeightFn.uniform(w93), 9)
    assert aux.graph.n == 6
    found = list(holes(aux.graph))
    assert len(found) == 1 and len(found[0]) == 6


def test_aux_graph_isolated_vertex():
    g = Graph(3, [(1, 2)])
    aux = aux_graph(g, g.verts, WeightFn.uniform(g), 0)
    assert aux.cliques == () and len(aux.comps) == 1
    assert aux.graph.n == 1


def test_balanced_vertex_separator_examples(w93):
    c5 = cycle_graph(5)
    cert = balanced_vertex_separator(c5, c5.verts, WeightFn.uniform(c5), 0)
    assert is_balanced_separator(c5, WeightFn.uniform(c5), c5.verts,
                                 cert.separator)
    assert cert.ok()
    certw = balanced_vertex_separator(w93, w93.verts, WeightFn.uniform(w93), 9)
    assert certw.separator == mask_of([9, 0, 3, 6])
    sizes = {e["check"]: e for e in certw.ledger}
    assert sizes["aux_separator_size"]["measured"] <= 3
    assert sizes["separator_size_vs_6omega_plus_hubnbrs"]["ok"]


def test_wheelfree_separator_examples(p9, c6):
    w9 = WeightFn.uniform(p9)
    cert = wheelfree_separator(p9, p9.verts, w9, ramsey_vs_4(4) + 1)
    assert cert.separator == 1 << 4
    w6 = WeightFn.uniform(c6)
    cert6 = wheelfree_separator(c6, c6.verts, w6, 19)
    # ascending lexicographic search: {0, 2} is the first valid pair,
    # each side weighing at most one half under the non-strict rule
    assert cert6.separator == mask_of([0, 2])
    single = Graph(1, [])
    certs = wheelfree_separator(single, single.verts, WeightFn.uniform(single), 5)
    assert certs.separator == 1 << 0  # the empty set leaves weight 1


def test_wheelfree_rejects_wheel(w93):
    with pytest.raises(InputError):
        wheelfree_separator(w93, w93.verts, WeightFn.uniform(w93), 19)


def test_central_bag_separator_branches(p9, c6, w93):
    t = 4
    div9 = hub_division(p9, WeightFn.uniform(p9), t)
    c9 = central_bag_separator(p9, div9)
    assert c9.separator == 1 << 4
    assert c9.provenance["branch"] == "wheel_free"

    divw = hub_division(w93, WeightFn.uniform(w93), t)
    cw = central_bag_separator(w93, divw)
    assert cw.separator == mask_of([9, 0, 3, 6])
    assert cw.provenance["branch"] == "balanced_vertex"

    div6 = hub_division(c6, WeightFn.uniform(c6), t)
    cc = central_bag_separator(c6, div6)
    assert cc.separator == mask_of([0, 2])
    assert cc.provenance["branch"] == "wheel_free"


def test_main_separator_fixtures(p9, w93):
    m9 = main_separator(p9, WeightFn.uniform(p9), 4)
    assert m9.separator == 1 << 4
    assert verify_certificate(p9, WeightFn.uniform(p9), m9)
    mw = main_separator(w93, WeightFn.uniform(w93), 4)
    assert mw.separator == mask_of([9, 0, 3, 6])
    assert verify_certificate(w93, WeightFn.uniform(w93), mw)
    assert m9.ok() and mw.ok()


def test_main_separator_reweighted_lift(w93):
    vals = [Fraction(1, 30)] * 10
    vals[1] = Fraction(7, 10)
    w = WeightFn(10, vals)
    cert = main_separator(w93, w, 4)
    assert verify_certificate(w93, w, cert)
    assert cert.ok()


def test_pipeline_on_cutset_free_corpus():
    import random
    for seed in range(20):
        g = sample_cutset_free_member(11 + seed % 8, 4, seed + 7)
        rng = random.Random(seed)
        raw = [rng.randint(1, 5) for _ in range(g.n)]
        raw[rng.randrange(g.n)] += 4 * g.n
        total = sum(raw)
        w = WeightFn(g.n, [Fraction(x, total) for x in raw])
        cert = main_separator(g, w, 4)
        assert verify_certificate(g, w, cert)
        assert cert.ok()
        # the aux-graph branch keeps its structural promises
        if cert.provenance.get("branch") == "balanced_vertex":
            aux_edges = cert.provenance["aux"]["edges"]
            n_cliques = len(cert.provenance["aux"]["cliques"])
            deg = {}
            for a, b in aux_edges:
                deg[b] = deg.get(b, 0) + 1
                assert (a < n_cliques) != (b < n_cliques)
            assert all(d <= 2 for d in deg.values())


def test_neighborhood_helper_property():
    """In a member's central bag, every far component of a non-apex vertex
    touches at most two of its neighborhood cliques; building the aux
    graph at every bag vertex would raise otherwise."""
    from starsep.detectors import detect_pyramid
    from starsep.graph_core import bits
    checked = 0
    for seed in range(12):
        g = sample_cutset_free_member(12 + seed % 7, 4, seed + 31)
        w = WeightFn.uniform(g)
        div = hub_division(g, w, 4)
        beta = div.bag.beta
        sub = g.induced(beta)
        for v in bits(beta):
            if detect_pyramid(sub, apex=v) is not None:
                continue
            aux_graph(g, beta, div.bag.weights, v)
            checked += 1
    assert checked > 0
