import json
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from starsep.errors import InputError
from starsep.graph_core import (Graph, WeightFn, components, dumps_graph,
                                from_dimacs, from_graph6, induced,
                                loads_graph, mask_of, neighborhood,
                                to_graph6)

from .conftest import small_graphs


def test_simple_graph_invariants():
    g = Graph(4, [(0, 1), (1, 2), (1, 2)])  # dup edge collapses
    assert g.num_edges() == 2
    assert g.has_edge(1, 0) and g.has_edge(2, 1)
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 5)])


def test_neighborhood_examples(p9, c6, w93):
    assert neighborhood(p9, 1 << 4) == mask_of([3, 5])
    assert neighborhood(c6, 1 << 0, closed=True) == mask_of([5, 0, 1])
    assert neighborhood(w93, 1 << 9) == mask_of([0, 3, 6])
    with pytest.raises(InputError):
        neighborhood(p9, 1 << 12)


def test_components_examples(p9, c6, w93):
    assert components(p9, p9.verts & ~p9.closed_nbr(4)) == \
        [mask_of([0, 1, 2]), mask_of([6, 7, 8])]
    assert components(w93, w93.verts & ~w93.closed_nbr(9)) == \
        [mask_of([1, 2]), mask_of([4, 5]), mask_of([7, 8])]
    assert components(c6, c6.verts) == [c6.verts]


def test_induced_examples(c6, w93):
    tri = induced(c6, mask_of([0, 1, 2]))
    assert tri.num_edges() == 2 and tri.vertex_list() == [0, 1, 2]
    nine = induced(w93, mask_of(range(9)))
    assert nine.num_edges() == 9  # the base cycle
    assert induced(c6, c6.verts) == c6


@given(small_graphs())
@settings(max_examples=120, deadline=None)
def test_components_partition_property(g):
    comps = components(g, g.verts)
    union = 0
    for comp in comps:
        assert comp and not (comp & union)
        union |= comp
        # connected and maximal: no edges leaving comp stay inside verts
        assert neighborhood(g, comp) & g.verts & ~comp == \
            neighborhood(g, comp)
        sub = g.induced(comp)
        assert len(components(sub, comp)) == 1
    assert union == g.verts


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_weight_partition_property(g):
    if not g.verts:
        return
    w = WeightFn.uniform(g)
    v = g.vertex_list()[0]
    outside = g.verts & ~g.closed_nbr(v)
    total = w.of(g.closed_nbr(v))
    for comp in components(g, outside):
        total += w.of(comp)
    assert total == 1


def test_weightfn_validation():
    g = Graph(3, [(0, 1)])
    with pytest.raises(InputError):
        WeightFn(3, [0.5, 0.2, 0.2])  # sums to 0.9
    with pytest.raises(InputError):
        WeightFn(3, [2, -1, 0])
    w = WeightFn(3, ["1/2", "1/4", "1/4"])
    assert w.exact and w.of(mask_of([1, 2])) == Fraction(1, 2)
    wf = WeightFn(3, [0.5, 0.25, 0.25])
    assert not wf.exact
    assert wf.leq(wf.of(mask_of([0])), Fraction(1, 2))


def test_uniform_on_subset():
    g = Graph(4, [(0, 1), (2, 3)])
    w = WeightFn.uniform_on(g, mask_of([1, 3]))
    assert w.of(1 << 1) == Fraction(1, 2) and w.of(1 << 0) == 0


def test_json_roundtrip(w93):
    text = dumps_graph(w93)
    g2, w = loads_graph(text)
    assert g2 == w93 and w is None
    obj = json.loads(text)
    obj["weights"] = ["1/10"] * 10
    g3, w3 = loads_graph(json.dumps(obj))
    assert w3.of(g3.verts) == 1


def test_graph6_roundtrip_against_networkx(p9, c6, w93):
    for g in (p9, c6, w93, Graph(1, []), Graph(0, [])):
        s = to_graph6(g)
        back = from_graph6(s)
        assert back == g
        if g.n:
            ref = nx.from_graph6_bytes(s.encode())
            assert {frozenset(e) for e in ref.edges} == \
                {frozenset(e) for e in g.edges()}


def test_graph6_matches_networkx_encoding(w93):
    for g in (w93, Graph(5, [(0, 2), (1, 4)])):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(h, nodes=sorted(h),
                                    header=False).decode().strip()
        assert to_graph6(g) == theirs


def test_dimacs_read():
    text = "c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
    g = from_dimacs(text)
    assert g.n == 4 and g.num_edges() == 3 and g.has_edge(0, 1)
    with pytest.raises(InputError):
        from_dimacs("e 1 2\n")
