import pytest

from starsep.cutsets import (attachment_trichotomy, clique_cutset_atoms,
                             find_clique_cutset, wheel_star_cutset)
from starsep.detectors import classify_wheels
from starsep.errors import InputError
from starsep.generators import bowtie_graph, sample_class, wheel_graph
from starsep.graph_core import Graph, bit_list, mask_of, popcount
from starsep.treewidth import exact_treewidth


def test_atoms_examples(p9, c6):
    ad = clique_cutset_atoms(p9)
    assert len(ad.atoms) == 8
    assert all(popcount(a) == 2 for a in ad.atoms)
    assert clique_cutset_atoms(c6).atoms == (c6.verts,)
    adb = clique_cutset_atoms(bowtie_graph())
    assert sorted(map(bit_list, adb.atoms)) == [[0, 1, 2], [0, 3, 4]]
    assert adb.cutsets == (1 << 0,)


def test_atoms_have_no_clique_cutset():
    for seed in range(15):
        g = sample_class(11, 4, seed).graph
        ad = clique_cutset_atoms(g)
        union = 0
        for atom in ad.atoms:
            union |= atom
            assert find_clique_cutset(g, atom) is None
        assert union == g.verts


def test_atom_treewidth_maximum():
    """Treewidth equals the maximum over clique-cutset atoms."""
    for seed in range(12):
        g = sample_class(10, 4, seed + 50).graph
        ad = clique_cutset_atoms(g)
        per_atom = max((exact_treewidth(g.induced(a)) for a in ad.atoms),
                       default=-1)
        assert per_atom == exact_treewidth(g)


def test_disconnected_graph_uses_empty_cutset():
    g = Graph(4, [(0, 1), (2, 3)])
    ad = clique_cutset_atoms(g)
    assert 0 in ad.cutsets
    assert sorted(map(bit_list, ad.atoms)) == [[0, 1], [2, 3]]


def test_wheel_cutset_w93(w93):
    witness = next(w for w in classify_wheels(w93)
                   if w.center == 9 and w.is_proper_wheel)
    cut = wheel_star_cutset(w93, witness, sector=(0, 1, 2, 3))
    assert cut.cutset == mask_of([9, 0, 3])
    assert cut.far_spokes == mask_of([6])
    assert cut.far_rest == mask_of([4, 5, 7, 8])
    assert sorted(map(bit_list, cut.components_after)) == \
        [[1, 2], [4, 5, 6, 7, 8]]
    cut2 = wheel_star_cutset(w93, witness, sector=(3, 4, 5, 6))
    assert cut2.cutset == mask_of([9, 3, 6])
    # default sector: lexicographically least long sector
    assert wheel_star_cutset(w93, witness).sector == (0, 1, 2, 3)


def test_wheel_cutset_rejects_universal():
    g = wheel_graph(6, (1, 2, 3, 4, 5, 6))
    wit = next(w for w in classify_wheels(g) if w.is_universal_wheel)
    with pytest.raises(InputError):
        wheel_star_cutset(g, wit)


def test_trichotomy_star_center():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    tr = attachment_trichotomy(star, 1, 2, 3, 1 << 0)
    assert tr.case == "ii" and tr.h == 1 << 0
    assert sorted(tr.witness["paths"]) == [[0, 1], [0, 2], [0, 3]]


def test_trichotomy_middle_attachment_is_branching():
    # x3 sees only the middle of the path, so the center sits there
    g = Graph(7, [(4, 5), (5, 6), (1, 4), (2, 6), (3, 5)])
    tr = attachment_trichotomy(g, 1, 2, 3, mask_of([4, 5, 6]))
    assert tr.case == "ii" and tr.witness["center"] == 5


def test_trichotomy_case_i():
    g = Graph(7, [(4, 5), (5, 6), (1, 4), (2, 6), (3, 4), (3, 6)])
    tr = attachment_trichotomy(g, 1, 2, 3, mask_of([4, 5, 6]))
    assert tr.case == "i"
    assert tr.witness["path"][0] in (1, 2) and tr.witness["third"] == 3


def test_trichotomy_case_iii():
    g = Graph(6, [(3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    tr = attachment_trichotomy(g, 0, 1, 2, mask_of([3, 4, 5]))
    assert tr.case == "iii"
    assert set(tr.witness["triangle"]) == {3, 4, 5}


def test_trichotomy_minimality():
    """Deleting any single vertex of H breaks the attachment property."""
    from starsep.cutsets import _attachment_ok
    g = Graph(9, [(4, 5), (5, 6), (6, 7), (7, 8),
                  (1, 4), (2, 8), (3, 6)])
    tr = attachment_trichotomy(g, 1, 2, 3, mask_of([4, 5, 6, 7, 8]))
    for v in bit_list(tr.h):
        assert not _attachment_ok(g, (1, 2, 3), tr.h & ~(1 << v))


def test_trichotomy_validates_inputs():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    with pytest.raises(InputError):
        attachment_trichotomy(g, 0, 0, 4, 1 << 2)
    with pytest.raises(InputError):
        attachment_trichotomy(g, 0, 2, 4, mask_of([1, 3]))  # disconnected D
