"""Star separations: balanced/unbalanced vertices, canonical star
separations, shields, near-non-crossing, and the A-side order.

A separation splits the vertex set into (A, C, B) with A anticomplete to
B; a star separation keeps C inside one closed neighborhood.  For an
unbalanced vertex the canonical separation puts the heaviest component of
the graph minus its closed neighborhood on the B side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolation, InputError
from .graph_core import (Graph, WeightFn, bit_list, bits, components,
                         mask_of, neighborhood, popcount)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Separation:
    a: int
    c: int
    b: int
    center: int | None = None

    def side_bc(self) -> int:
        return self.b | self.c

    def as_json(self) -> dict:
        out = {"A": bit_list(self.a), "C": bit_list(self.c),
               "B": bit_list(self.b)}
        if self.center is not None:
            out["center"] = self.center
        return out


def validate_separation(g: Graph, s: Separation) -> None:
    """Partition into pairwise disjoint A, C, B covering the graph with A
    anticomplete to B; a present center v must satisfy v in C inside N[v]."""
    if s.a & s.c or s.a & s.b or s.c & s.b:
        raise InputError("separation sides overlap")
    if (s.a | s.c | s.b) != g.verts:
        raise InputError("separation does not cover the vertex set")
    if neighborhood(g, s.a) & s.b:
        raise InputError("A has a neighbor in B")
    if s.center is not None:
        v = s.center
        if not ((s.c >> v) & 1):
            raise InputError("center outside its own C side")
        if s.c & ~g.closed_nbr(v):
            raise InputError("C is not inside the center's closed neighborhood")


def classify_balanced(g: Graph, w: WeightFn) -> tuple[int, int]:
    """(balanced_mask, unbalanced_mask): a vertex is balanced when every
    component of the graph minus its closed neighborhood weighs <= 1/2."""
    balanced = 0
    for v in bits(g.verts):
        rest = g.verts & ~g.closed_nbr(v)
        if all(w.leq(w.of(d), HALF) for d in components(g, rest)):
            balanced |= 1 << v
    return balanced, g.verts & ~balanced


def heaviest_component(g: Graph, w: WeightFn, x: int) -> int:
    """Heaviest component of the subgraph on x; ties favor the
    lexicographically least vertex set (ascending-id comparison)."""
    comps = components(g, x)
    if not comps:
        raise InputError("no components in an empty set")
    best = comps[0]
    best_w = w.of(best)
    for comp in comps[1:]:
        cw = w.of(comp)
        if cw > best_w or (cw == best_w and bit_list(comp) < bit_list(best)):
            best, best_w = comp, cw
    return best


def canonical_separation(g: Graph, w: WeightFn, v: int) -> Separation:
    """Canonical star separation of an unbalanced vertex: B is the
    heaviest far component, C the center plus its neighbors seen from B."""
    rest = g.verts & ~g.closed_nbr(v)
    heavy = [d for d in components(g, rest) if not w.leq(w.of(d), HALF)]
    if not heavy:
        raise InputError(f"vertex {v} is balanced; no canonical separation")
    b = heaviest_component(g, w, rest)
    c = (1 << v) | (g.adj[v] & neighborhood(g, b))
    a = g.verts & ~(b | c)
    sep = Separation(a=a, c=c, b=b, center=v)
    validate_separation(g, sep)
    if neighborhood(g, b) != c & ~(1 << v):
        raise HypothesisViolation(
            "N(B) != C minus the center on a canonical separation",
            witness=sep.as_json())
    return sep


def shield_check(s1: Separation, s2: Separation) -> bool:
    """s1 shields s2 when B1 together with C1 is inside B2 with C2."""
    return (s1.side_bc() & ~s2.side_bc()) == 0


def nearly_noncrossing(g: Graph, s1: Separation, s2: Separation) -> bool:
    """Every component of A1 union A2 is a component of A1 or of A2."""
    union = s1.a | s2.a
    if not union:
        return True
    comp1 = set(components(g, s1.a)) if s1.a else set()
    comp2 = set(components(g, s2.a)) if s2.a else set()
    return all(c in comp1 or c in comp2 for c in components(g, union))


@dataclass(frozen=True)
class OrderDigest:
    unbalanced: int
    pairs: frozenset[tuple[int, int]]   # (x, y) meaning x <= y in the order
    minimal: int
    separations: dict

    def leq(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs

    def as_json(self) -> dict:
        return {
            "U": bit_list(self.unbalanced),
            "pairs": sorted([list(p) for p in self.pairs]),
            "minimal": bit_list(self.minimal),
        }


def leq_a_order(g: Graph, w: WeightFn) -> OrderDigest:
    """Materialize the order on unbalanced vertices where x precedes y
    when y lies in the A side of x, and verify it is a partial order.

    Antisymmetry or transitivity failures raise with the violating pair;
    on diamond-free, C4-free graphs with no clique cutset they cannot
    occur.
    """
    _, u = classify_balanced(g, w)
    seps = {v: canonical_separation(g, w, v) for v in bits(u)}
    pairs = set()
    for x in bits(u):
        pairs.add((x, x))
        ax = seps[x].a
        for y in bits(u & ax):
            pairs.add((x, y))
    for (x, y) in list(pairs):
        if x != y and (y, x) in pairs:
            raise HypothesisViolation(
                "A-side order is not antisymmetric",
                witness={"x": x, "y": y})
    for (x, y) in list(pairs):
        for (y2, z) in list(pairs):
            if y == y2 and (x, z) not in pairs:
                raise HypothesisViolation(
                    "A-side order is not transitive",
                    witness={"x": x, "y": y, "z": z})
    minimal = 0
    for x in bits(u):
        if not any((y, x) in pairs for y in bits(u) if y != x):
            minimal |= 1 << x
    return OrderDigest(unbalanced=u, pairs=frozenset(pairs),
                       minimal=minimal, separations=seps)


def minimal_under_leq_a(seps: dict[int, Separation], subset: int) -> int:
    """Minimal elements of a subset of unbalanced vertices: x is minimal
    when no other subset member puts x in its A side."""
    minimal = 0
    for x in bits(subset):
        if not any((seps[y].a >> x) & 1 for y in bits(subset) if y != x):
            minimal |= 1 << x
    return minimal
