"""Smooth collections, revised separations, the central bag with its
inherited weights, and the separator lift back to the host graph.

The central bag is the intersection of all B-with-C sides of a smooth
collection.  Weights of the discarded A sides are pushed onto their
centers, so balanced separators found inside the bag lift to balanced
separators of the whole graph by adding the closed neighborhoods of the
centers they touch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolation, InputError
from .graph_core import (FLOAT_TOL, Graph, WeightFn, bit_list, bits,
                         components, mask_of, neighborhood)
from .separations import (HALF, Separation, canonical_separation,
                          classify_balanced, nearly_noncrossing,
                          validate_separation)


@dataclass(frozen=True)
class RevisedCollection:
    """Per-center separations whose C side is enlarged by the common
    neighborhoods with the other centers."""
    centers: tuple[int, ...]          # in collection order
    separations: tuple[Separation, ...]

    def as_json(self) -> dict:
        return {"centers": list(self.centers),
                "separations": [s.as_json() for s in self.separations]}


def revised_collection(g: Graph, w: WeightFn, x: int,
                       order: tuple[int, ...] | None = None) -> RevisedCollection:
    """Revised separations for a set of unbalanced vertices.

    For each center u: B is unchanged from the canonical separation, and
    C grows by every common neighborhood N(u) & N(v) over centers v
    adjacent to u.  The four containment relations tying the revised
    triple to the canonical one are validated; they are consequences of
    the construction, so a failure is an internal error.
    """
    _, unbal = classify_balanced(g, w)
    if x & ~unbal:
        raise InputError(
            f"revised collection needs unbalanced centers; "
            f"{bit_list(x & ~unbal)} are balanced")
    centers = tuple(order) if order is not None else tuple(bit_list(x))
    if mask_of(centers) != x:
        raise InputError("order does not enumerate the center set")
    seps = []
    for u in centers:
        canon = canonical_separation(g, w, u)
        b = canon.b
        c = (1 << u) | (g.adj[u] & neighborhood(g, b))
        for v in bits(g.adj[u] & x):
            c |= g.adj[u] & g.adj[v]
        a = g.verts & ~(b | c)
        sep = Separation(a=a, c=c, b=b, center=u)
        validate_separation(g, sep)
        if sep.b != canon.b:
            raise HypothesisViolation("revised B side changed", sep.as_json())
        if canon.c & ~sep.c or sep.c & ~g.closed_nbr(u):
            raise HypothesisViolation("revised C side out of bounds",
                                      sep.as_json())
        if sep.a & ~canon.a:
            raise HypothesisViolation("revised A side grew", sep.as_json())
        if (canon.a & ~g.adj[u]) & ~sep.a:
            raise HypothesisViolation("revised A side lost far vertices",
                                      sep.as_json())
        seps.append(sep)
    return RevisedCollection(centers=centers, separations=tuple(seps))


@dataclass(frozen=True)
class SmoothCollection:
    """Validated smooth collection: pairwise nearly non-crossing star
    separations, one per center, no center inside any A side."""
    centers: tuple[int, ...]
    separations: tuple[Separation, ...]

    def __len__(self) -> int:
        return len(self.separations)

    def center_mask(self) -> int:
        return mask_of(self.centers)

    def as_json(self) -> dict:
        return {"centers": list(self.centers),
                "separations": [s.as_json() for s in self.separations]}


def validate_smooth(g: Graph, separations, centers) -> SmoothCollection:
    """Check the three smoothness conditions in definition order (pairwise
    near-non-crossing, star shape at each center, no center inside any A
    side) and package the collection with its fixed center ordering.
    Violations report a witness."""
    separations = tuple(separations)
    centers = tuple(centers)
    if len(separations) != len(centers):
        raise InputError("need exactly one center per separation")
    if len(set(centers)) != len(centers):
        raise InputError("duplicate centers")
    for s in separations:
        validate_separation(g, Separation(s.a, s.c, s.b))
    k = len(separations)
    for i in range(k):
        for j in range(i + 1, k):
            if not nearly_noncrossing(g, separations[i], separations[j]):
                raise HypothesisViolation(
                    "collection members cross",
                    witness={"centers": [centers[i], centers[j]],
                             "A1": bit_list(separations[i].a),
                             "A2": bit_list(separations[j].a)})
    for v, s in zip(centers, separations):
        if not ((s.c >> v) & 1) or s.c & ~g.closed_nbr(v):
            raise HypothesisViolation(
                "collection member is not a star separation at its center",
                witness={"center": v, "C": bit_list(s.c)})
    cmask = mask_of(centers)
    for s in separations:
        if cmask & s.a:
            raise HypothesisViolation(
                "a center lies in an A side",
                witness={"A": bit_list(s.a),
                         "centers": bit_list(cmask & s.a)})
    return SmoothCollection(centers=centers, separations=separations)


@dataclass(frozen=True)
class CentralBag:
    beta: int
    a_star: tuple[int, ...]           # aligned with collection order
    weights: WeightFn                 # inherited weights, supported on beta
    collection: SmoothCollection

    def as_json(self) -> dict:
        return {"beta": bit_list(self.beta),
                "a_star": [bit_list(a) for a in self.a_star],
                "weights": self.weights.as_json()}


def central_bag(g: Graph, w: WeightFn, coll: SmoothCollection) -> CentralBag:
    """Intersection of the B-with-C sides, the first-owner partition of
    the union of A sides, and the inherited weights.

    Each component of the union of A sides must be an A-component of some
    member (a consequence of near-non-crossing); it is assigned to the
    earliest owner in the collection ordering.
    """
    beta = g.verts
    for s in coll.separations:
        beta &= s.side_bc()
    union_a = 0
    for s in coll.separations:
        union_a |= s.a
    a_star = [0] * len(coll)
    for comp in components(g, union_a):
        owner = next((i for i, s in enumerate(coll.separations)
                      if not (comp & ~s.a)), None)
        if owner is None:
            raise HypothesisViolation(
                "a component of the union of A sides fits no member",
                witness={"component": bit_list(comp)})
        a_star[owner] |= comp
    deltas = {}
    for i, v in enumerate(coll.centers):
        deltas[v] = w.of(a_star[i])
    w_bag = w.shifted(deltas) if deltas else w
    total = w_bag.of(beta)
    ok = (total == 1) if w_bag.exact else abs(float(total) - 1.0) <= FLOAT_TOL
    if coll.centers and not ok:
        raise HypothesisViolation(
            "inherited weights do not total 1 on the central bag",
            witness={"total": str(total)})
    if coll.center_mask() & ~beta:
        raise HypothesisViolation(
            "a center fell outside the central bag",
            witness={"centers": bit_list(coll.center_mask() & ~beta)})
    covered = 0
    for part in a_star:
        if part & covered:
            raise HypothesisViolation("A-side parts overlap", None)
        covered |= part
    if covered != union_a:
        raise HypothesisViolation("A-side parts do not cover the union", None)
    return CentralBag(beta=beta, a_star=tuple(a_star), weights=w_bag,
                      collection=coll)


def is_balanced_separator(g: Graph, w: WeightFn, region: int, x: int,
                          c=HALF) -> bool:
    """Every component of region minus x weighs at most c under w."""
    rest = region & ~x
    return all(w.leq(w.of(d), c) for d in components(g, rest))


def grow_separator(g: Graph, w: WeightFn, bag: CentralBag, x: int,
                   c=HALF) -> int:
    """Lift a balanced separator of the central bag to the host graph by
    adding the bag part of the closed neighborhoods of touched centers.

    Both the input (balanced on the bag under inherited weights) and the
    output (balanced on the host under the original weights) are
    verified, never assumed.
    """
    if x & ~bag.beta:
        raise InputError("separator must lie inside the central bag")
    if not is_balanced_separator(g, bag.weights, bag.beta, x, c):
        raise InputError("input is not a balanced separator of the bag")
    for s in bag.collection.separations:
        if not w.leq(w.of(s.a), HALF):
            raise HypothesisViolation(
                "an A side outweighs 1/2",
                witness={"center": s.center, "weight": str(w.of(s.a))})
    touched = x & bag.collection.center_mask()
    y = x
    for v in bits(touched):
        y |= g.closed_nbr(v) & bag.beta
    if not is_balanced_separator(g, w, g.verts, y, c):
        heavy = [bit_list(d) for d in components(g, g.verts & ~y)
                 if not w.leq(w.of(d), c)]
        raise HypothesisViolation(
            "lifted separator is not balanced on the host graph",
            witness={"Y": bit_list(y), "heavy_components": heavy})
    return y
