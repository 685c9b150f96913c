"""Detection of the forbidden induced structures and the wheel taxonomy.

Strategy is bounded exhaustive search with pruning (degree filters, chord
checks during extension), sized for graphs up to a few dozen vertices.
Detectors return concrete vertex embeddings that re-verify against the
definitions by direct adjacency checks; the test suite compares them with
an independent subset-enumeration oracle that shares no code with them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .errors import InputError
from .graph_core import Graph, bits, mask_of, popcount

# deterministic obstruction search order for membership tests
_KIND_ORDER = ("C4", "diamond", "K_t", "theta", "pyramid", "prism", "even_wheel")


class WheelKind(Enum):
    WHEEL = "wheel"
    LINE_WHEEL = "line_wheel"
    EVEN_WHEEL = "even_wheel"
    TWIN_WHEEL = "twin_wheel"
    SHORT_PYRAMID = "short_pyramid"
    PROPER_WHEEL = "proper_wheel"
    UNIVERSAL_WHEEL = "universal_wheel"


# ---------------------------------------------------------------------------
# hole enumeration


def holes(g: Graph, within: int | None = None,
          max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Enumerate holes (induced cycles of length >= 4) inside a mask.

    Holes come out in increasing length; within one length, canonical
    tuples (minimum vertex first, then the smaller of its two hole
    neighbors) in lexicographic order.  Extension prunes on chords.
    """
    x = g.verts if within is None else within
    g.check_vertex_set(x)
    n_active = popcount(x)
    top = n_active if max_len is None else min(max_len, n_active)
    for length in range(4, top + 1):
        yield from _holes_of_length(g, x, length)


def _holes_of_length(g, x, length):
    for v0 in bits(x):
        allowed = x & ~((1 << (v0 + 1)) - 1)  # only vertices above v0
        for v1 in bits(g.adj[v0] & allowed):
            yield from _extend_hole(g, allowed, length, (v0, v1),
                                    (1 << v0) | (1 << v1), 0)


def _extend_hole(g, allowed, length, path, used, banned):
    # banned = vertices adjacent to some middle vertex (chord makers)
    last = path[-1]
    if len(path) == length - 1:
        closers = g.adj[last] & g.adj[path[0]] & allowed & ~used & ~banned
        for w in bits(closers):
            if w > path[1]:
                yield path + (w,)
        return
    cands = g.adj[last] & allowed & ~used & ~banned & ~g.adj[path[0]]
    new_banned = banned | g.adj[last]
    for w in bits(cands):
        yield from _extend_hole(g, allowed, length, path + (w,),
                                used | (1 << w), new_banned)


# ---------------------------------------------------------------------------
# induced path enumeration (shared by the three-path detectors)


def _induced_paths(g, a, b, within, min_edges=1):
    """All induced a-b paths of length >= min_edges inside a mask, as
    vertex tuples starting at a, in lexicographic extension order."""
    if not ((within >> a) & 1 and (within >> b) & 1):
        return []
    out = []
    b_bit = 1 << b

    def extend(path, forbidden):
        # forbidden = path so far plus everything adjacent to path[:-1]
        last = path[-1]
        if (g.adj[last] & b_bit) and not (forbidden & b_bit) \
                and len(path) >= min_edges:
            out.append(path + (b,))
        new_forbidden = forbidden | g.adj[last] | (1 << last)
        for w in bits(g.adj[last] & within & ~forbidden & ~b_bit):
            extend(path + (w,), new_forbidden)

    extend((a,), 1 << a)
    return out


# ---------------------------------------------------------------------------
# fixed small patterns


def detect_fixed(g: Graph, kind: str, t: int = 4) -> Optional[tuple[int, ...]]:
    """Find an induced C4, diamond, or K_t; returns the lexicographically
    least embedding or None."""
    if kind == "C4":
        return _find_c4(g)
    if kind == "diamond":
        return _find_diamond(g)
    if kind in ("K_t", "K"):
        if t < 3:
            raise InputError("clique detection needs t >= 3")
        return _find_clique(g, t)
    raise InputError(f"unknown fixed pattern {kind!r}")


def _find_c4(g):
    vl = g.vertex_list()
    for quad in itertools.combinations(vl, 4):
        m = mask_of(quad)
        if all(popcount(g.adj[v] & m) == 2 for v in quad):
            a = quad[0]
            nb = [v for v in quad[1:] if g.has_edge(a, v)]
            far = next(v for v in quad[1:] if not g.has_edge(a, v))
            return (a, nb[0], far, nb[1])
    return None


def _find_diamond(g):
    vl = g.vertex_list()
    for quad in itertools.combinations(vl, 4):
        m = mask_of(quad)
        edge_cnt = sum(popcount(g.adj[v] & m) for v in quad) // 2
        if edge_cnt != 5:
            continue
        a, b = next((u, v) for u, v in itertools.combinations(quad, 2)
                    if not g.has_edge(u, v))
        hub = tuple(v for v in quad if v not in (a, b))
        return (hub[0], hub[1], a, b)
    return None


def _find_clique(g, t):
    def grow(cur, cand_mask):
        if len(cur) == t:
            return tuple(cur)
        for v in bits(cand_mask):
            got = grow(cur + [v], cand_mask & g.adj[v])
            if got:
                return got
        return None

    for v in g.vertex_list():
        above = g.adj[v] & g.verts & ~((1 << (v + 1)) - 1)
        got = grow([v], above)
        if got:
            return got
    return None


def clique_number(g: Graph) -> int:
    """Size of the largest clique, by incremental clique sweeps."""
    if not g.verts:
        return 0
    w = 1
    while popcount(g.verts) > w and _find_clique(g, w + 1):
        w += 1
    return w


def _triangles(g):
    out = []
    for u in g.vertex_list():
        above_u = g.adj[u] & g.verts & ~((1 << (u + 1)) - 1)
        for v in bits(above_u):
            both = above_u & g.adj[v] & ~((1 << (v + 1)) - 1)
            for w in bits(both):
                out.append((u, v, w))
    return out


# ---------------------------------------------------------------------------
# three-path configurations


@dataclass(frozen=True)
class ThetaWitness:
    a: int
    b: int
    paths: tuple[tuple[int, ...], ...]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(v for p in self.paths for v in p)))


def detect_theta(g: Graph) -> Optional[ThetaWitness]:
    """Two non-adjacent branch vertices joined by three induced paths of
    length >= 2 with pairwise disjoint, anticomplete interiors."""
    vl = g.vertex_list()
    for a, b in itertools.combinations(vl, 2):
        if g.has_edge(a, b):
            continue
        if popcount(g.adj[a] & g.verts) < 3 or popcount(g.adj[b] & g.verts) < 3:
            continue
        paths = _induced_paths(g, a, b, g.verts, min_edges=2)
        triple = _compatible_triple(g, paths)
        if triple:
            return ThetaWitness(a, b, triple)
    return None


def _compatible_triple(g, paths):
    """First path triple whose interiors are pairwise disjoint and
    anticomplete."""
    interiors = []
    conflicts = []
    for p in paths:
        im = mask_of(p[1:-1])
        cm = im
        for v in p[1:-1]:
            cm |= g.adj[v]
        interiors.append(im)
        conflicts.append(cm)
    k = len(paths)
    for i in range(k):
        ci = conflicts[i]
        for j in range(i + 1, k):
            if interiors[j] & ci:
                continue
            cij = ci | conflicts[j]
            for l in range(j + 1, k):
                if not (interiors[l] & cij):
                    return (paths[i], paths[j], paths[l])
    return None


@dataclass(frozen=True)
class PyramidWitness:
    apex: int
    base: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]  # paths[i] runs apex .. base[i]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(v for p in self.paths for v in p)))


def detect_pyramid(g: Graph, apex: int | None = None) -> Optional[PyramidWitness]:
    """Apex joined to a triangle by three paths meeting only at the apex,
    at least two of them of length >= 2; the only edges between different
    legs are the triangle edges.  An explicit apex restricts the search."""
    tris = _triangles(g)
    if not tris:
        return None
    apexes = g.vertex_list() if apex is None else [apex]
    for tri in tris:
        tri_mask = mask_of(tri)
        for a in apexes:
            if (1 << a) & tri_mask:
                continue
            if popcount(g.adj[a] & tri_mask) >= 2:
                continue  # would force two legs of length one
            per_corner = []
            for b in tri:
                others = tri_mask & ~(1 << b)
                per_corner.append(_induced_paths(g, a, b, g.verts & ~others))
            w = _pyramid_join(g, a, tri, per_corner)
            if w:
                return w
    return None


def _pyramid_join(g, a, tri, per_corner):
    b1, b2, b3 = tri
    for p1 in per_corner[0]:
        for p2 in per_corner[1]:
            if not _legs_ok(g, p1, p2, (b1, b2)):
                continue
            for p3 in per_corner[2]:
                if not (_legs_ok(g, p1, p3, (b1, b3))
                        and _legs_ok(g, p2, p3, (b2, b3))):
                    continue
                lens = sorted(len(p) - 1 for p in (p1, p2, p3))
                if lens[1] < 2:  # need at least two legs of length >= 2
                    continue
                return PyramidWitness(a, tri, (p1, p2, p3))
    return None


def _legs_ok(g, p, q, base_edge):
    """Legs share only the apex; the sole edge between p[1:] and q[1:]
    is the base edge."""
    pm = mask_of(p[1:])
    qm = mask_of(q[1:])
    if pm & qm:
        return False
    eb, ee = base_edge
    for v in p[1:]:
        allowed = (1 << ee) if v == eb else 0
        if g.adj[v] & qm & ~allowed:
            return False
    return True


@dataclass(frozen=True)
class PrismWitness:
    tri_a: tuple[int, int, int]
    tri_b: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]  # paths[i] runs tri_a[i] .. tri_b[i]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(v for p in self.paths for v in p)))


def detect_prism(g: Graph) -> Optional[PrismWitness]:
    """Two disjoint triangles joined by three paths whose only cross edges
    are the triangle edges."""
    tris = _triangles(g)
    for ta, tb in itertools.combinations(tris, 2):
        if mask_of(ta) & mask_of(tb):
            continue
        for perm in itertools.permutations(tb):
            w = _prism_join(g, ta, perm)
            if w:
                return w
    return None


def _prism_join(g, ta, tb):
    legs = []
    corner_mask = mask_of(ta) | mask_of(tb)
    for i in range(3):
        exclude = corner_mask & ~(1 << ta[i]) & ~(1 << tb[i])
        ps = _induced_paths(g, ta[i], tb[i], g.verts & ~exclude)
        if not ps:
            return None
        legs.append(ps)
    for p1 in legs[0]:
        for p2 in legs[1]:
            if not _prism_pair_ok(g, p1, p2, (ta[0], ta[1]), (tb[0], tb[1])):
                continue
            for p3 in legs[2]:
                if (_prism_pair_ok(g, p1, p3, (ta[0], ta[2]), (tb[0], tb[2]))
                        and _prism_pair_ok(g, p2, p3, (ta[1], ta[2]),
                                           (tb[1], tb[2]))):
                    return PrismWitness(ta, tb, (p1, p2, p3))
    return None


def _prism_pair_ok(g, p, q, a_edge, b_edge):
    """Exactly the two triangle edges run between the full paths."""
    pm, qm = mask_of(p), mask_of(q)
    if pm & qm:
        return False
    if not (g.has_edge(*a_edge) and g.has_edge(*b_edge)):
        return False
    for v in p:
        allowed = 0
        if v == a_edge[0]:
            allowed |= 1 << a_edge[1]
        if v == b_edge[0]:
            allowed |= 1 << b_edge[1]
        if g.adj[v] & qm & ~allowed:
            return False
    return True


# ---------------------------------------------------------------------------
# wheels


@dataclass(frozen=True)
class WheelWitness:
    """One hole/center pair with its taxonomy flags and sectors."""
    hole: tuple[int, ...]
    center: int
    spokes: tuple[int, ...]           # N(center) on the hole, in hole order
    is_wheel: bool
    is_line_wheel: bool
    is_even_wheel: bool
    is_twin_wheel: bool
    is_short_pyramid: bool
    is_proper_wheel: bool
    is_universal_wheel: bool
    sectors: tuple[tuple[int, ...], ...] = field(default=())

    def long_sectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.sectors if len(s) > 2)

    def kinds(self) -> list[str]:
        pairs = (
            (WheelKind.WHEEL, self.is_wheel),
            (WheelKind.LINE_WHEEL, self.is_line_wheel),
            (WheelKind.EVEN_WHEEL, self.is_even_wheel),
            (WheelKind.TWIN_WHEEL, self.is_twin_wheel),
            (WheelKind.SHORT_PYRAMID, self.is_short_pyramid),
            (WheelKind.PROPER_WHEEL, self.is_proper_wheel),
            (WheelKind.UNIVERSAL_WHEEL, self.is_universal_wheel),
        )
        return [k.value for k, flag in pairs if flag]

    def as_json(self) -> dict:
        return {
            "hole": list(self.hole),
            "center": self.center,
            "spokes": list(self.spokes),
            "kinds": self.kinds(),
            "sectors": [{"path": list(s), "long": len(s) > 2}
                        for s in self.sectors],
        }


def make_wheel_witness(g: Graph, hole: tuple[int, ...], center: int) -> WheelWitness:
    """Classify a hole/center pair (center off the hole, >= 3 neighbors
    on it) against every wheel kind.

    A wheel proper needs three pairwise non-adjacent spokes.  A line wheel
    has exactly four spokes forming two disjoint edges.  An even wheel is
    a line wheel or a wheel with an even spoke count.  Twin wheels (three
    consecutive spokes) and short pyramids (three spokes, exactly one
    adjacent pair) are the non-proper shapes.
    """
    hole_mask = mask_of(hole)
    nbrs = g.adj[center] & hole_mask
    spokes = tuple(v for v in hole if (nbrs >> v) & 1)
    k = len(spokes)

    adj_pairs = sum(1 for u, v in itertools.combinations(spokes, 2)
                    if g.has_edge(u, v))
    wheel = _has_independent_triple(g, spokes)
    line = k == 4 and adj_pairs == 2 and _is_two_disjoint_edges(g, spokes)
    twin = k == 3 and adj_pairs == 2
    short_pyr = k == 3 and adj_pairs == 1
    universal = nbrs == hole_mask
    path_of_len_one = k == 2 and adj_pairs == 1
    even = line or (wheel and k % 2 == 0 and not path_of_len_one)
    proper = wheel and not twin and not short_pyr

    return WheelWitness(
        hole=hole, center=center, spokes=spokes,
        is_wheel=wheel, is_line_wheel=line, is_even_wheel=even,
        is_twin_wheel=twin, is_short_pyramid=short_pyr,
        is_proper_wheel=proper, is_universal_wheel=universal,
        sectors=_sectors(hole, nbrs))


def _has_independent_triple(g, spokes):
    for u, v, w in itertools.combinations(spokes, 3):
        if not (g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w)):
            return True
    return False


def _is_two_disjoint_edges(g, spokes):
    pairs = [(u, v) for u, v in itertools.combinations(spokes, 2)
             if g.has_edge(u, v)]
    if len(pairs) != 2:
        return False
    (a, b), (c, d) = pairs
    return len({a, b, c, d}) == 4


def _sectors(hole, nbr_mask):
    """Hole arcs between consecutive spokes, endpoints included."""
    L = len(hole)
    positions = [i for i, v in enumerate(hole) if (nbr_mask >> v) & 1]
    if len(positions) < 2:
        return ()
    out = []
    for a, b in zip(positions, positions[1:] + [positions[0] + L]):
        out.append(tuple(hole[i % L] for i in range(a, b + 1)))
    return tuple(out)


def classify_wheels(g: Graph, within: int | None = None) -> list[WheelWitness]:
    """One witness per (center, kind); holes are scanned in increasing
    length, so each witness uses the earliest qualifying hole."""
    x = g.verts if within is None else within
    seen: dict[tuple[int, str], WheelWitness] = {}
    for hole in holes(g, within=x):
        hole_mask = mask_of(hole)
        for v in bits(x & ~hole_mask):
            if popcount(g.adj[v] & hole_mask) < 3:
                continue
            w = make_wheel_witness(g, hole, v)
            for kind in w.kinds():
                seen.setdefault((v, kind), w)
    order = {k.value: i for i, k in enumerate(WheelKind)}
    return [seen[key] for key in sorted(seen, key=lambda kv: (kv[0], order[kv[1]]))]


def hub_set(g: Graph, x: int) -> int:
    """Vertices of x centering a wheel whose hole lies inside x."""
    g.check_vertex_set(x)
    hubs = 0
    for hole in holes(g, within=x):
        hole_mask = mask_of(hole)
        for v in bits(x & ~hole_mask & ~hubs):
            nbrs_on = g.adj[v] & hole_mask
            if popcount(nbrs_on) < 3:
                continue
            spokes = tuple(u for u in hole if (nbrs_on >> u) & 1)
            if _has_independent_triple(g, spokes):
                hubs |= 1 << v
    return hubs


def find_even_wheel(g: Graph) -> Optional[WheelWitness]:
    for hole in holes(g):
        hole_mask = mask_of(hole)
        for v in bits(g.verts & ~hole_mask):
            if popcount(g.adj[v] & hole_mask) < 3:
                continue
            w = make_wheel_witness(g, hole, v)
            if w.is_even_wheel:
                return w
    return None


# ---------------------------------------------------------------------------
# class membership


@dataclass(frozen=True)
class ObstructionReport:
    member: bool
    t: int
    variant: str
    kind: Optional[str] = None
    embedding: tuple[int, ...] = ()
    detail: object = None

    def as_json(self) -> dict:
        return {
            "member": self.member,
            "t": self.t,
            "variant": self.variant,
            "obstruction": None if self.member else {
                "kind": self.kind,
                "vertices": list(self.embedding),
            },
        }


def class_membership(g: Graph, t: int, variant: str = "C_t") -> ObstructionReport:
    """Decide membership by searching obstructions in a fixed order
    (C4, diamond, K_t, theta, pyramid, prism, even wheel); the 'C_t_star'
    variant skips the pyramid test."""
    if t < 4:
        raise InputError("class membership needs t >= 4")
    if variant not in ("C_t", "C_t_star", "star"):
        raise InputError(f"unknown variant {variant!r}")
    star = variant != "C_t"
    for kind in _KIND_ORDER:
        if kind == "pyramid" and star:
            continue
        if kind in ("C4", "diamond"):
            emb = detect_fixed(g, kind)
            if emb:
                return ObstructionReport(False, t, variant, kind, emb)
        elif kind == "K_t":
            emb = detect_fixed(g, "K_t", t)
            if emb:
                return ObstructionReport(False, t, variant, "K_t", emb)
        elif kind == "theta":
            w = detect_theta(g)
            if w:
                return ObstructionReport(False, t, variant, "theta",
                                         w.vertices(), w)
        elif kind == "pyramid":
            w = detect_pyramid(g)
            if w:
                return ObstructionReport(False, t, variant, "pyramid",
                                         w.vertices(), w)
        elif kind == "prism":
            w = detect_prism(g)
            if w:
                return ObstructionReport(False, t, variant, "prism",
                                         w.vertices(), w)
        else:
            w = find_even_wheel(g)
            if w:
                emb = tuple(sorted(set(w.hole) | {w.center}))
                return ObstructionReport(False, t, variant, "even_wheel",
                                         emb, w)
    return ObstructionReport(True, t, variant)


def verify_obstruction(g: Graph, kind: str, embedding: tuple[int, ...],
                       t: int = 4) -> bool:
    """Re-check that an embedding induces the claimed obstruction by
    rerunning the matching detector on the induced subgraph."""
    sub = g.induced(mask_of(embedding))
    if kind == "C4":
        return _find_c4(sub) is not None
    if kind == "diamond":
        return _find_diamond(sub) is not None
    if kind == "K_t":
        return _find_clique(sub, t) is not None
    if kind == "theta":
        return detect_theta(sub) is not None
    if kind == "pyramid":
        return detect_pyramid(sub) is not None
    if kind == "prism":
        return detect_prism(sub) is not None
    if kind == "even_wheel":
        return find_even_wheel(sub) is not None
    raise InputError(f"unknown obstruction kind {kind!r}")
