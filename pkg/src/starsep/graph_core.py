"""Immutable bitset graphs, weight functions, and elementary queries.

Vertices are dense integers 0..n-1 and vertex sets are plain Python ints
used as bitmasks.  Arbitrary-precision ints make the same representation
work past 64 vertices, so there is a single code path at any desk scale.
Induced subgraphs keep the original vertex identities by carrying an
active-vertex mask instead of relabeling.

Everything here is immutable after construction; all operations are pure
and safe to call concurrently on shared graphs.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

FLOAT_TOL = 1e-9


def env_cap(name: str, default: int) -> int:
    """Desk-scale cap, overridable through STARSEP_MAX_N (unsupported
    beyond the defaults; documented for experiments only)."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# bitmask helpers


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    if not mask:
        raise InputError("empty mask has no lowest bit")
    return (mask & -mask).bit_length() - 1


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    """All k-subsets of a mask, in lexicographic order of the sorted
    vertex tuples."""
    elems = bit_list(mask)
    n = len(elems)
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    idx = list(range(k))
    while True:
        yield mask_of(elems[i] for i in idx)
        # next combination
        for i in reversed(range(k)):
            if idx[i] != i + n - k:
                break
        else:
            return
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


# ---------------------------------------------------------------------------
# graphs


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency.

    ``verts`` is the mask of active vertices: induced subgraphs share the
    universe 0..n-1 and simply restrict the mask, so vertex identities are
    stable across restriction.  No loops, no parallel edges.
    """

    __slots__ = ("n", "verts", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        adj = [0] * n
        full = (1 << n) - 1
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a pair")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "verts", full)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _raw(cls, n: int, verts: int, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "verts", verts)
        object.__setattr__(g, "adj", adj)
        return g

    # -- queries ------------------------------------------------------

    def num_vertices(self) -> int:
        return popcount(self.verts)

    def vertex_list(self) -> list[int]:
        return bit_list(self.verts)

    def nbr(self, v: int) -> int:
        """Open neighborhood of v as a mask."""
        return self.adj[v]

    def closed_nbr(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in bits(self.verts):
            rest = self.adj[u] & ~((1 << (u + 1)) - 1)
            for v in bits(rest):
                out.append((u, v))
        return out

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in bits(self.verts)) // 2

    def check_vertex_set(self, x: int) -> None:
        if x & ~self.verts:
            bad = bit_list(x & ~self.verts)
            raise InputError(f"vertices {bad} are not in the graph")

    def induced(self, x: int) -> "Graph":
        """Subgraph induced on the mask x; vertex identities preserved."""
        self.check_vertex_set(x)
        adj = tuple(self.adj[v] & x if (x >> v) & 1 else 0
                    for v in range(self.n))
        return Graph._raw(self.n, x, adj)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.verts == other.verts and self.adj == other.adj)

    def __hash__(self):
        return hash((self.n, self.verts, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, verts={self.vertex_list()}, edges={self.edges()})"


def neighborhood(g: Graph, x: int, closed: bool = False) -> int:
    """Open (vertices outside x with a neighbor in x) or closed (that set
    united with x) neighborhood of a vertex set."""
    g.check_vertex_set(x)
    m = 0
    for v in bits(x):
        m |= g.adj[v]
    m &= g.verts
    return (m | x) if closed else (m & ~x)


def components(g: Graph, x: int) -> list[int]:
    """Connected components of the subgraph induced on x, as masks,
    ordered by smallest contained vertex."""
    g.check_vertex_set(x)
    out = []
    rest = x
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & x & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def induced(g: Graph, x: int) -> Graph:
    return g.induced(x)


def is_connected(g: Graph, x: int | None = None) -> bool:
    if x is None:
        x = g.verts
    return len(components(g, x)) <= 1


# ---------------------------------------------------------------------------
# weight functions


def _parse_weight(value):
    """Accept ints, Fractions, 'p/q' strings and floats.  Exact inputs
    stay exact."""
    if isinstance(value, bool):
        raise InputError(f"weight {value!r} is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse weight {value!r}")
    if isinstance(value, float):
        return value
    raise InputError(f"cannot parse weight {value!r}")


class WeightFn:
    """Normalized vertex weights on a host graph.

    Weights supplied as ints, Fractions or 'p/q' strings are kept as exact
    rationals, so threshold comparisons (such as against 1/2) have
    reproducible tie behavior.  Float inputs are compared with a 1e-9
    tolerance.  The total must be 1 (within tolerance for floats);
    anything else is rejected rather than rescaled.
    """

    __slots__ = ("n", "values", "exact")

    def __init__(self, n: int, values: Sequence):
        if len(values) != n:
            raise InputError(f"expected {n} weights, got {len(values)}")
        parsed = [_parse_weight(v) for v in values]
        exact = all(isinstance(v, Fraction) for v in parsed)
        if not exact:
            parsed = [float(v) for v in parsed]
        for v in parsed:
            lo = v >= 0 if exact else v >= -FLOAT_TOL
            hi = v <= 1 if exact else v <= 1 + FLOAT_TOL
            if not (lo and hi):
                raise InputError(f"weight {v} outside [0, 1]")
        total = sum(parsed)
        ok = (total == 1) if exact else abs(total - 1.0) <= FLOAT_TOL
        if not ok:
            raise InputError(f"weights must sum to 1, got {total}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", tuple(parsed))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, *a):
        raise AttributeError("WeightFn is immutable")

    @classmethod
    def uniform(cls, g: Graph) -> "WeightFn":
        return cls.uniform_on(g, g.verts)

    @classmethod
    def uniform_on(cls, g: Graph, support: int) -> "WeightFn":
        """Exact 1/|support| on the given mask, zero elsewhere."""
        g.check_vertex_set(support)
        k = popcount(support)
        if k == 0:
            raise InputError("uniform weight needs a nonempty support")
        w = Fraction(1, k)
        return cls(g.n, [w if (support >> v) & 1 else Fraction(0)
                         for v in range(g.n)])

    @classmethod
    def _raw(cls, n: int, values: tuple, exact: bool) -> "WeightFn":
        w = cls.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "values", values)
        object.__setattr__(w, "exact", exact)
        return w

    def of(self, mask: int):
        """Total weight of a vertex mask."""
        total = Fraction(0) if self.exact else 0.0
        for v in bits(mask):
            total += self.values[v]
        return total

    def leq(self, value, bound) -> bool:
        """value <= bound, with float tolerance when inexact."""
        if self.exact:
            return value <= bound
        return float(value) <= float(bound) + FLOAT_TOL

    def shifted(self, deltas: dict[int, object]) -> "WeightFn":
        """New WeightFn with values[v] += deltas[v]; used for inherited
        weights, where totals stay 1 by construction."""
        vals = list(self.values)
        for v, d in deltas.items():
            vals[v] = vals[v] + d
        return WeightFn._raw(self.n, tuple(vals), self.exact)

    def as_json(self) -> list:
        return [str(v) if isinstance(v, Fraction) else v for v in self.values]

    def __repr__(self):
        return f"WeightFn({list(self.values)!r})"


# ---------------------------------------------------------------------------
# serialization: edge-list JSON, graph6, DIMACS col


def graph_to_json_obj(g: Graph, w: WeightFn | None = None) -> dict:
    obj = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if popcount(g.verts) != g.n:
        obj["vertices"] = g.vertex_list()
    if w is not None:
        obj["weights"] = w.as_json()
    return obj


def graph_from_json_obj(obj) -> tuple[Graph, WeightFn | None]:
    if not isinstance(obj, dict) or "n" not in obj:
        raise InputError("graph JSON must be an object with an 'n' field")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise InputError(f"bad vertex count {n!r}")
    g = Graph(n, obj.get("edges", []))
    if "vertices" in obj:
        g = g.induced(mask_of(obj["vertices"]))
    w = None
    if obj.get("weights") is not None:
        w = WeightFn(n, obj["weights"])
    return g, w


def dumps_graph(g: Graph, w: WeightFn | None = None) -> str:
    return json.dumps(graph_to_json_obj(g, w), sort_keys=True)


def loads_graph(text: str) -> tuple[Graph, WeightFn | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON: {e}")
    return graph_from_json_obj(obj)


def to_graph6(g: Graph) -> str:
    """graph6 encoding of the active subgraph (identities are compacted
    to 0..k-1 in vertex order; format limit n <= 258047)."""
    vl = g.vertex_list()
    k = len(vl)
    pos = {v: i for i, v in enumerate(vl)}
    if k > 258047:
        raise CapacityError("graph6 supports at most 258047 vertices")
    if k <= 62:
        head = chr(k + 63)
    else:
        head = chr(126) + "".join(chr(((k >> s) & 63) + 63)
                                  for s in (12, 6, 0))
    bits_out = []
    for j in range(1, k):
        for i in range(j):
            bits_out.append(1 if g.has_edge(vl[i], vl[j]) else 0)
    while len(bits_out) % 6:
        bits_out.append(0)
    body = []
    for i in range(0, len(bits_out), 6):
        val = 0
        for b in bits_out[i:i + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise InputError("empty graph6 string")
    if ord(s[0]) == 126:
        if len(s) >= 4 and ord(s[1]) == 126:
            raise CapacityError("graph6 inputs beyond 258047 vertices unsupported")
        if len(s) < 4:
            raise InputError("truncated graph6 header")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 0:
        raise InputError("bad graph6 header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise InputError("graph6 body too short")
    bitstream = []
    for c in body[:need]:
        val = ord(c) - 63
        if not 0 <= val < 64:
            raise InputError(f"bad graph6 byte {c!r}")
        bitstream.extend((val >> s_) & 1 for s_ in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def from_dimacs(text: str) -> Graph:
    """DIMACS col format: 'p edge <n> <m>' header, 'e u v' lines, 1-indexed."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 3 or parts[1] not in ("edge", "edges", "col"):
                raise InputError(f"line {lineno}: bad DIMACS header")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before header")
            if len(parts) < 3:
                raise InputError(f"line {lineno}: bad edge line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                continue
            edges.append((u, v))
    if n is None:
        raise InputError("missing DIMACS 'p' header")
    seen = set()
    uniq = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            uniq.append(key)
    return Graph(n, uniq)


def load_graph_file(path: str) -> tuple[Graph, WeightFn | None]:
    """Load a graph by extension: .json (edge list), .g6/.graph6, .col."""
    with open(path) as fh:
        text = fh.read()
    lower = path.lower()
    if lower.endswith(".g6") or lower.endswith(".graph6"):
        return from_graph6(text), None
    if lower.endswith(".col") or lower.endswith(".dimacs"):
        return from_dimacs(text), None
    return loads_graph(text)
