"""Named witness graphs and seeded random members for property testing.

Builders verify themselves with a detector round trip where the intended
structure has one.  Random sampling is rejection plus repair: sparse seeds,
then isolate one endpoint of each obstruction found until membership holds
or the budget runs out.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .detectors import (class_membership, detect_fixed, detect_prism,
                        detect_pyramid, detect_theta, hub_set,
                        ObstructionReport)
from .errors import InputError, SamplingError
from .graph_core import Graph, bit_list, env_cap

SAMPLE_CAP = 32


# ---------------------------------------------------------------------------
# named constructions


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def diamond_graph() -> Graph:
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert detect_fixed(g, "diamond") is not None
    return g


def bowtie_graph() -> Graph:
    # two triangles sharing vertex 0
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def theta_graph(l1: int, l2: int, l3: int) -> Graph:
    """Branch vertices 0 (a) and 1 (b) joined by paths of the given
    lengths, each at least two."""
    lens = (l1, l2, l3)
    if any(l < 2 for l in lens):
        raise InputError("theta paths must have length at least two")
    edges = []
    nxt = 2
    for l in lens:
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    g = Graph(nxt, edges)
    assert detect_theta(g) is not None
    return g


def pyramid_graph(l1: int, l2: int, l3: int) -> Graph:
    """Apex 0, base triangle 1,2,3, legs of the given lengths (at most
    one of them equal to one)."""
    lens = (l1, l2, l3)
    if any(l < 1 for l in lens):
        raise InputError("pyramid legs must have length at least one")
    if sum(1 for l in lens if l >= 2) < 2:
        raise InputError("at least two pyramid legs must have length >= 2")
    edges = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for i, l in enumerate(lens):
        base = 1 + i
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, base))
    g = Graph(nxt, edges)
    assert detect_pyramid(g) is not None
    return g


def prism_graph(l1: int, l2: int, l3: int) -> Graph:
    """Triangles 0,1,2 and 3,4,5 joined by paths of the given lengths."""
    lens = (l1, l2, l3)
    if any(l < 1 for l in lens):
        raise InputError("prism paths must have length at least one")
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, l in enumerate(lens):
        prev = i
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 3 + i))
    g = Graph(nxt, edges)
    assert detect_prism(g) is not None
    return g


def wheel_graph(n: int, spokes: tuple[int, ...]) -> Graph:
    """Cycle 0..n-1 plus a hub (vertex n) adjacent to the given spoke
    positions; positions are 1-based along the cycle, so wheel_graph(9,
    (1, 4, 7)) attaches the hub to the 1st, 4th and 7th cycle vertices."""
    if n < 4:
        raise InputError("wheel cycle needs at least four vertices")
    pos = sorted(set(spokes))
    if not pos or pos[0] < 1 or pos[-1] > n:
        raise InputError("spoke positions must lie in 1..n")
    edges = [(i, (i + 1) % n) for i in range(n)]
    hub = n
    for p in pos:
        edges.append((hub, p - 1))
    return Graph(n + 1, edges)


def w93_graph() -> Graph:
    """Nine-cycle 0..8 plus hub 9 adjacent to vertices 0, 3, 6."""
    g = wheel_graph(9, (1, 4, 7))
    assert hub_set(g, g.verts) == 1 << 9
    return g


_MAKE_RE = re.compile(r"^([A-Za-z_]+)\s*\(([^)]*)\)$")


def make(name: str) -> Graph:
    """Build a named graph from a compact identifier.

    Accepts P<n>, C<n>, K<n>, W93, diamond, bowtie, THETA(l1,l2,l3),
    PRISM(l1,l2,l3), PYRAMID(l1,l2,l3), WHEEL(n,{p1,p2,...}).
    """
    s = name.strip()
    if s == "W93":
        return w93_graph()
    if s == "diamond":
        return diamond_graph()
    if s == "bowtie":
        return bowtie_graph()
    m = re.match(r"^([PCK])(\d+)$", s)
    if m:
        kind, num = m.group(1), int(m.group(2))
        if kind == "P":
            return path_graph(num)
        if kind == "C":
            return cycle_graph(num)
        return complete_graph(num)
    m = _MAKE_RE.match(s)
    if m:
        kind = m.group(1).upper()
        body = m.group(2)
        if kind == "WHEEL":
            nums = [int(x) for x in re.findall(r"\d+", body)]
            if len(nums) < 4:
                raise InputError(f"WHEEL needs n and at least 3 spokes: {name!r}")
            return wheel_graph(nums[0], tuple(nums[1:]))
        nums = [int(x) for x in body.split(",")]
        if len(nums) != 3:
            raise InputError(f"{kind} takes three lengths: {name!r}")
        if kind == "THETA":
            return theta_graph(*nums)
        if kind == "PRISM":
            return prism_graph(*nums)
        if kind == "PYRAMID":
            return pyramid_graph(*nums)
    raise InputError(f"unknown named graph {name!r}")


# ---------------------------------------------------------------------------
# random sampling


@dataclass(frozen=True)
class SampleResult:
    graph: Graph
    report: ObstructionReport
    attempts: int
    repairs: int

    @property
    def stats(self) -> dict:
        return {"attempts": self.attempts, "repairs": self.repairs}


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def _isolate(g: Graph, v: int) -> Graph:
    adj = list(g.adj)
    for u in bit_list(adj[v]):
        adj[u] &= ~(1 << v)
    adj[v] = 0
    return Graph._raw(g.n, g.verts, tuple(adj))


def _repair_vertex(g: Graph, embedding: tuple[int, ...]) -> int:
    """Endpoint to isolate: maximum degree, ties to the smaller id."""
    return max(embedding, key=lambda v: (g.degree(v), -v))


def sample_class(n: int, t: int, seed: int, variant: str = "C_t",
                 p: float | None = None, max_repairs: int | None = None,
                 restarts: int = 20) -> SampleResult:
    """Seeded member of the target class: sparse random graphs repaired by
    isolating one endpoint of each obstruction found, with rejection on
    budget exhaustion."""
    cap = env_cap("STARSEP_MAX_N", SAMPLE_CAP)
    if not 1 <= n <= cap:
        raise InputError(f"sample_class supports 1 <= n <= {cap}")
    prob = p if p is not None else min(1.0, 2.5 / max(1, n - 1))
    budget = max_repairs if max_repairs is not None else 4 * n + 20
    rng = random.Random(seed)
    attempts = repairs = 0
    for _ in range(restarts):
        attempts += 1
        g = random_graph(n, prob, rng)
        for _ in range(budget):
            rep = class_membership(g, t, variant)
            if rep.member:
                return SampleResult(g, rep, attempts, repairs)
            repairs += 1
            g = _isolate(g, _repair_vertex(g, rep.embedding))
        # a fully repaired graph converges to edgeless, so reaching here
        # means the budget was too small for this seed; restart
    raise SamplingError(
        f"no member found for n={n}, t={t}, seed={seed}",
        stats={"attempts": attempts, "repairs": repairs})


def sample_theta_triangle_wheel_free(n: int, seed: int,
                                     p: float | None = None) -> Graph:
    """Random (theta, triangle, wheel)-free graph by isolation repair."""
    rng = random.Random(seed)
    prob = p if p is not None else min(1.0, 2.5 / max(1, n - 1))
    g = random_graph(n, prob, rng)
    for _ in range(8 * n + 40):
        bad = detect_fixed(g, "K_t", 3)
        if bad is None:
            w = detect_theta(g)
            bad = w.vertices() if w else None
        if bad is None:
            hubs = hub_set(g, g.verts)
            bad = (bit_list(hubs)[0],) if hubs else None
        if bad is None:
            return g
        g = _isolate(g, _repair_vertex(g, bad))
    raise SamplingError(f"repair budget exhausted for n={n}, seed={seed}")


def sample_c4_diamond_free_no_clique_cutset(n: int, seed: int) -> Graph:
    """Cycle plus random chords, with chords deleted until the graph is
    (C4, diamond)-free and has no 2-element clique cutset; the base cycle
    keeps it connected and clique-cutset-free."""
    if n < 5:
        raise InputError("need n >= 5")
    rng = random.Random(seed)
    cycle = set()
    for i in range(n):
        cycle.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
    chords = set()
    for _ in range(max(1, n // 3)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        e = (min(u, v), max(u, v))
        if u != v and e not in cycle:
            chords.add(e)

    def build():
        return Graph(n, sorted(cycle | chords))

    g = build()
    while True:
        emb = detect_fixed(g, "C4") or detect_fixed(g, "diamond")
        if emb is None:
            cut = _clique_pair_cutset(g)
            if cut is None:
                return g
            emb = cut
        culprit = next((e for e in sorted(chords)
                        if e[0] in emb and e[1] in emb), None)
        if culprit is None:
            # no chord involved; only the pure cycle can reach this
            raise SamplingError(f"repair stalled for n={n}, seed={seed}")
        chords.remove(culprit)
        g = build()


def _clique_pair_cutset(g: Graph):
    """An adjacent pair whose removal disconnects the graph, or None."""
    from .graph_core import components
    for u, v in g.edges():
        rest = g.verts & ~(1 << u) & ~(1 << v)
        if rest and len(components(g, rest)) > 1:
            return (u, v)
    return None


def sample_cutset_free_member(n: int, t: int, seed: int,
                              variant: str = "C_t_star") -> Graph:
    """Member with no clique cutset: a long cycle, optionally with one hub
    on widely spaced spokes or a double wheel (second hub over the first
    hub's long sector hole), validated and retried."""
    if n < 5:
        raise InputError("need n >= 5")
    rng = random.Random(seed)
    for _ in range(40):
        if n >= 16 and rng.random() < 0.5:
            g = _double_wheel(n, rng)
        else:
            g = _single_hub_cycle(n, rng)
        if g is None:
            continue
        if not class_membership(g, t, variant).member:
            continue
        if _has_clique_cutset_quick(g):
            continue
        return g
    # deterministic fallback: the plain cycle is always valid
    return cycle_graph(n)


def _single_hub_cycle(n, rng):
    hubs = 0
    if n >= 8:
        hubs = rng.choice((0, 1, 1, 1)) if n >= 12 else rng.choice((0, 1, 1))
    cyc = n - hubs
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    if hubs:
        count = rng.choice((3, 3, 5)) if cyc >= 15 else 3
        spokes = _spaced_spokes(cyc, count, rng)
        if spokes is None:
            return None
        edges.extend((cyc, v) for v in sorted(spokes))
    return Graph(n, edges)


def _double_wheel(n, rng):
    """Cycle of n-2 vertices, one hub on spokes {0, 3, 6}, and a second
    hub with spokes inside the first hub's long sector (optionally
    sharing spoke 0), so both vertices center wheels."""
    cyc = n - 2
    if cyc < 14:
        return None
    c, x = cyc, cyc + 1
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    edges += [(c, 0), (c, 3), (c, 6)]
    share = rng.random() < 0.6
    lo = 8
    hi = cyc - 3
    if share:
        a = rng.randint(lo, hi - 3)
        b = rng.randint(a + 3, hi)
        spokes = (0, a, b)
    else:
        if hi - lo < 6:
            return None
        a = rng.randint(lo, hi - 6)
        b = rng.randint(a + 3, hi - 3)
        d = rng.randint(b + 3, hi)
        spokes = (a, b, d)
    edges += [(x, v) for v in spokes]
    return Graph(n, edges)


def _spaced_spokes(cyc: int, count: int, rng: random.Random):
    """Spoke positions pairwise at circular distance >= 3 with an odd
    count, so the hub is not an even-wheel center of the base cycle."""
    if cyc < 3 * count:
        count = 3
        if cyc < 9:
            return None
    for _ in range(30):
        pos = sorted(rng.sample(range(cyc), count))
        gaps = [b - a for a, b in zip(pos, pos[1:])] + [cyc - pos[-1] + pos[0]]
        if all(gap >= 3 for gap in gaps):
            return set(pos)
    return None


def _has_clique_cutset_quick(g: Graph) -> bool:
    from .cutsets import find_clique_cutset
    return find_clique_cutset(g, g.verts) is not None
