"""Finite simple graphs on vertices ``0..n-1``.

Vertex subsets are passed around as ``int`` bitmasks (bit ``v`` set iff
vertex ``v`` is a member).  Every function here is pure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

MAX_VERTICES = 64

VertexSet = int


class GraphError(ValueError):
    """Malformed graph input (loop, out-of-range endpoint, bad family)."""


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def as_mask(W: VertexSet | Iterable[int]) -> VertexSet:
    return W if isinstance(W, int) else mask_of(W)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a normalized graph, rejecting loops and out-of-range endpoints."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    norm = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"loop edge {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(norm)))


def family(kind: str, *params: int) -> Graph:
    """Named families: complete, complete_bipartite, complete_multipartite,
    star, cycle, line.

    ``star n`` has ``n + 1`` vertices with vertex 0 as the centre.
    ``complete_multipartite`` takes the part sizes as positional params.
    """
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise GraphError(f"{kind}: {msg}")

    if kind == "complete":
        (n,) = params
        need(n >= 2, f"need n >= 2, got {n}")
        return make_graph(n, combinations(range(n), 2))
    if kind in ("complete_bipartite", "bipartite"):
        n, m = params
        need(n >= 1 and m >= 1, f"need n, m >= 1, got {n}, {m}")
        return make_graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])
    if kind in ("complete_multipartite", "multipartite"):
        parts = list(params)
        need(len(parts) >= 2, "need at least two parts")
        need(all(p >= 1 for p in parts), f"part sizes must be >= 1, got {parts}")
        block = []
        for idx, size in enumerate(parts):
            block.extend([idx] * size)
        N = len(block)
        return make_graph(N, [(u, v) for u, v in combinations(range(N), 2) if block[u] != block[v]])
    if kind == "star":
        (n,) = params
        need(n >= 1, f"need n >= 1, got {n}")
        return make_graph(n + 1, [(0, j) for j in range(1, n + 1)])
    if kind == "cycle":
        (n,) = params
        need(n >= 3, f"need n >= 3, got {n}")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "line":
        (n,) = params
        need(n >= 2, f"need n >= 2, got {n}")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    raise GraphError(f"unknown family {kind!r}")


def complement(G: Graph) -> Graph:
    return make_graph(G.n, [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)])


def induced_subgraph(G: Graph, W: VertexSet | Iterable[int]) -> Graph:
    """Subgraph on ``W``, re-indexed so the members of ``W`` become ``0..|W|-1``
    in increasing order."""
    verts = members(as_mask(W))
    if verts and verts[-1] >= G.n:
        raise GraphError(f"vertex {verts[-1]} out of range for n={G.n}")
    index = {v: k for k, v in enumerate(verts)}
    return make_graph(
        len(verts),
        [(index[u], index[v]) for u, v in G.edges if u in index and v in index],
    )


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` on ``0..G.n-1`` followed by ``H`` shifted up by ``G.n``."""
    return make_graph(G.n + H.n, list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges])


def delete_vertices(G: Graph, W: VertexSet | Iterable[int]) -> Graph:
    return induced_subgraph(G, G.full_mask & ~as_mask(W))


def edges_within(G: Graph, W: VertexSet) -> int:
    """Number of edges of ``G`` with both ends in ``W``."""
    adj = G.adjacency
    return sum((adj[v] & W).bit_count() for v in members(W)) // 2


def connected_components(G: Graph) -> list[VertexSet]:
    """Components as bitmasks, ordered by smallest member."""
    adj = G.adjacency
    seen = 0
    comps = []
    for start in range(G.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def is_forest(G: Graph) -> bool:
    return len(G.edges) == G.n - len(connected_components(G))


def count_induced_matchings(G: Graph, i: int) -> int:
    """Vertex subsets of size ``2i`` inducing exactly ``i`` disjoint edges."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    adj = G.adjacency
    count = 0
    for W in combinations(range(G.n), 2 * i):
        mask = mask_of(W)
        if all((adj[v] & mask).bit_count() == 1 for v in W):
            count += 1
    return count


def find_forest_pivot(T: Graph) -> tuple[int, list[int], int]:
    """Vertex ``v`` whose neighbours are all leaves except possibly one.

    Returns ``(v, leaves, v_n)`` where ``leaves`` are the degree-1 neighbours
    other than ``v_n``.  ``v_n`` is the neighbour of larger degree if there is
    one, else the largest-index leaf.  The smallest qualifying ``v`` wins.
    """
    if not is_forest(T):
        raise GraphError("find_forest_pivot needs a forest")
    if not T.edges:
        raise GraphError("find_forest_pivot needs at least one edge")
    return forest_pivot(T.adjacency, T.full_mask)


def pivot_candidates(adj: tuple[int, ...], alive: VertexSet) -> list[int]:
    """All valid pivots of the induced forest on ``alive``."""
    deg = {v: (adj[v] & alive).bit_count() for v in members(alive)}
    out = []
    for v, dv in deg.items():
        if dv == 0:
            continue
        heavy = sum(1 for u in members(adj[v] & alive) if deg[u] > 1)
        # a leaf only qualifies when its neighbour is a leaf too
        if (dv == 1 and heavy == 0) or (dv > 1 and heavy <= 1):
            out.append(v)
    return out


def split_pivot(adj: tuple[int, ...], alive: VertexSet, v: int) -> tuple[int, list[int], int]:
    nbrs = members(adj[v] & alive)
    leaves = [u for u in nbrs if (adj[u] & alive).bit_count() == 1]
    heavy = [u for u in nbrs if (adj[u] & alive).bit_count() > 1]
    if heavy:
        return v, leaves, heavy[0]
    return v, leaves[:-1], leaves[-1]


def forest_pivot(
    adj: tuple[int, ...], alive: VertexSet, rng: random.Random | None = None
) -> tuple[int, list[int], int]:
    cands = pivot_candidates(adj, alive)
    if not cands:
        raise GraphError("no pivot: induced graph is not a forest with an edge")
    v = rng.choice(cands) if rng is not None else cands[0]
    return split_pivot(adj, alive, v)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_forest(n: int, rng: random.Random, p_edge: float = 0.8) -> Graph:
    """Random forest: each vertex ``v > 0`` attaches to an earlier vertex with
    probability ``p_edge``; labels are then shuffled."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[v], perm[rng.randrange(v)]) for v in range(1, n) if rng.random() < p_edge]
    return make_graph(n, edges)


# --- text formats -----------------------------------------------------------

FAMILY_NAMES = {
    "complete": "complete",
    "bipartite": "complete_bipartite",
    "multipartite": "complete_multipartite",
    "star": "star",
    "cycle": "cycle",
    "line": "line",
}


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """``"bipartite:2,3"`` -> ``("complete_bipartite", (2, 3))``."""
    name, sep, args = spec.partition(":")
    kind = FAMILY_NAMES.get(name.strip())
    if kind is None or not sep:
        raise GraphError(f"bad family string {spec!r}")
    try:
        params = tuple(int(a) for a in args.split(","))
    except ValueError:
        raise GraphError(f"bad family parameters in {spec!r}") from None
    arity = {"complete": 1, "complete_bipartite": 2, "star": 1, "cycle": 1, "line": 1}
    if kind in arity and len(params) != arity[kind]:
        raise GraphError(f"{name} takes {arity[kind]} parameter(s), got {spec!r}")
    return kind, params


def family_from_string(spec: str) -> Graph:
    kind, params = parse_family(spec)
    return family(kind, *params)


def parse_graph_text(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``<u> <v>`` lines; ``#`` starts a comment line."""
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise GraphError("empty graph file")
    head = data[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphError(f"first data line must be 'n <count>', got {data[0]!r}")
    try:
        n = int(head[1])
        edges = []
        for ln in data[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"edge line must be '<u> <v>', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise GraphError(f"non-integer token: {exc}") from None
    return make_graph(n, edges)


def format_graph_text(G: Graph) -> str:
    return "\n".join([f"n {G.n}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"
