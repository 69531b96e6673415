"""Simplicial complexes stored by facets over an explicit ground set ``0..m-1``.

Faces are ``int`` bitmasks.  Two empty-looking complexes are kept apart:

* ``VOID``: no faces at all, every reduced homology group vanishes;
* ``IRRELEVANT``: the single face ``{}``, with ``H~_{-1} = k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from graphbetti.graph import Graph, VertexSet, as_mask, members


def _antichain(sets: Iterable[int]) -> tuple[int, ...]:
    """Drop every set contained in another; result sorted by (size, members)."""
    uniq = sorted(set(sets), key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(s & k == s for k in kept):
            kept.append(s)
    return tuple(sorted(kept, key=face_key))


def face_key(face: int) -> tuple[int, ...]:
    return tuple(members(face))


@dataclass(frozen=True)
class SimplicialComplex:
    m: int
    facets: tuple[int, ...]
    void: bool = False
    # original vertex of each ground index after re-indexing constructions
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.void and self.facets:
            raise ValueError("a VOID complex has no facets")
        if not self.void and not self.facets:
            raise ValueError("use facets=(0,) for the IRRELEVANT complex or void=True")
        if any(f >> self.m for f in self.facets):
            raise ValueError("facet outside the ground set")

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[VertexSet | Iterable[int]],
                    labels: tuple[int, ...] | None = None) -> SimplicialComplex:
        fs = [as_mask(f) for f in facets]
        if not fs:
            return cls(m, (), True, labels)
        return cls(m, _antichain(fs), False, labels)

    @classmethod
    def void_complex(cls, m: int = 0) -> SimplicialComplex:
        return cls(m, (), True)

    @classmethod
    def irrelevant(cls, m: int = 0) -> SimplicialComplex:
        return cls(m, (0,), False)

    @classmethod
    def simplex(cls, m: int) -> SimplicialComplex:
        return cls(m, ((1 << m) - 1,), False)

    @property
    def is_void(self) -> bool:
        return self.void

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def dimension(self) -> int:
        """-1 for IRRELEVANT; VOID is reported as -2."""
        if self.void:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    @cached_property
    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each list in lexicographic order of
        sorted vertex tuples."""
        groups: dict[int, list[int]] = {}
        for f in self.faces:
            groups.setdefault(f.bit_count() - 1, []).append(f)
        return {d: sorted(fs, key=face_key) for d, fs in sorted(groups.items())}

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces_by_dim.items()}

    def __contains__(self, face: VertexSet | Iterable[int]) -> bool:
        F = as_mask(face)
        return any(F & f == F for f in self.facets)

    def __repr__(self) -> str:
        if self.void:
            return f"SimplicialComplex(m={self.m}, VOID)"
        return f"SimplicialComplex(m={self.m}, facets={[members(f) for f in self.facets]})"


def _reindex(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for k, v in enumerate(keep):
        if mask >> v & 1:
            out |= 1 << k
    return out


def _compose_labels(D: SimplicialComplex, keep: Sequence[int]) -> tuple[int, ...]:
    base = D.labels if D.labels is not None else tuple(range(D.m))
    return tuple(base[v] for v in keep)


def independence_complex(G: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of ``G``; facets are found by
    Bron-Kerbosch on the complement."""
    adj = G.adjacency
    full = G.full_mask
    non_adj = [full & ~adj[v] & ~(1 << v) for v in range(G.n)]
    facets: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            facets.append(R)
            return
        pivot = members(P | X)[0]
        best = -1
        for u in members(P | X):
            c = (P & non_adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in members(P & ~non_adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & non_adj[v], X & non_adj[v])
            P &= ~bit
            X |= bit

    expand(0, full, 0)
    return SimplicialComplex.from_facets(G.n, facets)


def restriction(D: SimplicialComplex, V: VertexSet | Iterable[int]) -> SimplicialComplex:
    """Faces of ``D`` inside ``V``, re-indexed onto ``0..|V|-1``."""
    Vm = as_mask(V)
    if Vm >> D.m:
        raise ValueError("restriction set exceeds the ground set")
    keep = members(Vm)
    labels = _compose_labels(D, keep)
    if D.void:
        return SimplicialComplex(len(keep), (), True, labels)
    return SimplicialComplex.from_facets(len(keep), [_reindex(f & Vm, keep) for f in D.facets], labels)


def alexander_dual(D: SimplicialComplex) -> SimplicialComplex:
    """``{F : [m] - F not in D}`` on the same ground set.

    Boundary conventions: the dual of VOID is the full simplex and the dual
    of the full simplex is VOID, so duality is an involution everywhere.
    """
    full = (1 << D.m) - 1
    faces = D.faces
    dual = [F for F in range(full + 1) if (full & ~F) not in faces]
    return SimplicialComplex.from_facets(D.m, dual, D.labels)


def link(D: SimplicialComplex, F: VertexSet | Iterable[int]) -> SimplicialComplex:
    """Link of the face ``F``, re-indexed onto the ground set minus ``F``."""
    Fm = as_mask(F)
    if D.void or Fm not in D:
        raise ValueError(f"{members(Fm)} is not a face of the complex")
    keep = [v for v in range(D.m) if not Fm >> v & 1]
    labels = _compose_labels(D, keep)
    return SimplicialComplex.from_facets(
        len(keep), [_reindex(f & ~Fm, keep) for f in D.facets if f & Fm == Fm], labels
    )


def epsilon_complex(subsets: Iterable[VertexSet | Iterable[int]], V: VertexSet | Iterable[int]) -> SimplicialComplex:
    """Complex on ``V`` (re-indexed) with maximal faces ``V - a`` for each ``a``.

    An empty list of subsets gives the full simplex on ``V``.
    """
    Vm = as_mask(V)
    keep = members(Vm)
    subs = [as_mask(a) for a in subsets]
    if any(a & ~Vm for a in subs):
        raise ValueError("every subset must lie inside V")
    if not subs:
        return SimplicialComplex(len(keep), ((1 << len(keep)) - 1,), False, tuple(keep))
    return SimplicialComplex.from_facets(len(keep), [_reindex(Vm & ~a, keep) for a in subs], tuple(keep))


def epsilon_of_subgraph(H: Graph) -> SimplicialComplex:
    if not H.edges:
        raise ValueError("epsilon_of_subgraph needs at least one edge")
    return epsilon_complex([(u, v) for u, v in H.edges], H.full_mask)


def upper_koszul_complex(G: Graph, b: Sequence[int]) -> SimplicialComplex:
    """``K_b(I(G)) = {F : x^(b-F) in I(G)}`` on ground set ``0..n-1``."""
    if len(b) != G.n:
        raise ValueError(f"degree vector has length {len(b)}, expected {G.n}")
    if any(x < 0 for x in b):
        raise ValueError("degree vector must be componentwise nonnegative")
    support = mask_of_support(b)
    faces = []
    sub = support
    while True:
        # b - F: coordinates in F drop by one
        rest = [b[v] - (sub >> v & 1) for v in range(G.n)]
        if any(rest[u] >= 1 and rest[v] >= 1 for u, v in G.edges):
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & support
    return SimplicialComplex.from_facets(G.n, faces)


def mask_of_support(b: Sequence[int]) -> int:
    return sum(1 << v for v, x in enumerate(b) if x)


def is_cone(D: SimplicialComplex) -> int | None:
    """Smallest vertex lying in every facet, if any."""
    if D.void:
        return None
    common = (1 << D.m) - 1
    for f in D.facets:
        common &= f
    return members(common)[0] if common else None


def random_complex(m: int, rng: random.Random, max_facets: int = 5) -> SimplicialComplex:
    """Random complex on ``0..m-1``; VOID and IRRELEVANT occur with small probability."""
    roll = rng.random()
    if roll < 0.03:
        return SimplicialComplex.void_complex(m)
    if roll < 0.06:
        return SimplicialComplex.irrelevant(m)
    k = rng.randint(1, max_facets)
    return SimplicialComplex.from_facets(m, [rng.getrandbits(m) if m else 0 for _ in range(k)])
