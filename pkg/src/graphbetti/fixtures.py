"""The six-vertex triangulation of the real projective plane and the graph
whose independence complex is its barycentric subdivision.

Triangles, with vertices ``x1..x6`` written 1-indexed::

    456 125 145 134 234 246 126 136 356 235

Every pair of vertices spans an edge, so the triangulation has 6 vertices,
15 edges and 10 triangles (31 nonempty faces).
"""

from __future__ import annotations

from itertools import combinations

from graphbetti.complex import SimplicialComplex
from graphbetti.graph import Graph, make_graph
from graphbetti.homology import FieldSpec

RP2_TRIANGLES_1INDEXED: tuple[tuple[int, int, int], ...] = (
    (4, 5, 6), (1, 2, 5), (1, 4, 5), (1, 3, 4), (2, 3, 4),
    (2, 4, 6), (1, 2, 6), (1, 3, 6), (3, 5, 6), (2, 3, 5),
)


def rp2_complex() -> SimplicialComplex:
    return SimplicialComplex.from_facets(6, [[v - 1 for v in t] for t in RP2_TRIANGLES_1INDEXED])


def rp2_faces() -> list[int]:
    """Nonempty faces as vertex masks, ordered by size then members."""
    return [f for fs in rp2_complex().faces_by_dim.values() for f in fs if f]


def barycentric_graph(faces: list[int]) -> Graph:
    """Vertices are the given faces; edges join faces where neither contains the other.

    Independent sets are exactly the chains, so the independence complex is
    the barycentric subdivision.
    """
    edges = [(a, b) for a, b in combinations(range(len(faces)), 2)
             if faces[a] & faces[b] not in (faces[a], faces[b])]
    return make_graph(len(faces), edges)


def rp2_graph() -> Graph:
    return barycentric_graph(rp2_faces())


def rp2_beta_29_31(field: FieldSpec) -> int:
    """``beta_{29,31}`` from the single restriction ``W = V``."""
    from graphbetti.betti import betti_hochster_at

    G = rp2_graph()
    return betti_hochster_at(G, [(29, G.full_mask)], field)[(29, G.full_mask)]
