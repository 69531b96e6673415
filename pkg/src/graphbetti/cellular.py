"""Labeled simplicial complexes as candidate cellular resolutions of edge ideals.

A labeled complex supports a resolution iff ``X_{<=b}`` (the subcomplex on
vertices whose label divides ``b``) is acyclic for every ``b``.  Restrictions
only change at joins of vertex labels, so only the lcm lattice is scanned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from graphbetti.betti import betti_hochster
from graphbetti.complex import SimplicialComplex, is_cone
from graphbetti.graph import Graph, GraphError, members
from graphbetti.homology import QQ, FieldSpec, reduced_homology

Label = tuple[int, ...]

C4_GENERATORS: tuple[Label, ...] = ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
# a solid triangle {a, b, c} with a pendant edge {c, d}; a, b, c, d = 0, 1, 2, 3
C4_SHAPE = SimplicialComplex.from_facets(4, [(0, 1, 2), (2, 3)])
# a = x2x3, b = x1x2, c = x3x4, d = x1x4
C4_EXAMPLE_ASSIGNMENT: tuple[Label, ...] = ((0, 1, 1, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 0, 0, 1))


def join(a: Label, b: Label) -> Label:
    return tuple(max(x, y) for x, y in zip(a, b))


def precedes(a: Label, b: Label) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class LabeledCellComplex:
    complex: SimplicialComplex
    labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.complex.m:
            raise ValueError("need exactly one label per vertex")
        if len({len(a) for a in self.labels}) > 1:
            raise ValueError("labels must share one length")
        if any(x < 0 for a in self.labels for x in a):
            raise ValueError("labels must be componentwise nonnegative")

    @property
    def nvars(self) -> int:
        return len(self.labels[0]) if self.labels else 0

    def face_label(self, face: int) -> Label:
        out = (0,) * self.nvars
        for j in members(face):
            out = join(out, self.labels[j])
        return out

    def face_counts(self) -> list[int]:
        """Number of faces of dimension 0, 1, 2, ..."""
        if self.complex.void:
            return []
        return [len(fs) for d, fs in self.complex.faces_by_dim.items() if d >= 0]


def taylor_complex(G: Graph) -> LabeledCellComplex:
    """Full simplex on the generators ``x_u x_v`` of ``I(G)``, in edge order."""
    if not G.edges:
        raise GraphError("the Taylor complex needs at least one edge")
    labels = tuple(tuple(int(w in e) for w in range(G.n)) for e in G.edges)
    return LabeledCellComplex(SimplicialComplex.simplex(len(labels)), labels)


def restrict_below(X: LabeledCellComplex, b: Sequence[int]) -> SimplicialComplex:
    """Subcomplex induced on the vertices with label ``<= b``, on the same ground set."""
    b = tuple(b)
    keep = sum(1 << j for j, a in enumerate(X.labels) if precedes(a, b))
    if not keep or X.complex.void:
        return SimplicialComplex.void_complex(X.complex.m)
    return SimplicialComplex.from_facets(X.complex.m, [f & keep for f in X.complex.facets])


def lcm_lattice(labels: Sequence[Label]) -> list[Label]:
    """All joins of nonempty subsets of ``labels``, sorted."""
    seen = set(labels)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in labels:
                c = join(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class CellularCheck:
    ok: bool
    witnesses: tuple[Label, ...]

    def __bool__(self) -> bool:
        return self.ok


def is_cellular_resolution(X: LabeledCellComplex, field: FieldSpec = QQ,
                           cone_shortcut: bool = True) -> CellularCheck:
    """Check acyclicity of ``X_{<=b}`` at every lcm-lattice point.

    A nonempty cone is acyclic, so cones skip the homology computation when
    ``cone_shortcut`` is on.  Every failing degree is reported.
    """
    bad = []
    for b in lcm_lattice(X.labels):
        sub = restrict_below(X, b)
        if cone_shortcut and is_cone(sub) is not None:
            continue
        if not reduced_homology(sub, field).is_acyclic:
            bad.append(b)
    return CellularCheck(not bad, tuple(bad))


@dataclass(frozen=True)
class C4Search:
    ok: bool
    # (labels assigned to a, b, c, d; failing degrees) for each of the 24 assignments
    assignments: tuple[tuple[tuple[Label, ...], tuple[Label, ...]], ...]

    def witnesses_for(self, labels: Sequence[Label]) -> tuple[Label, ...]:
        labels = tuple(tuple(a) for a in labels)
        for assigned, wit in self.assignments:
            if assigned == labels:
                return wit
        raise KeyError(labels)


def c4_search(field: FieldSpec = QQ) -> C4Search:
    results = []
    for perm in permutations(C4_GENERATORS):
        check = is_cellular_resolution(LabeledCellComplex(C4_SHAPE, perm), field)
        results.append((perm, check.witnesses))
    return C4Search(all(w for _, w in results), tuple(results))


def c4_has_no_minimal_cellular(field: FieldSpec = QQ) -> bool:
    """True iff no assignment of the generators of ``I(C_4)`` to the forced
    shape yields a cellular resolution."""
    return c4_search(field).ok


def vanishing_bound_check(G: Graph, field: FieldSpec = QQ) -> bool:
    """No entry ``beta_{i,d}`` with ``d > 2i``."""
    return all(d <= 2 * i for i, d in betti_hochster(G, field).graded)
