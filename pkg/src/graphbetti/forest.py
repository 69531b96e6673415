"""Betti tables and projective dimension of forests by recursion on a pivot.

For a pivot ``v`` of degree ``n`` whose neighbours ``v_1..v_{n-1}`` are leaves,
with ``T' = T - v_1`` and ``T'' = T - {v, v_1, .., v_n}``::

    beta_{i,d}(T) = beta_{i,d}(T') + sum_j C(n-1, j) beta_{i-j-1, d-j-2}(T'')
    pd(T) = max(pd(T'), pd(T'') + n)
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from math import comb

from graphbetti.betti import QUOTIENT, BettiTable
from graphbetti.graph import Graph, GraphError, VertexSet, forest_pivot, is_forest, members
from graphbetti.homology import QQ, FieldSpec

Entries = dict[tuple[int, int], int]
BASE: Entries = {(0, 0): 1}


@dataclass(frozen=True)
class ForestDecomposition:
    pivot: int
    leaves: tuple[int, ...]
    vn: int
    t_prime: VertexSet
    t_double: VertexSet

    @property
    def n(self) -> int:
        return len(self.leaves) + 1

    @property
    def v1(self) -> int:
        return self.leaves[0] if self.leaves else self.vn


def _decompose(adj: tuple[int, ...], alive: VertexSet, rng: random.Random | None) -> ForestDecomposition:
    v, leaves, vn = forest_pivot(adj, alive, rng)
    v1 = leaves[0] if leaves else vn
    closed = (1 << v) | (adj[v] & alive)
    return ForestDecomposition(v, tuple(leaves), vn, alive & ~(1 << v1), alive & ~closed)


def decompose(T: Graph, rng: random.Random | None = None) -> ForestDecomposition:
    _require_forest(T)
    if not T.edges:
        raise GraphError("an edgeless forest has no pivot")
    return _decompose(T.adjacency, T.full_mask, rng)


def _require_forest(T: Graph) -> None:
    if not is_forest(T):
        raise GraphError("input is not a forest; use the hochster, dual-links or koszul engine")


def _strip_isolated(adj: tuple[int, ...], alive: VertexSet) -> VertexSet:
    return sum(1 << v for v in members(alive) if adj[v] & alive)


class _Recursion:
    def __init__(self, T: Graph, rng: random.Random | None = None):
        self.adj = T.adjacency
        self.rng = rng
        self.tables: dict[VertexSet, Entries] = {}
        self.pds: dict[VertexSet, int] = {}

    def table(self, alive: VertexSet) -> Entries:
        alive = _strip_isolated(self.adj, alive)
        if not alive:
            return BASE
        hit = self.tables.get(alive)
        if hit is not None:
            return hit
        dec = _decompose(self.adj, alive, self.rng)
        out: Counter = Counter(self.table(dec.t_prime))
        small = self.table(dec.t_double)
        for j in range(dec.n):
            c = comb(dec.n - 1, j)
            for (i, d), val in small.items():
                out[(i + j + 1, d + j + 2)] += c * val
        result = dict(sorted(out.items()))
        self.tables.setdefault(alive, result)
        return self.tables[alive]

    def pd(self, alive: VertexSet) -> int:
        alive = _strip_isolated(self.adj, alive)
        if not alive:
            return 0
        hit = self.pds.get(alive)
        if hit is not None:
            return hit
        dec = _decompose(self.adj, alive, self.rng)
        value = max(self.pd(dec.t_prime), self.pd(dec.t_double) + dec.n)
        self.pds.setdefault(alive, value)
        return self.pds[alive]


def betti_forest(T: Graph, field: FieldSpec = QQ, rng: random.Random | None = None) -> BettiTable:
    """Graded table of ``k[Delta(T)]``; the values do not depend on ``field``.

    With ``rng`` the pivot is drawn at random among the valid ones at every step.
    """
    _require_forest(T)
    return BettiTable(T.n, dict(_Recursion(T, rng).table(T.full_mask)), None, QUOTIENT, field)


def pd_forest(T: Graph, rng: random.Random | None = None) -> int:
    _require_forest(T)
    return _Recursion(T, rng).pd(T.full_mask)
