"""Closed-form Betti tables for complete, complete bipartite/multipartite,
star, cycle and line graphs, plus run counting on cycles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from graphbetti.betti import QUOTIENT, BettiTable
from graphbetti.graph import GraphError, VertexSet, members
from graphbetti.homology import QQ, FieldSpec


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever ``a < 0``, ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _table(n: int, entries: dict[tuple[int, int], int], field: FieldSpec) -> BettiTable:
    graded = {(0, 0): 1}
    graded.update({k: v for k, v in entries.items() if v})
    return BettiTable(n, dict(sorted(graded.items())), None, QUOTIENT, field)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def betti_complete(n: int, field: FieldSpec = QQ) -> BettiTable:
    _need(n >= 2, f"complete graph needs n >= 2, got {n}")
    return _table(n, {(i, i + 1): i * binom(n, i + 1) for i in range(1, n)}, field)


def betti_complete_bipartite(n: int, m: int, field: FieldSpec = QQ) -> BettiTable:
    _need(n >= 1 and m >= 1, f"complete bipartite graph needs n, m >= 1, got {n}, {m}")
    entries = {}
    for i in range(1, n + m):
        entries[(i, i + 1)] = sum(binom(n, j) * binom(m, i + 1 - j) for j in range(1, i + 1))
    return _table(n + m, entries, field)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def betti_complete_multipartite(parts: Sequence[int], field: FieldSpec = QQ) -> BettiTable:
    parts = list(parts)
    _need(len(parts) >= 2, "complete multipartite graph needs at least two parts")
    _need(all(p >= 1 for p in parts), f"part sizes must be >= 1, got {parts}")
    total = sum(parts)
    # for each part, sum over alpha >= 1 of C(n, alpha) x^alpha = (1 + x)^n - 1
    nonempty = [[0] + [comb(p, a) for a in range(1, p + 1)] for p in parts]
    coeff = [0] * (total + 1)
    for l in range(2, len(parts) + 1):
        for chosen in combinations(range(len(parts)), l):
            poly = [1]
            for j in chosen:
                poly = _poly_mul(poly, nonempty[j])
            for deg, c in enumerate(poly):
                coeff[deg] += (l - 1) * c
    entries = {(i, i + 1): coeff[i + 1] for i in range(1, total)}
    return _table(total, entries, field)


def betti_star(n: int, field: FieldSpec = QQ) -> BettiTable:
    """The star with ``n`` leaves (``n + 1`` vertices)."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return _table(n + 1, {(i, i + 1): binom(n, i) for i in range(1, n + 1)}, field)


def cycle_band_value(n: int, l: int, d: int) -> int:
    """Generic cycle entry ``beta_{l,d}(C_n)``, valid only for ``d < n``."""
    if d >= n:
        raise ValueError(f"the generic cycle formula only covers d < n (got d={d}, n={n})")
    i, j = d - l, 2 * l - d
    return binom(i, j) * (binom(n - 2 * i, i) + 2 * binom(n - 2 * i - 1, i - 1))


def cycle_top_degree(n: int) -> tuple[int, int]:
    """``(i, value)`` of the single nonzero entry of degree ``n``."""
    m, r = divmod(n, 3)
    if r == 0:
        return 2 * m, 2
    return 2 * m + 1, 1


def betti_cycle(n: int, field: FieldSpec = QQ) -> BettiTable:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    entries = {}
    for l in range(1, n):
        for d in range(l + 1, min(2 * l, n - 1) + 1):
            entries[(l, d)] = cycle_band_value(n, l, d)
    i, v = cycle_top_degree(n)
    entries[(i, n)] = v
    return _table(n, entries, field)


def line_value(n: int, l: int, d: int) -> int:
    i, j = d - l, 2 * l - d
    return binom(i, j) * binom(n - 2 * i, i) + binom(i - 1, j) * binom(n - 2 * i, i - 1)


def betti_line(n: int, field: FieldSpec = QQ) -> BettiTable:
    _need(n >= 2, f"line needs n >= 2, got {n}")
    entries = {}
    for l in range(1, n):
        for d in range(l + 1, min(2 * l, n) + 1):
            entries[(l, d)] = line_value(n, l, d)
    return _table(n, entries, field)


def betti_family(kind: str, *params: int, field: FieldSpec = QQ) -> BettiTable:
    if kind == "complete":
        return betti_complete(*params, field=field)
    if kind in ("complete_bipartite", "bipartite"):
        return betti_complete_bipartite(*params, field=field)
    if kind in ("complete_multipartite", "multipartite"):
        return betti_complete_multipartite(params, field=field)
    if kind == "star":
        return betti_star(*params, field=field)
    if kind == "cycle":
        return betti_cycle(*params, field=field)
    if kind == "line":
        return betti_line(*params, field=field)
    raise GraphError(f"unknown family {kind!r}")


def pd_closed_form(kind: str, *params: int) -> int:
    if kind == "complete":
        (n,) = params
        _need(n >= 2, f"complete graph needs n >= 2, got {n}")
        return n - 1
    if kind in ("complete_bipartite", "bipartite"):
        n, m = params
        _need(n >= 1 and m >= 1, f"complete bipartite graph needs n, m >= 1, got {n}, {m}")
        return n + m - 1
    if kind in ("complete_multipartite", "multipartite"):
        _need(len(params) >= 2 and min(params) >= 1, f"bad part sizes {list(params)}")
        # the complement is a disjoint union of cliques, hence disconnected
        return sum(params) - 1
    if kind == "star":
        (n,) = params
        _need(n >= 1, f"star needs n >= 1, got {n}")
        return n
    if kind == "cycle":
        (n,) = params
        _need(n >= 3, f"cycle needs n >= 3, got {n}")
        return {0: 2 * n // 3, 1: (2 * n + 1) // 3, 2: (2 * n - 1) // 3}[n % 3]
    if kind == "line":
        (n,) = params
        _need(n >= 2, f"line needs n >= 2, got {n}")
        return {0: 2 * n // 3, 1: (2 * n - 2) // 3, 2: (2 * n - 1) // 3}[n % 3]
    raise GraphError(f"unknown family {kind!r}")


# --- runs ------------------------------------------------------------------

def run_count_interior(n: int, l: int, m: int) -> int:
    """Ways to place ``m`` runs of length ``l`` in ``C_n`` avoiding vertices 1 and n."""
    return binom(n - l * m - 1, m)


def run_count_cycle(n: int, l: int, m: int) -> int:
    """Ways to place ``m`` runs of length ``l`` in ``C_n``."""
    return binom(n - l * m, m) + l * binom(n - l * m - 1, m - 1)


@dataclass(frozen=True)
class RunProfile:
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.lengths):
            raise ValueError(f"run lengths must be positive, got {self.lengths}")

    @property
    def vertex_count(self) -> int:
        return sum(self.lengths)

    def predicted_homology(self) -> dict[int, int]:
        """Reduced homology of ``E(s_1, .., s_r)``.

        Zero if some length is 1 mod 3; otherwise a single copy of ``k`` in
        degree ``2(P + Q) + beta - 2`` where lengths are ``3p`` or ``3q + 2``
        and ``beta`` counts the latter.
        """
        if not self.lengths or any(s % 3 == 1 for s in self.lengths):
            return {}
        P_plus_Q = sum(s // 3 for s in self.lengths)
        beta = sum(1 for s in self.lengths if s % 3 == 2)
        return {2 * P_plus_Q + beta - 2: 1}


def run_profile(n: int, W: VertexSet, cyclic: bool = True) -> RunProfile:
    """Run lengths of the subgraph of ``C_n`` (or ``L_n``) induced on ``W``.

    Raises if ``W`` is the whole cycle, which is not a union of runs.
    """
    full = (1 << n) - 1
    if W & ~full:
        raise ValueError("vertex set exceeds the graph")
    if cyclic and W == full:
        raise ValueError("the whole cycle is not a union of runs")
    verts = members(W)
    if not verts:
        return RunProfile(())
    start = 0
    if cyclic:
        # begin just after a vertex outside W so no run wraps around
        gap = next(v for v in range(n) if not W >> v & 1)
        start = (gap + 1) % n
    runs, cur = [], 0
    for k in range(n):
        v = (start + k) % n if cyclic else k
        if W >> v & 1:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return RunProfile(tuple(runs))
