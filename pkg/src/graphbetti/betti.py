"""Graded Betti numbers of edge ideals.

Three independent engines produce the table of ``k[Delta(G)] = R / I(G)``:

* :func:`betti_hochster` sums ``dim H~_{|W|-i-1}(Delta_W)`` over vertex sets ``W``;
* :func:`betti_dual_links` sums ``dim H~_{i-2}(eps(H))`` over induced subgraphs ``H``;
* :func:`betti_koszul` computes the table of ``I(G)`` from upper Koszul
  complexes, to be shifted with :meth:`BettiTable.to_quotient`.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from graphbetti.complex import epsilon_complex, upper_koszul_complex
from graphbetti.graph import (
    Graph,
    VertexSet,
    as_mask,
    complement,
    connected_components,
    induced_subgraph,
    members,
)
from graphbetti.homology import (
    QQ,
    FieldSpec,
    _homology_from_faces,
    homology_dim_from_faces,
    reduced_homology,
)

DEFAULT_CEILING = 22
RESTRICTED_CEILING = 64

QUOTIENT = "quotient"
IDEAL = "ideal"


class CeilingExceededError(ValueError):
    """The graph has more vertices than the subset-enumeration ceiling."""

    def __init__(self, n: int, ceiling: int):
        super().__init__(f"graph has {n} vertices; full tables are limited to n <= {ceiling}")
        self.n = n
        self.ceiling = ceiling


@dataclass(frozen=True)
class PdResult:
    value: int
    certificate: tuple[int, int]


@dataclass
class BettiTable:
    """Nonzero Betti numbers keyed by ``(i, d)``; multigraded keys are
    ``(i, W)`` with ``W`` a squarefree degree encoded as a vertex bitmask."""

    n: int
    graded: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, int], int] | None = None
    convention: str = QUOTIENT
    field: FieldSpec = QQ

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.graded.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.graded.items() if ii == i)

    def totals(self) -> list[int]:
        if not self.graded:
            return []
        top = max(i for i, _ in self.graded)
        return [self.total(i) for i in range(top + 1)]

    def projective_dimension(self) -> PdResult:
        if not self.graded:
            raise ValueError("empty Betti table has no projective dimension")
        i = max(i for i, _ in self.graded)
        d = min(d for ii, d in self.graded if ii == i)
        return PdResult(i, (i, d))

    @property
    def pd(self) -> int:
        return self.projective_dimension().value

    def to_quotient(self) -> BettiTable:
        """Shift an ``I(G)`` table to ``R/I(G)``: ``i -> i + 1`` plus ``beta_0 = 1``."""
        if self.convention == QUOTIENT:
            return self
        graded = {(i + 1, d): v for (i, d), v in self.graded.items()}
        graded[(0, 0)] = 1
        graded = dict(sorted(graded.items()))
        multi = None
        if self.multigraded is not None:
            multi = {(i + 1, b): v for (i, b), v in self.multigraded.items()}
            multi[(0, 0)] = 1
        return BettiTable(self.n, graded, multi, QUOTIENT, self.field)

    def graded_from_multigraded(self) -> dict[tuple[int, int], int]:
        if self.multigraded is None:
            raise ValueError("table has no multigraded part")
        out: Counter = Counter()
        for (i, b), v in self.multigraded.items():
            out[(i, b.bit_count())] += v
        return dict(sorted(out.items()))

    # --- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "convention": self.convention,
            "field": self.field.label,
            "n": self.n,
            "graded": [{"i": i, "d": d, "value": v} for (i, d), v in sorted(self.graded.items())],
            "pd": self.pd if self.graded else None,
        }
        if self.multigraded is not None:
            out["multigraded"] = [
                {"i": i, "b": [b >> v & 1 for v in range(self.n)], "value": val}
                for (i, b), val in sorted(self.multigraded.items())
            ]
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> BettiTable:
        graded = {(e["i"], e["d"]): e["value"] for e in data["graded"]}
        multi = None
        if "multigraded" in data:
            multi = {}
            for e in data["multigraded"]:
                b = sum(1 << v for v, x in enumerate(e["b"]) if x)
                multi[(e["i"], b)] = e["value"]
        return cls(data["n"], graded, multi, data["convention"], FieldSpec.parse(data["field"]))

    @classmethod
    def from_json(cls, text: str) -> BettiTable:
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        """Diagram with one row per homological index ``i`` and one column per degree ``d``."""
        if not self.graded:
            return "(empty table)"
        degs = sorted({d for _, d in self.graded})
        top = max(i for i, _ in self.graded)
        width = max(len(str(v)) for v in self.graded.values())
        width = max(width, max(len(str(d)) for d in degs), 5)
        head = "       d:" + "".join(f"{d:>{width + 1}}" for d in degs) + f"{'total':>{width + 2}}"
        lines = [head]
        for i in range(top + 1):
            cells = "".join(f"{(self.graded.get((i, d)) or '.'):>{width + 1}}" for d in degs)
            lines.append(f"{'i=' + str(i) + ':':>9}" + cells + f"{self.total(i):>{width + 2}}")
        return "\n".join(lines)


def check_ceiling(G: Graph, ceiling: int) -> None:
    if G.n > ceiling:
        raise CeilingExceededError(G.n, ceiling)


def independent_subsets(adj: Sequence[int], W: VertexSet) -> list[int]:
    """All independent subsets of ``W`` (the faces of ``Delta_W``)."""
    out = [0]
    for v in members(W):
        bit = 1 << v
        # extend every earlier face that avoids the neighbours of v
        out += [f | bit for f in out if not f & adj[v]]
    return out


def _group_faces(faces: Iterable[int]) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for f in faces:
        groups.setdefault(f.bit_count() - 1, []).append(f)
    for fs in groups.values():
        fs.sort(key=lambda f: members(f))
    return dict(sorted(groups.items()))


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def _run_subsets(task: Callable, G: Graph, field: FieldSpec, workers: int) -> Counter:
    total = 1 << G.n
    if workers <= 1 or total < 64:
        return task(G, field, 0, total)
    out: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(task, G, field, a, b) for a, b in _chunks(total, workers * 4)]
        for fut in futs:
            out.update(fut.result())
    return out


def _hochster_range(G: Graph, field: FieldSpec, start: int, stop: int) -> Counter:
    adj = G.adjacency
    out: Counter = Counter()
    for W in range(start, stop):
        fbd = _group_faces(independent_subsets(adj, W))
        size = W.bit_count()
        for j, h in _homology_from_faces(fbd, field).items():
            out[(size - j - 1, W)] += h
    return out


def betti_hochster(G: Graph, field: FieldSpec = QQ, ceiling: int = DEFAULT_CEILING,
                   workers: int = 1) -> BettiTable:
    """Full multigraded table of ``k[Delta(G)]`` over all ``2^n`` restrictions."""
    check_ceiling(G, ceiling)
    multi = dict(_run_subsets(_hochster_range, G, field, workers))
    table = BettiTable(G.n, {}, multi, QUOTIENT, field)
    table.graded = table.graded_from_multigraded()
    return table


def betti_hochster_at(G: Graph, pairs: Iterable[tuple[int, VertexSet | Iterable[int]]],
                      field: FieldSpec = QQ) -> dict[tuple[int, int], int]:
    """Restricted mode: ``beta_{i,W}`` only for the requested ``(i, W)`` pairs."""
    if G.n > RESTRICTED_CEILING:
        raise CeilingExceededError(G.n, RESTRICTED_CEILING)
    adj = G.adjacency
    cache: dict[int, dict[int, list[int]]] = {}
    out = {}
    for i, W in pairs:
        Wm = as_mask(W)
        if Wm not in cache:
            cache[Wm] = _group_faces(independent_subsets(adj, Wm))
        out[(i, Wm)] = homology_dim_from_faces(cache[Wm], Wm.bit_count() - i - 1, field)
    return out


def _dual_links_range(G: Graph, field: FieldSpec, start: int, stop: int) -> Counter:
    adj = G.adjacency
    out: Counter = Counter()
    for W in range(start, stop):
        verts = members(W)
        degs = [(adj[v] & W).bit_count() for v in verts]
        # no edge: not a face of the dual; isolated vertex: eps(H) is a cone
        if not verts or min(degs) == 0:
            continue
        edges = [(u, v) for u in verts for v in members(adj[u] & W) if u < v]
        eps = epsilon_complex([(1 << u) | (1 << v) for u, v in edges], W)
        for j, h in reduced_homology(eps, field).dims.items():
            out[(j + 2, W)] += h
    return out


def betti_dual_links(G: Graph, field: FieldSpec = QQ, ceiling: int = DEFAULT_CEILING,
                     workers: int = 1) -> BettiTable:
    """Graded table from the homology of ``eps(H)`` over induced subgraphs with
    an edge; ``beta_0 = 1`` is added since the sum only covers ``i >= 1``."""
    check_ceiling(G, ceiling)
    multi = _run_subsets(_dual_links_range, G, field, workers)
    graded: Counter = Counter({(0, 0): 1})
    for (i, W), v in multi.items():
        graded[(i, W.bit_count())] += v
    return BettiTable(G.n, dict(sorted(graded.items())), None, QUOTIENT, field)


def _koszul_range(G: Graph, field: FieldSpec, start: int, stop: int) -> Counter:
    out: Counter = Counter()
    for W in range(start, stop):
        b = [W >> v & 1 for v in range(G.n)]
        for j, h in reduced_homology(upper_koszul_complex(G, b), field).dims.items():
            out[(j + 1, W)] += h
    return out


def betti_koszul(G: Graph, field: FieldSpec = QQ, ceiling: int = DEFAULT_CEILING,
                 workers: int = 1) -> BettiTable:
    """Multigraded table of ``I(G)`` (ideal convention) over squarefree degrees.

    Non-squarefree degrees are skipped: there ``K_b`` is a cone.
    """
    check_ceiling(G, ceiling)
    multi = dict(_run_subsets(_koszul_range, G, field, workers))
    table = BettiTable(G.n, {}, multi, IDEAL, field)
    table.graded = table.graded_from_multigraded()
    return table


ENGINES = {
    "hochster": betti_hochster,
    "dual-links": betti_dual_links,
    "koszul": lambda G, field=QQ, **kw: betti_koszul(G, field, **kw).to_quotient(),
}


def betti_table(G: Graph, field: FieldSpec = QQ, method: str = "hochster", **kw) -> BettiTable:
    """Quotient-convention table from the named engine (``forest`` included)."""
    if method == "forest":
        from graphbetti.forest import betti_forest

        return betti_forest(G, field)
    try:
        engine = ENGINES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return engine(G, field, **kw)


def projective_dimension(G: Graph, field: FieldSpec = QQ, method: str = "hochster", **kw) -> PdResult:
    return betti_table(G, field, method, **kw).projective_dimension()


def pd_by_disconnected_complement(G: Graph) -> int | None:
    """``n - 1`` when the complement of ``G`` is disconnected, else ``None``."""
    if len(connected_components(complement(G))) > 1:
        return G.n - 1
    return None


def monotonicity_check(G: Graph, W: VertexSet | Iterable[int], field: FieldSpec = QQ) -> bool:
    """Every graded Betti number of the induced subgraph is at most that of ``G``."""
    big = betti_hochster(G, field)
    small = betti_hochster(induced_subgraph(G, W), field)
    return all(v <= big[key] for key, v in small.graded.items())


def vanishing_band_ok(table: BettiTable) -> bool:
    """No entry with ``d > 2i`` (quotient convention)."""
    return all(d <= 2 * i for (i, d) in table.to_quotient().graded)
