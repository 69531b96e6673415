"""Seeded verification suites comparing each engine with an independent witness."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from graphbetti.betti import (
    betti_dual_links,
    betti_hochster,
    betti_koszul,
    monotonicity_check,
    pd_by_disconnected_complement,
)
from graphbetti.cellular import (
    C4_EXAMPLE_ASSIGNMENT,
    c4_search,
    is_cellular_resolution,
    taylor_complex,
)
from graphbetti.complex import alexander_dual, random_complex
from graphbetti.families import betti_family, pd_closed_form
from graphbetti.fixtures import rp2_beta_29_31, rp2_graph
from graphbetti.forest import betti_forest, pd_forest
from graphbetti.graph import Graph, count_induced_matchings, disjoint_union, family, random_forest, random_graph
from graphbetti.homology import GF2, GF3, QQ, reduced_homology

DEFAULT_SEED = 20240601
FIELDS3 = (QQ, GF2, GF3)


@dataclass(frozen=True)
class Check:
    id: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"id": self.id, "ok": self.ok, "detail": self.detail}


def graph_corpus(seed: int, count: int = 30, n_min: int = 2, n_max: int = 7, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng.randint(n_min, n_max), p, rng) for _ in range(count)]


def forest_corpus(seed: int, count: int = 50, n_max: int = 10) -> list[Graph]:
    rng = random.Random(seed)
    return [random_forest(rng.randint(1, n_max), rng) for _ in range(count)]


def family_envelope(max_n: int = 7) -> list[tuple[str, tuple[int, ...]]]:
    """Family parameters inside the closed-form test envelope, capped at ``max_n`` vertices."""
    out: list[tuple[str, tuple[int, ...]]] = []
    small = min(7, max_n)
    out += [("complete", (n,)) for n in range(2, min(6, max_n) + 1)]
    out += [("complete_bipartite", (n, m)) for n in range(1, small) for m in range(1, small - n + 1)]
    for total in range(2, small + 1):
        out += [("complete_multipartite", parts) for parts in _partitions(total) if len(parts) >= 2]
    out += [("star", (n,)) for n in range(1, min(5, max_n - 1) + 1)]
    out += [("cycle", (n,)) for n in range(3, min(8, max_n) + 1)]
    out += [("line", (n,)) for n in range(2, min(8, max_n) + 1)]
    return out


def _partitions(total: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = total if largest is None else largest
    if total == 0:
        return [()]
    return [(k,) + rest for k in range(min(total, largest), 0, -1) for rest in _partitions(total - k, k)]


def _fmt(G: Graph) -> str:
    return f"n={G.n} edges={list(G.edges)}"


def suite_families(seed: int, max_n: int) -> list[Check]:
    checks = []
    for kind, params in family_envelope(max_n):
        G = family(kind, *params)
        bad = [F.label for F in FIELDS3 if betti_family(kind, *params, field=F).graded != betti_hochster(G, F).graded]
        checks.append(Check(f"families/{kind}{list(params)}", not bad, f"mismatch over {bad}" if bad else ""))
    return checks


def suite_forest(seed: int, max_n: int) -> list[Check]:
    checks = []
    for k, T in enumerate(forest_corpus(seed, 50, max(max_n, 2))):
        bad = [F.label for F in (QQ, GF2) if betti_forest(T, F).graded != betti_hochster(T, F).graded]
        pd_ok = pd_forest(T) == betti_forest(T).pd
        alt = betti_forest(T, rng=random.Random(seed + k)).graded == betti_forest(T).graded
        ok = not bad and pd_ok and alt
        checks.append(Check(f"forest/{k}", ok, "" if ok else f"{_fmt(T)} fields={bad} pd={pd_ok} pivots={alt}"))
    return checks


def suite_engines(seed: int, max_n: int) -> list[Check]:
    checks = []
    for k, G in enumerate(graph_corpus(seed, 30, 2, max_n)):
        bad = []
        for F in (QQ, GF2):
            h = betti_hochster(G, F).graded
            if betti_dual_links(G, F).graded != h or betti_koszul(G, F).to_quotient().graded != h:
                bad.append(F.label)
        checks.append(Check(f"engines/{k}", not bad, f"{_fmt(G)} fields={bad}" if bad else ""))
    return checks


def suite_matchings(seed: int, max_n: int) -> list[Check]:
    checks = []
    for k, G in enumerate(graph_corpus(seed, 30, 2, max_n)):
        table = betti_hochster(G)
        ok = all(table[(i, 2 * i)] == count_induced_matchings(G, i) for i in range(1, G.n // 2 + 1))
        band = all(d <= 2 * i for i, d in table.graded)
        checks.append(Check(f"matchings/{k}", ok and band, "" if ok and band else _fmt(G)))
    return checks


def suite_pd(seed: int, max_n: int) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for k in range(20):
        G1 = random_graph(rng.randint(1, 4), 0.5, rng)
        G2 = random_graph(rng.randint(1, 4), 0.5, rng)
        ok = betti_hochster(disjoint_union(G1, G2)).pd == betti_hochster(G1).pd + betti_hochster(G2).pd
        checks.append(Check(f"pd/sum/{k}", ok, "" if ok else f"{_fmt(G1)} + {_fmt(G2)}"))
    specs = [("complete", (n,)) for n in range(2, 7)]
    specs += [("complete_bipartite", (n, m)) for n in range(1, 7) for m in range(1, 8 - n)]
    for kind, params in specs:
        G = family(kind, *params)
        ok = pd_by_disconnected_complement(G) == G.n - 1 == betti_hochster(G).pd
        checks.append(Check(f"pd/complement/{kind}{list(params)}", ok))
    for kind, lo in (("cycle", 3), ("line", 2)):
        for n in range(lo, 13):
            ok = pd_closed_form(kind, n) == betti_family(kind, n).pd
            if n <= 8:
                ok = ok and pd_closed_form(kind, n) == betti_hochster(family(kind, n)).pd
            checks.append(Check(f"pd/{kind}{n}", ok))
    return checks


def suite_rp2(seed: int, max_n: int) -> list[Check]:
    G = rp2_graph()
    values = {F.label: rp2_beta_29_31(F) for F in FIELDS3}
    ok = G.n == 31 and values == {"Q": 0, "F2": 1, "Fp:3": 0}
    return [Check("rp2/beta_29_31", ok, f"vertices={G.n} values={values}")]


def suite_cellular(seed: int, max_n: int) -> list[Check]:
    checks = []
    for k, G in enumerate(graph_corpus(seed, 30, 2, max_n)):
        if G.edges:
            checks.append(Check(f"cellular/taylor/{k}", is_cellular_resolution(taylor_complex(G)).ok))
    for F in (QQ, GF2):
        search = c4_search(F)
        wit = search.witnesses_for(C4_EXAMPLE_ASSIGNMENT)
        ok = search.ok and (1, 1, 0, 1) in wit
        checks.append(Check(f"cellular/c4/{F.label}", ok, f"example assignment witnesses={list(wit)}"))
    return checks


def duality_holds(D, field) -> bool:
    h = reduced_homology(D, field)
    hd = reduced_homology(alexander_dual(D), field)
    m = D.m
    return all(h[i] == hd[m - i - 3] for i in range(-1, m)) and all(hd[i] == h[m - i - 3] for i in range(-1, m))


def suite_duality(seed: int, max_n: int) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for k in range(100):
        D = random_complex(rng.randint(1, 7), rng)
        ok = all(duality_holds(D, F) for F in (QQ, GF2))
        checks.append(Check(f"duality/{k}", ok, "" if ok else repr(D)))
    return checks


def monotonicity_pairs(seed: int, count: int = 20, n_max: int = 7) -> list[tuple[Graph, int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        G = random_graph(rng.randint(2, n_max), 0.5, rng)
        out.append((G, rng.getrandbits(G.n)))
    return out


def suite_monotonicity(seed: int, max_n: int) -> list[Check]:
    return [
        Check(f"monotonicity/{k}", monotonicity_check(G, W), f"{_fmt(G)} W={W:#b}")
        for k, (G, W) in enumerate(monotonicity_pairs(seed, 20, max_n))
    ]


SUITES: dict[str, Callable[[int, int], list[Check]]] = {
    "families": suite_families,
    "forest": suite_forest,
    "engines": suite_engines,
    "matchings": suite_matchings,
    "pd": suite_pd,
    "rp2": suite_rp2,
    "cellular": suite_cellular,
    "duality": suite_duality,
    "monotonicity": suite_monotonicity,
}


def run_suites(names: list[str], seed: int = DEFAULT_SEED, max_n: int = 7) -> dict:
    checks = []
    for name in names:
        checks += SUITES[name](seed, max_n)
    return {
        "seed": seed,
        "max_n": max_n,
        "suites": names,
        "ok": all(c.ok for c in checks),
        "passed": sum(c.ok for c in checks),
        "failed": sum(not c.ok for c in checks),
        "checks": [c.to_dict() for c in checks],
    }
