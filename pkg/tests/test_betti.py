from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

import oracles
from graphbetti.betti import (
    BettiTable,
    CeilingExceededError,
    betti_dual_links,
    betti_hochster,
    betti_hochster_at,
    betti_koszul,
    betti_table,
    independent_subsets,
    monotonicity_check,
    pd_by_disconnected_complement,
    projective_dimension,
    vanishing_band_ok,
)
from graphbetti.graph import (
    count_induced_matchings,
    delete_vertices,
    disjoint_union,
    family,
    make_graph,
    random_graph,
)
from graphbetti.homology import GF2, GF3, QQ, FieldSpec
from strategies import graphs

C4_TABLE = {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}


def test_c4_table():
    assert betti_hochster(family("cycle", 4)).graded == C4_TABLE


def test_trivial_tables():
    assert betti_hochster(family("complete", 2)).graded == {(0, 0): 1, (1, 2): 1}
    assert betti_hochster(make_graph(4, [])).graded == {(0, 0): 1}
    assert betti_hochster(make_graph(0, [])).graded == {(0, 0): 1}


def test_dual_links_examples():
    assert betti_dual_links(family("cycle", 5)).totals() == [1, 5, 5, 1]
    assert betti_dual_links(family("line", 2)).graded == {(0, 0): 1, (1, 2): 1}
    assert betti_dual_links(family("star", 2)).totals() == [1, 2, 1]


def test_koszul_single_edge():
    T = betti_koszul(family("line", 2))
    assert T.convention == "ideal"
    assert T.multigraded == {(0, 0b11): 1}
    assert T.to_quotient().graded == {(0, 0): 1, (1, 2): 1}


@pytest.mark.parametrize("G,pd", [(family("complete", 4), 3), (family("cycle", 7), 5),
                                  (disjoint_union(family("complete", 3), family("complete", 2)), 3)])
def test_projective_dimension_examples(G, pd):
    assert projective_dimension(G).value == pd


def test_pd_certificate():
    res = betti_hochster(family("cycle", 6)).projective_dimension()
    assert res.value == 4 and res.certificate == (4, 6)


def test_pd_by_complement():
    assert pd_by_disconnected_complement(family("complete", 5)) == 4
    assert pd_by_disconnected_complement(family("complete_bipartite", 2, 3)) == 4
    assert pd_by_disconnected_complement(family("cycle", 6)) is None


def test_monotonicity_examples():
    G = family("complete", 4)
    assert monotonicity_check(G, G.full_mask)
    assert monotonicity_check(G, [0, 1, 2])
    rng = random.Random(3)
    for _ in range(20):
        G = random_graph(rng.randint(2, 6), 0.5, rng)
        assert monotonicity_check(G, rng.getrandbits(G.n))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_hochster_against_oracle(G):
    for F in (QQ, GF2):
        assert betti_hochster(G, F).graded == oracles.hochster_graded(G.n, G.edges, F.characteristic)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_three_engines_agree(G):
    for F in (QQ, GF2, GF3):
        h = betti_hochster(G, F)
        assert betti_dual_links(G, F).graded == h.graded
        k = betti_koszul(G, F)
        assert k.to_quotient().graded == h.graded
        assert k.to_quotient().multigraded == h.multigraded


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_structural_properties(G):
    T = betti_hochster(G)
    assert T[(0, 0)] == 1
    assert T[(1, 2)] == len(G.edges)
    assert all(v > 0 for v in T.graded.values())
    assert vanishing_band_ok(T)
    assert T.pd <= G.n
    assert T.graded_from_multigraded() == T.graded
    # multigraded support is squarefree by construction and sums to the graded table
    for i in range(1, G.n // 2 + 1):
        assert T[(i, 2 * i)] == count_induced_matchings(G, i)


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
def test_pd_additive(G1, G2):
    assert betti_hochster(disjoint_union(G1, G2)).pd == betti_hochster(G1).pd + betti_hochster(G2).pd


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_terminal_vertex_deletion(G):
    pd = betti_hochster(G).pd
    for b in range(G.n):
        if G.degree(b) == 1:
            assert betti_hochster(delete_vertices(G, [b])).pd <= pd


def test_independent_subsets():
    G = family("line", 3)
    assert sorted(independent_subsets(G.adjacency, G.full_mask)) == [0, 1, 2, 4, 5]


def test_restricted_mode_matches_full_table():
    G = family("cycle", 6)
    full = betti_hochster(G)
    pairs = [(i, W) for (i, W) in full.multigraded]
    got = betti_hochster_at(G, pairs)
    assert all(got[(i, W)] == full.multigraded[(i, W)] for i, W in pairs)
    assert betti_hochster_at(G, [(1, [0, 2])]) == {(1, 0b101): 0}


def test_ceiling():
    with pytest.raises(CeilingExceededError) as info:
        betti_hochster(family("cycle", 9), ceiling=8)
    assert info.value.n == 9 and info.value.ceiling == 8
    with pytest.raises(CeilingExceededError):
        betti_dual_links(family("cycle", 9), ceiling=8)
    with pytest.raises(CeilingExceededError):
        betti_koszul(family("cycle", 9), ceiling=8)


def test_parallel_map_is_deterministic():
    G = random_graph(9, 0.4, random.Random(11))
    serial = betti_hochster(G)
    parallel = betti_hochster(G, workers=2)
    assert parallel.graded == serial.graded and parallel.multigraded == serial.multigraded
    assert betti_dual_links(G, workers=2).graded == serial.graded


def test_betti_table_dispatch():
    G = family("line", 4)
    for method in ("hochster", "dual-links", "koszul", "forest"):
        assert betti_table(G, QQ, method).graded == betti_hochster(G).graded
    with pytest.raises(ValueError):
        betti_table(G, QQ, "magic")


def test_json_roundtrip():
    for G in (family("cycle", 5), family("complete_bipartite", 2, 2)):
        for F in (QQ, GF2, FieldSpec(5)):
            T = betti_hochster(G, F)
            back = BettiTable.from_json(T.to_json())
            assert back == T
    data = betti_hochster(family("cycle", 4)).to_dict()
    assert data["convention"] == "quotient" and data["field"] == "Q" and data["pd"] == 3
    assert {"i": 3, "b": [1, 1, 1, 1], "value": 1} in data["multigraded"]


def test_render_text():
    text = betti_hochster(family("cycle", 4)).render_text()
    lines = text.splitlines()
    assert lines[0].split()[1:6] == ["0", "2", "3", "4", "total"]
    assert lines[2].split() == ["i=1:", ".", "4", ".", ".", "4"]
    assert BettiTable(0, {}).render_text() == "(empty table)"


def test_empty_table_has_no_pd():
    with pytest.raises(ValueError):
        BettiTable(0, {}).projective_dimension()
