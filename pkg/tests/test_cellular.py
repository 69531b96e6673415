from __future__ import annotations

import random

import pytest

from graphbetti.betti import betti_hochster
from graphbetti.cellular import (
    C4_GENERATORS,
    C4_EXAMPLE_ASSIGNMENT,
    C4_SHAPE,
    LabeledCellComplex,
    c4_has_no_minimal_cellular,
    c4_search,
    is_cellular_resolution,
    lcm_lattice,
    precedes,
    restrict_below,
    taylor_complex,
    vanishing_bound_check,
)
from graphbetti.complex import SimplicialComplex
from graphbetti.graph import GraphError, family, make_graph, random_graph
from graphbetti.homology import GF2, QQ


def test_taylor_single_edge():
    X = taylor_complex(family("line", 2))
    assert X.labels == ((1, 1),)
    assert X.complex == SimplicialComplex.simplex(1)


def test_taylor_c4_and_path():
    X = taylor_complex(family("cycle", 4))
    assert X.face_counts() == [4, 6, 4, 1]
    assert X.face_label(X.complex.facets[0]) == (1, 1, 1, 1)
    P = taylor_complex(family("line", 3))
    assert P.labels == ((1, 1, 0), (0, 1, 1))
    assert P.face_label(0b11) == (1, 1, 1)
    with pytest.raises(GraphError):
        taylor_complex(make_graph(3, []))


def test_labeled_complex_validation():
    with pytest.raises(ValueError):
        LabeledCellComplex(SimplicialComplex.simplex(2), ((1, 0),))
    with pytest.raises(ValueError):
        LabeledCellComplex(SimplicialComplex.simplex(2), ((1, 0), (1,)))
    with pytest.raises(ValueError):
        LabeledCellComplex(SimplicialComplex.simplex(1), ((-1, 0),))


def test_restrict_below_examples():
    X = LabeledCellComplex(C4_SHAPE, C4_EXAMPLE_ASSIGNMENT)
    assert restrict_below(X, (1, 1, 1, 1)) == C4_SHAPE
    assert restrict_below(X, (1, 1, 0, 1)).facets == (0b0010, 0b1000)
    assert restrict_below(X, (0, 0, 0, 0)).is_void


def test_restrict_below_is_monotone():
    X = taylor_complex(family("cycle", 5))
    lattice = lcm_lattice(X.labels)
    for a in lattice:
        for b in lattice:
            if precedes(a, b):
                assert restrict_below(X, a).faces <= restrict_below(X, b).faces


def test_lcm_lattice_of_c4():
    lattice = lcm_lattice(C4_GENERATORS)
    # four generators, four joins of adjacent edges, and the top degree
    assert len(lattice) == 9
    assert (1, 1, 1, 1) in lattice and (1, 1, 1, 0) in lattice


def test_example_assignment_fails_at_1101():
    check = is_cellular_resolution(LabeledCellComplex(C4_SHAPE, C4_EXAMPLE_ASSIGNMENT))
    assert not check
    assert check.witnesses == ((1, 1, 0, 1),)


@pytest.mark.parametrize("F", [QQ, GF2])
def test_c4_search(F):
    assert c4_has_no_minimal_cellular(F)
    search = c4_search(F)
    assert len(search.assignments) == 24
    assert all(wit for _, wit in search.assignments)
    with pytest.raises(KeyError):
        search.witnesses_for([(0, 0, 0, 0)] * 4)


def test_taylor_is_not_minimal_for_c4():
    table = betti_hochster(family("cycle", 4))
    assert taylor_complex(family("cycle", 4)).face_counts() != [table.total(i) for i in (1, 2, 3)]


def test_single_point_is_cellular():
    X = LabeledCellComplex(SimplicialComplex.simplex(1), ((1, 1, 0),))
    assert is_cellular_resolution(X)


def test_taylor_complexes_pass_and_bound_betti():
    rng = random.Random(4)
    for _ in range(15):
        G = random_graph(rng.randint(2, 6), 0.5, rng)
        if not G.edges:
            continue
        X = taylor_complex(G)
        assert is_cellular_resolution(X)
        table = betti_hochster(G)
        for i, count in enumerate(X.face_counts(), start=1):
            assert count >= table.total(i)
    small = taylor_complex(family("cycle", 4))
    assert is_cellular_resolution(small, cone_shortcut=False)
    assert is_cellular_resolution(small, GF2, cone_shortcut=False)


def test_vanishing_bound_corpora():
    rng = random.Random(8)
    graphs = [random_graph(rng.randint(2, 7), 0.5, rng) for _ in range(10)]
    graphs += [family("cycle", 8), family("complete_bipartite", 3, 3)]
    assert all(vanishing_bound_check(G) for G in graphs)
