from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graphbetti.complex import SimplicialComplex, independence_complex, random_complex
from graphbetti.fixtures import rp2_complex
from graphbetti.graph import members
from graphbetti.homology import (
    GF2,
    GF3,
    QQ,
    ExactMatrix,
    FieldSpec,
    HomologyProfile,
    boundary_matrix,
    rank,
    reduced_homology,
    reduced_homology_dim,
)
from strategies import graphs

FIELDS = [QQ, GF2, GF3, FieldSpec(7)]


@pytest.mark.parametrize("text,p", [("0", 0), ("Q", 0), ("2", 2), ("F2", 2), ("p:3", 3), ("Fp:101", 101), ("5", 5)])
def test_field_parse(text, p):
    assert FieldSpec.parse(text).characteristic == p


@pytest.mark.parametrize("text", ["4", "p:9", "R", "", "p:", "1"])
def test_field_parse_rejects(text):
    with pytest.raises(ValueError):
        FieldSpec.parse(text)


def test_field_labels_roundtrip():
    for F in FIELDS:
        assert FieldSpec.parse(F.label) == F
    with pytest.raises(ValueError):
        FieldSpec(2**31 + 11)


def test_void_irrelevant_point():
    assert reduced_homology(SimplicialComplex.void_complex(2)).dims == {}
    assert reduced_homology(SimplicialComplex.irrelevant(2)).dims == {-1: 1}
    assert reduced_homology(SimplicialComplex.simplex(1)).is_acyclic
    assert reduced_homology(SimplicialComplex.from_facets(2, [(0,), (1,)])).dims == {0: 1}


@pytest.mark.parametrize("m", range(1, 7))
def test_sphere_boundary(m):
    full = (1 << m) - 1
    D = SimplicialComplex.from_facets(m, [full ^ (1 << v) for v in range(m)])
    for F in FIELDS:
        assert reduced_homology(D, F) == {m - 2: 1}


def test_projective_plane_depends_on_characteristic():
    D = rp2_complex()
    assert reduced_homology(D, GF2) == {1: 1, 2: 1}
    assert reduced_homology(D, QQ) == {}
    assert reduced_homology(D, GF3) == {}
    assert reduced_homology(D, QQ).euler_characteristic() == 0
    assert reduced_homology_dim(D, 1, GF2) == 1


@pytest.mark.parametrize("F", FIELDS)
def test_boundary_squares_to_zero(F):
    D = SimplicialComplex.simplex(5)
    for i in range(1, 5):
        assert (boundary_matrix(D, i, F) @ boundary_matrix(D, i + 1, F)).is_zero()


def test_boundary_matrix_shape_and_signs():
    M = boundary_matrix(SimplicialComplex.simplex(3), 2)
    # rows {0,1}, {0,2}, {1,2}; single column {0,1,2}
    assert (M.rows, M.cols) == (3, 1)
    assert [r[0] for r in M.entries] == [1, -1, 1]
    assert boundary_matrix(SimplicialComplex.simplex(2), 0).entries == ((1, 1),)
    with pytest.raises(ValueError):
        boundary_matrix(SimplicialComplex.simplex(2), -2)


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=6)
)


@settings(max_examples=150)
@given(matrices, st.sampled_from([0, 2, 3, 5, 7]))
def test_rank_against_oracle(rows, p):
    M = ExactMatrix.from_rows(rows, FieldSpec(p))
    assert rank(M) == oracles.matrix_rank(rows, p)


def test_rank_of_large_entries():
    rows = [[10**30, 1], [10**30 + 1, 1]]
    assert rank(ExactMatrix.from_rows(rows)) == 2
    assert rank(ExactMatrix.from_rows([[2, 4], [1, 2]], GF2)) == 1


def test_matrix_validation():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2]]) @ ExactMatrix.from_rows([[1, 2]])


@settings(max_examples=80)
@given(st.integers(0, 6), st.randoms(use_true_random=False), st.sampled_from([0, 2, 3]))
def test_homology_against_oracle(m, rnd, p):
    D = random_complex(m, random.Random(rnd.random()))
    faces = [tuple(members(f)) for f in D.faces] if not D.void else []
    assert reduced_homology(D, FieldSpec(p)).dims == oracles.reduced_homology(faces, p)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_independence_complex_homology(G):
    D = independence_complex(G)
    faces = oracles.independent_sets(G.n, G.edges)
    assert reduced_homology(D).dims == oracles.reduced_homology(faces)
    for j in range(-1, G.n):
        assert reduced_homology_dim(D, j) == reduced_homology(D)[j]


def test_profile_equality_ignores_zeros():
    assert HomologyProfile({1: 0, 2: 3}) == HomologyProfile({2: 3})
    assert hash(HomologyProfile({1: 0})) == hash(HomologyProfile({}))
    assert HomologyProfile({}).is_acyclic
