"""Betti numbers and projective dimension of edge ideals of graphs."""

from graphbetti.betti import (
    BettiTable,
    CeilingExceededError,
    PdResult,
    betti_dual_links,
    betti_hochster,
    betti_hochster_at,
    betti_koszul,
    betti_table,
    projective_dimension,
)
from graphbetti.forest import betti_forest, pd_forest
from graphbetti.graph import Graph, GraphError, family, make_graph
from graphbetti.homology import GF2, GF3, QQ, FieldSpec

__all__ = [
    "BettiTable",
    "CeilingExceededError",
    "FieldSpec",
    "GF2",
    "GF3",
    "Graph",
    "GraphError",
    "PdResult",
    "QQ",
    "betti_dual_links",
    "betti_forest",
    "betti_hochster",
    "betti_hochster_at",
    "betti_koszul",
    "betti_table",
    "family",
    "make_graph",
    "pd_forest",
    "projective_dimension",
]
__version__ = "0.1.0"
