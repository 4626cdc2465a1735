"""Multivariate Tutte polynomial, the classical Tutte polynomial, the Traldi
spanning-tree expansion, and degree-one coefficient extraction in theta/q."""

from __future__ import annotations

from .algebra import (
    THETA,
    TUTTE_X,
    TUTTE_Y,
    SparsePolynomial,
    gamma_var,
)
from .enumeration import classify_activities, spanning_trees
from .errors import InputError
from .graph import Edge, WeightedGraph

__all__ = ["zt_subset_sum", "zt_traldi", "tutte_polynomial", "zt_q1_connected"]


def _gamma_factor(edge: Edge) -> SparsePolynomial:
    if edge.gamma is None:
        return SparsePolynomial.variable(gamma_var(edge.id))
    return SparsePolynomial.constant(edge.gamma)


def zt_subset_sum(graph: WeightedGraph) -> SparsePolynomial:
    """Defining sum over every edge subset A: theta^k(A) times the product of
    the edge weights in A."""
    edges = graph.edges_by_order()
    total = SparsePolynomial.zero()
    for mask in range(1 << len(edges)):
        subset = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        k, _, _ = graph.subgraph_stats([e.id for e in subset])
        term = SparsePolynomial.variable(THETA, k)
        for e in subset:
            term = term * _gamma_factor(e)
        total = total + term
    return total


def zt_traldi(graph: WeightedGraph) -> SparsePolynomial:
    """Spanning-tree expansion: theta^k(G) times, per tree, the product of
    internally inactive edge weights, (gamma + theta) over internally active
    edges, and (gamma + 1) over externally active edges."""
    k = len(graph.components())
    theta = SparsePolynomial.variable(THETA)
    total = SparsePolynomial.zero()
    for tree in spanning_trees(graph):
        acts = classify_activities(graph, tree)
        term = SparsePolynomial.one()
        for eid in sorted(acts.internally_inactive):
            term = term * _gamma_factor(graph.edge(eid))
        for eid in sorted(acts.internally_active):
            term = term * (_gamma_factor(graph.edge(eid)) + theta)
        for eid in sorted(acts.externally_active):
            term = term * (_gamma_factor(graph.edge(eid)) + 1)
        total = total + term
    return SparsePolynomial.variable(THETA, k) * total


def tutte_polynomial(graph: WeightedGraph) -> SparsePolynomial:
    """Activity generating polynomial over spanning trees:
    sum of x^|internally active| * y^|externally active|."""
    total = SparsePolynomial.zero()
    for tree in spanning_trees(graph):
        acts = classify_activities(graph, tree)
        total = total + SparsePolynomial.from_terms(
            [
                (
                    {
                        TUTTE_X: len(acts.internally_active),
                        TUTTE_Y: len(acts.externally_active),
                    },
                    1,
                )
            ]
        )
    return total


def zt_q1_connected(graph: WeightedGraph) -> SparsePolynomial:
    """Degree-one theta coefficient of the multivariate Tutte polynomial of a
    connected graph: the sum over connected spanning subgraphs of the product
    of their edge weights."""
    if len(graph.components()) != 1:
        raise InputError("graph must be connected")
    return zt_subset_sum(graph).coefficient_of(THETA, 1)
