"""The V-polynomial of a vertex- and edge-weighted graph, computed by five
independent routes, plus its specialization to the multivariate Tutte
polynomial.

The five routes are: the deletion-contraction recursion (the definition), the
state sum over edge subsets, the spanning-tree expansion with edge
activities, the connected-partition expansion, and the spanning-forest
expansion.  On every graph they produce canonically identical polynomials,
which the test suite exercises aggressively.
"""

from __future__ import annotations

from functools import reduce

from .algebra import (
    THETA,
    SparsePolynomial,
    gamma_var,
    weight_add,
    weight_var,
)
from .enumeration import classify_activities, connected_partitions, spanning_forests, spanning_trees
from .graph import Edge, WeightedGraph
from .tutte import zt_q1_connected

__all__ = [
    "v_deletion_contraction",
    "v_state_sum",
    "v_spanning_tree",
    "v_connected_partition",
    "v_spanning_forest",
    "specialize_x_to_theta",
]


def _gamma_factor(edge: Edge) -> SparsePolynomial:
    if edge.gamma is None:
        return SparsePolynomial.variable(gamma_var(edge.id))
    return SparsePolynomial.constant(edge.gamma)


def _component_weight(graph: WeightedGraph, block) -> object:
    return reduce(weight_add, (graph.weight_of(vid) for vid in sorted(block)))


def _x_product(graph: WeightedGraph, blocks) -> SparsePolynomial:
    term = SparsePolynomial.one()
    for block in blocks:
        term = term * SparsePolynomial.variable(
            weight_var(_component_weight(graph, block))
        )
    return term


def v_deletion_contraction(graph: WeightedGraph) -> SparsePolynomial:
    """Defining recursion: V(G) = V(G-e) + gamma_e V(G/e) on a non-loop edge,
    a (gamma_e + 1) factor per loop, and the product of x variables of the
    vertex weights on edgeless graphs.

    The pivot is the non-loop edge with the highest order index.  Loops are
    stripped eagerly and connected components are processed independently;
    both shortcuts preserve the result and are covered by tests.
    """
    loops = [e for e in graph.edges if e.is_loop()]
    if loops:
        stripped = graph
        factor = SparsePolynomial.one()
        for e in loops:
            factor = factor * (_gamma_factor(e) + 1)
            stripped = stripped.delete_edge(e.id)
        return factor * v_deletion_contraction(stripped)

    blocks = graph.components()
    if len(blocks) > 1:
        result = SparsePolynomial.one()
        for block in blocks:
            result = result * v_deletion_contraction(graph.induced_subgraph(block))
        return result

    if not graph.edges:
        return _x_product(graph, [{vid} for vid in graph.vertex_ids()])

    pivot = max(graph.edges, key=lambda e: e.order)
    return v_deletion_contraction(graph.delete_edge(pivot.id)) + _gamma_factor(
        pivot
    ) * v_deletion_contraction(graph.contract_edge(pivot.id))


def v_state_sum(graph: WeightedGraph) -> SparsePolynomial:
    """Sum over edge subsets A of the product of the edge weights in A and
    one x variable per component of (V, A), indexed by its weight sum."""
    edges = graph.edges_by_order()
    total = SparsePolynomial.zero()
    for mask in range(1 << len(edges)):
        subset = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        term = _x_product(graph, graph.components([e.id for e in subset]))
        for e in subset:
            term = term * _gamma_factor(e)
        total = total + term
    return total


def v_spanning_tree(graph: WeightedGraph) -> SparsePolynomial:
    """Spanning-tree expansion: per tree, the product of internally inactive
    edge weights and (gamma + 1) over externally active edges, times the
    V-polynomial of the tree with its internally inactive edges contracted.

    The contracted forest's edges biject with the internally active edges;
    its V-polynomial is evaluated by the state sum.
    """
    total = SparsePolynomial.zero()
    for tree in spanning_trees(graph):
        acts = classify_activities(graph, tree)
        factor = SparsePolynomial.one()
        for eid in sorted(acts.internally_inactive):
            factor = factor * _gamma_factor(graph.edge(eid))
        for eid in sorted(acts.externally_active):
            factor = factor * (_gamma_factor(graph.edge(eid)) + 1)
        contracted = graph.spanning_subgraph(tree)
        for eid in sorted(acts.internally_inactive):
            contracted = contracted.contract_edge(eid)
        total = total + factor * v_state_sum(contracted)
    return total


def v_connected_partition(graph: WeightedGraph) -> SparsePolynomial:
    """Connected-partition expansion: per partition, the product of x
    variables of the block weight sums times, per block, the degree-one
    theta coefficient of the block's multivariate Tutte polynomial.

    Block coefficients are memoized per call since many partitions share
    blocks.
    """
    memo: dict = {}

    def block_factor(block) -> SparsePolynomial:
        if block not in memo:
            memo[block] = zt_q1_connected(graph.induced_subgraph(block))
        return memo[block]

    total = SparsePolynomial.zero()
    for blocks in connected_partitions(graph):
        term = _x_product(graph, blocks)
        for block in blocks:
            term = term * block_factor(block)
        total = total + term
    return total


def v_spanning_forest(graph: WeightedGraph) -> SparsePolynomial:
    """Spanning-forest expansion: per forest, the product of x variables of
    the forest component weight sums, the product of forest edge weights, and
    (1 + gamma) over externally active edges."""
    total = SparsePolynomial.zero()
    for forest in spanning_forests(graph):
        acts = classify_activities(graph, forest)
        term = _x_product(graph, graph.components(forest))
        for eid in sorted(forest):
            term = term * _gamma_factor(graph.edge(eid))
        for eid in sorted(acts.externally_active):
            term = term * (_gamma_factor(graph.edge(eid)) + 1)
        total = total + term
    return total


def specialize_x_to_theta(poly: SparsePolynomial) -> SparsePolynomial:
    """Replace every x variable by theta.  Applied to a V-polynomial this
    yields the multivariate Tutte polynomial of the same graph."""
    terms = []
    for mono, coeff in poly.items():
        theta_power = 0
        rest = []
        for var, exp in mono:
            if var[0] == "x":
                theta_power += exp
            elif var == THETA:
                theta_power += exp
            else:
                rest.append((var, exp))
        if theta_power:
            rest.append((THETA, theta_power))
        terms.append((rest, coeff))
    return SparsePolynomial.from_terms(terms)
