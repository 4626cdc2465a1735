"""Shared fixtures: small named graphs, independent subset-sum oracles, and a
canonical form for comparing graphs built along different operation orders."""

from functools import reduce

import pytest

from vpotts import (
    FormalWeight,
    SparsePolynomial,
    THETA,
    WeightedGraph,
    gamma_var,
    weight_add,
    weight_var,
)


def xw(*labels) -> SparsePolynomial:
    return SparsePolynomial.variable(weight_var(FormalWeight(labels)))


def gv(edge_id: str) -> SparsePolynomial:
    return SparsePolynomial.variable(gamma_var(edge_id))


def theta() -> SparsePolynomial:
    return SparsePolynomial.variable(THETA)


def make_k3() -> WeightedGraph:
    """Triangle with weights a, b, c; e1 = {v1,v2} < e2 = {v1,v3} < e3 = {v2,v3}."""
    return WeightedGraph.build(
        [("v1", FormalWeight(("a",))), ("v2", FormalWeight(("b",))), ("v3", FormalWeight(("c",)))],
        [("e1", "v1", "v2"), ("e2", "v1", "v3"), ("e3", "v2", "v3")],
    )


def make_single_edge() -> WeightedGraph:
    return WeightedGraph.build(
        [("v1", FormalWeight(("a",))), ("v2", FormalWeight(("b",)))],
        [("e1", "v1", "v2")],
    )


def make_loop() -> WeightedGraph:
    return WeightedGraph.build([("v1", FormalWeight(("a",)))], [("e1", "v1", "v1")])


def make_path3() -> WeightedGraph:
    return WeightedGraph.build(
        [("v1", FormalWeight(("a",))), ("v2", FormalWeight(("b",))), ("v3", FormalWeight(("c",)))],
        [("e1", "v1", "v2"), ("e2", "v2", "v3")],
    )


def make_complete(n: int) -> WeightedGraph:
    vids = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((f"e{len(edges) + 1}", vids[i], vids[j]))
    return WeightedGraph.build(vids, edges)


@pytest.fixture
def k3():
    return make_k3()


@pytest.fixture
def single_edge():
    return make_single_edge()


@pytest.fixture
def loop_graph():
    return make_loop()


@pytest.fixture
def path3():
    return make_path3()


# -- independent oracles -----------------------------------------------------
#
# Plain subset enumeration with a local union-find; shares nothing with the
# enumeration, vpoly, or tutte implementations beyond the algebra primitives.


def _subsets(edges):
    for mask in range(1 << len(edges)):
        yield [edges[i] for i in range(len(edges)) if mask >> i & 1]


def _blocks(vertex_ids, pairs):
    parent = {v: v for v in vertex_ids}

    def find(item):
        while parent[item] != item:
            item = parent[item]
        return item

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    grouped = {}
    for vid in vertex_ids:
        grouped.setdefault(find(vid), []).append(vid)
    return list(grouped.values())


def _gamma_factor(edge) -> SparsePolynomial:
    if edge.gamma is None:
        return SparsePolynomial.variable(gamma_var(edge.id))
    return SparsePolynomial.constant(edge.gamma)


def oracle_v(graph: WeightedGraph) -> SparsePolynomial:
    """Definitional subgraph sum for the V-polynomial."""
    total = SparsePolynomial.zero()
    for subset in _subsets(list(graph.edges)):
        term = SparsePolynomial.one()
        for block in _blocks(graph.vertex_ids(), [(e.u, e.v) for e in subset]):
            weight = reduce(weight_add, [graph.weight_of(v) for v in block])
            term = term * SparsePolynomial.variable(weight_var(weight))
        for e in subset:
            term = term * _gamma_factor(e)
        total = total + term
    return total


def oracle_zt(graph: WeightedGraph) -> SparsePolynomial:
    """Definitional subgraph sum for the multivariate Tutte polynomial."""
    total = SparsePolynomial.zero()
    for subset in _subsets(list(graph.edges)):
        k = len(_blocks(graph.vertex_ids(), [(e.u, e.v) for e in subset]))
        term = SparsePolynomial.variable(THETA, k)
        for e in subset:
            term = term * _gamma_factor(e)
        total = total + term
    return total


def graph_canon(graph: WeightedGraph):
    """Order-insensitive comparable form: vertices by id, edges by order."""
    return (
        tuple(sorted(graph.vertices, key=lambda item: item[0])),
        tuple(
            (e.order, e.id, tuple(sorted((e.u, e.v))), e.gamma)
            for e in sorted(graph.edges, key=lambda e: e.order)
        ),
    )
