import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vpotts import (
    FormalWeight,
    InputError,
    LoopContractionError,
    WeightedGraph,
    weight_add,
)
from vpotts.random_graphs import random_weighted_graph

from conftest import graph_canon, make_k3, make_loop, make_single_edge


def test_delete_single_edge_leaves_isolated_vertices(single_edge):
    result = single_edge.delete_edge("e1")
    assert result.edges == ()
    assert result.vertices == single_edge.vertices


def test_delete_k3_edge_keeps_other_data(k3):
    result = k3.delete_edge("e2")
    assert result.edge_ids() == frozenset({"e1", "e3"})
    assert result.vertices == k3.vertices
    assert result.edge("e3").order == k3.edge("e3").order


def test_delete_loop(loop_graph):
    result = loop_graph.delete_edge("e1")
    assert result.edges == ()
    assert result.weight_of("v1") == FormalWeight(("a",))


def test_delete_unknown_edge(k3):
    with pytest.raises(InputError):
        k3.delete_edge("nope")


def test_contract_single_edge_merges_weights(single_edge):
    result = single_edge.contract_edge("e1")
    assert result.edges == ()
    assert len(result.vertices) == 1
    assert result.vertices[0][1] == FormalWeight(("a", "b"))


def test_contract_parallel_edge_makes_loop():
    g = WeightedGraph.build(
        [("v1", FormalWeight(("a",))), ("v2", FormalWeight(("b",)))],
        [("e1", "v1", "v2"), ("e2", "v1", "v2")],
    )
    result = g.contract_edge("e1")
    assert len(result.vertices) == 1
    e2 = result.edge("e2")
    assert e2.is_loop()
    assert e2.order == 1


def test_contract_k3_edge_gives_parallel_pair(k3):
    result = k3.contract_edge("e1")
    assert len(result.vertices) == 2
    assert result.edge_ids() == frozenset({"e2", "e3"})
    e2, e3 = result.edge("e2"), result.edge("e3")
    assert {e2.u, e2.v} == {e3.u, e3.v}
    assert not e2.is_loop()
    assert result.weight_of("v1") == FormalWeight(("a", "b"))


def test_contract_loop_rejected(loop_graph):
    with pytest.raises(LoopContractionError):
        loop_graph.contract_edge("e1")


def test_contract_unknown_edge(k3):
    with pytest.raises(InputError):
        k3.contract_edge("nope")


def test_subgraph_stats_k3(k3):
    assert k3.subgraph_stats([]) == (3, 0, 0)
    assert k3.subgraph_stats(["e1", "e2", "e3"]) == (1, 2, 1)
    assert k3.subgraph_stats(["e1", "e2"]) == (1, 2, 0)


def test_subgraph_stats_foreign_edge(k3):
    with pytest.raises(InputError):
        k3.subgraph_stats(["e9"])


def test_components():
    isolated = WeightedGraph.build(["v1", "v2"])
    assert isolated.components() == (frozenset({"v1"}), frozenset({"v2"}))
    k3 = make_k3()
    assert k3.components() == (frozenset({"v1", "v2", "v3"}),)
    with_extra = WeightedGraph(
        k3.vertices + (("v4", FormalWeight(("d",))),), k3.edges
    )
    assert with_extra.components() == (
        frozenset({"v1", "v2", "v3"}),
        frozenset({"v4"}),
    )


def test_duplicate_ids_rejected():
    with pytest.raises(InputError):
        WeightedGraph.build(["v1", "v1"])
    with pytest.raises(InputError):
        WeightedGraph.build(["v1", "v2"], [("e1", "v1", "v2"), ("e1", "v2", "v1")])


def test_dangling_endpoint_rejected():
    with pytest.raises(InputError):
        WeightedGraph.build(["v1"], [("e1", "v1", "v9")])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_contraction_counts(seed):
    g = random_weighted_graph(random.Random(seed))
    for e in g.edges:
        if e.is_loop():
            continue
        contracted = g.contract_edge(e.id)
        assert len(contracted.vertices) == len(g.vertices) - 1
        assert len(contracted.edges) == len(g.edges) - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_disjoint_deletions_and_contractions_commute(seed):
    g = random_weighted_graph(random.Random(seed))
    edges = list(g.edges)
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            assert graph_canon(g.delete_edge(e.id).delete_edge(f.id)) == graph_canon(
                g.delete_edge(f.id).delete_edge(e.id)
            )
            if e.is_loop() or f.is_loop():
                continue
            if {e.u, e.v} & {f.u, f.v}:
                continue
            assert graph_canon(
                g.contract_edge(e.id).contract_edge(f.id)
            ) == graph_canon(g.contract_edge(f.id).contract_edge(e.id))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_contraction_conserves_weight_sum(seed):
    g = random_weighted_graph(random.Random(seed))
    def total(graph):
        weights = [w for _, w in graph.vertices]
        acc = weights[0]
        for w in weights[1:]:
            acc = weight_add(acc, w)
        return acc
    for e in g.edges:
        if not e.is_loop():
            assert total(g.contract_edge(e.id)) == total(g)


def test_immutability_of_operations(k3):
    before = graph_canon(k3)
    k3.delete_edge("e1")
    k3.contract_edge("e1")
    k3.components(["e1"])
    assert graph_canon(k3) == before
