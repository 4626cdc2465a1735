"""Seeded random instances for the crosscheck harness and the test suite.

Graph generator, given a seeded random.Random:

1. draw n uniformly from 1..max_vertices; vertices v1..vn carry the distinct
   formal weights w1..wn;
2. include each unordered pair {vi, vj}, i < j, independently with
   probability 1/2;
3. add a loop at each vertex with probability 0.15;
4. duplicate each edge produced by steps 2-3 with probability 0.15 (one pass,
   so duplicates are not themselves duplicated);
5. if more than max_edges edges were produced, keep a uniform random sample
   of max_edges of them, preserving construction order;
6. edge ids e1..em and order indices 0..m-1 follow construction order.

Parameter generator: q from qs, beta uniform in [0.1, 2], couplings uniform
in [-2, 2], field entries uniform in [-1, 1] per spin.
"""

from __future__ import annotations

import random
from typing import Tuple

from .algebra import FieldWeight, FormalWeight
from .graph import WeightedGraph
from .potts import PottsParams

__all__ = [
    "random_weighted_graph",
    "random_potts_params",
    "random_constant_coupling_params",
]

_PAIR_PROBABILITY = 0.5
_LOOP_PROBABILITY = 0.15
_PARALLEL_PROBABILITY = 0.15


def random_weighted_graph(
    rng: random.Random, max_vertices: int = 6, max_edges: int = 9
) -> WeightedGraph:
    n = rng.randint(1, max_vertices)
    vertex_ids = [f"v{i}" for i in range(1, n + 1)]
    endpoint_pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < _PAIR_PROBABILITY:
                endpoint_pairs.append((vertex_ids[i], vertex_ids[j]))
    for vid in vertex_ids:
        if rng.random() < _LOOP_PROBABILITY:
            endpoint_pairs.append((vid, vid))
    for u, v in list(endpoint_pairs):
        if rng.random() < _PARALLEL_PROBABILITY:
            endpoint_pairs.append((u, v))
    if len(endpoint_pairs) > max_edges:
        keep = sorted(rng.sample(range(len(endpoint_pairs)), max_edges))
        endpoint_pairs = [endpoint_pairs[i] for i in keep]
    return WeightedGraph.build(
        [(vid, FormalWeight((f"w{i + 1}",))) for i, vid in enumerate(vertex_ids)],
        [(f"e{i + 1}", u, v) for i, (u, v) in enumerate(endpoint_pairs)],
    )


def random_potts_params(
    rng: random.Random,
    graph: WeightedGraph,
    qs: Tuple[int, ...] = (2, 3, 4),
    zero_field: bool = False,
) -> PottsParams:
    q = rng.choice(qs)
    beta = rng.uniform(0.1, 2.0)
    couplings = {e.id: rng.uniform(-2.0, 2.0) for e in graph.edges_by_order()}
    if zero_field:
        fields = {vid: FieldWeight.zero(q) for vid in graph.vertex_ids()}
    else:
        fields = {
            vid: FieldWeight(tuple(rng.uniform(-1.0, 1.0) for _ in range(q)))
            for vid in graph.vertex_ids()
        }
    return PottsParams(q, beta, couplings, fields)


def random_constant_coupling_params(
    rng: random.Random,
    graph: WeightedGraph,
    qs: Tuple[int, ...] = (2, 3, 4),
) -> PottsParams:
    """Zero-field parameters with one shared coupling, beta*J in [0.1, 2]."""
    q = rng.choice(qs)
    beta = rng.uniform(0.1, 2.0)
    coupling = rng.uniform(0.1, 2.0) / beta
    couplings = {e.id: coupling for e in graph.edges_by_order()}
    return PottsParams.zero_field(graph, q, beta, couplings)
