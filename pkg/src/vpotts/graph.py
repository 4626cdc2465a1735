"""Vertex- and edge-weighted multigraphs with weight-merging contraction.

Loops and parallel edges are allowed.  Every edge carries a distinct order
index; edge identity and order indices survive deletion and contraction of
other edges, so subgraphs inherit the ambient edge order.  Contracting an
edge merges its endpoints into a single vertex whose weight is the semigroup
sum of the endpoint weights; edges parallel to the contracted edge become
loops.  Loops cannot be contracted.

Graphs are immutable; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple

from .algebra import ExactComplex, FormalWeight, Weight, weight_add
from .errors import InputError, LoopContractionError

__all__ = ["Edge", "WeightedGraph"]


@dataclass(frozen=True)
class Edge:
    """Edge with endpoints, an exact numeric weight or a symbolic one, and an
    order index.  gamma None means the edge weight is the symbolic variable
    keyed by the edge id."""

    id: str
    u: str
    v: str
    gamma: Optional[ExactComplex] = None
    order: int = 0

    def is_loop(self) -> bool:
        return self.u == self.v

    def other_end(self, vertex: str) -> str:
        return self.v if vertex == self.u else self.u


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, items: Iterable[str]):
        self.parent = {item: item for item in items}

    def find(self, item: str) -> str:
        parent = self.parent
        root = item
        while parent[root] != root:
            root = parent[root]
        while parent[item] != root:
            parent[item], item = root, parent[item]
        return root

    def union(self, a: str, b: str) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable multigraph with vertex weights and ordered weighted edges."""

    vertices: Tuple[Tuple[str, Weight], ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        vids = [vid for vid, _ in self.vertices]
        if len(set(vids)) != len(vids):
            raise InputError("duplicate vertex id")
        known = set(vids)
        eids = set()
        orders = set()
        for e in self.edges:
            if e.id in eids:
                raise InputError(f"duplicate edge id {e.id}")
            eids.add(e.id)
            if e.u not in known or e.v not in known:
                raise InputError(f"edge {e.id} references an unknown vertex")
            if e.order in orders:
                raise InputError(f"duplicate edge order index {e.order}")
            orders.add(e.order)

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable = ()) -> "WeightedGraph":
        """Convenience constructor.

        vertices: ids, or (id, weight) pairs; a bare id gets the formal weight
        generated by the id itself.  edges: (id, u, v) or (id, u, v, gamma)
        tuples; order indices follow the listing order.
        """
        vs = []
        for item in vertices:
            if isinstance(item, str):
                vs.append((item, FormalWeight((item,))))
            else:
                vid, weight = item
                vs.append((vid, weight))
        es = []
        for i, item in enumerate(edges):
            eid, u, v, *rest = item
            gamma = rest[0] if rest else None
            if gamma is not None:
                gamma = ExactComplex.of(gamma)
            es.append(Edge(eid, u, v, gamma, i))
        return cls(tuple(vs), tuple(es))

    # -- accessors ---------------------------------------------------------

    def vertex_ids(self) -> Tuple[str, ...]:
        return tuple(vid for vid, _ in self.vertices)

    def weight_of(self, vertex_id: str) -> Weight:
        for vid, weight in self.vertices:
            if vid == vertex_id:
                return weight
        raise InputError(f"unknown vertex id {vertex_id}")

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise InputError(f"unknown edge id {edge_id}")

    def edge_ids(self) -> frozenset:
        return frozenset(e.id for e in self.edges)

    def edges_by_order(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=lambda e: e.order))

    # -- deletion and contraction -------------------------------------------

    def delete_edge(self, edge_id: str) -> "WeightedGraph":
        """Remove the edge; vertices, weights, and other edges are unchanged."""
        self.edge(edge_id)
        return WeightedGraph(
            self.vertices, tuple(e for e in self.edges if e.id != edge_id)
        )

    def contract_edge(self, edge_id: str) -> "WeightedGraph":
        """Merge the endpoints of a non-loop edge.

        The merged vertex keeps the lexicographically smaller endpoint id and
        the semigroup sum of the endpoint weights; surviving edges keep their
        ids, weights, and order indices, with endpoints re-targeted.  Edges
        parallel to the contracted edge become loops.
        """
        e = self.edge(edge_id)
        if e.is_loop():
            raise LoopContractionError(f"cannot contract loop {edge_id}")
        keep, drop = (e.u, e.v) if e.u <= e.v else (e.v, e.u)
        merged = weight_add(self.weight_of(e.u), self.weight_of(e.v))
        vertices = tuple(
            (vid, merged if vid == keep else weight)
            for vid, weight in self.vertices
            if vid != drop
        )
        edges = tuple(
            Edge(
                f.id,
                keep if f.u == drop else f.u,
                keep if f.v == drop else f.v,
                f.gamma,
                f.order,
            )
            for f in self.edges
            if f.id != edge_id
        )
        return WeightedGraph(vertices, edges)

    # -- connectivity ---------------------------------------------------------

    def components(self, edge_ids=None) -> Tuple[frozenset, ...]:
        """Connected components of the spanning subgraph on the given edge
        subset (all edges when None), as frozensets ordered by smallest
        member."""
        if edge_ids is None:
            chosen = self.edges
        else:
            chosen = [self.edge(eid) for eid in edge_ids]
        uf = _UnionFind(self.vertex_ids())
        for e in chosen:
            uf.union(e.u, e.v)
        blocks: dict = {}
        for vid, _ in self.vertices:
            blocks.setdefault(uf.find(vid), []).append(vid)
        return tuple(
            frozenset(members)
            for members in sorted(blocks.values(), key=lambda ms: min(ms))
        )

    def subgraph_stats(self, edge_ids) -> Tuple[int, int, int]:
        """(components, rank, nullity) of the spanning subgraph on edge_ids."""
        edge_ids = list(edge_ids)
        k = len(self.components(edge_ids))
        r = len(self.vertices) - k
        n = len(edge_ids) - r
        return k, r, n

    # -- derived graphs ------------------------------------------------------

    def induced_subgraph(self, vertex_ids) -> "WeightedGraph":
        """Subgraph on the given vertices with every edge whose two endpoints
        both lie inside."""
        inside = set(vertex_ids)
        unknown = inside - set(self.vertex_ids())
        if unknown:
            raise InputError(f"unknown vertex id {sorted(unknown)[0]}")
        return WeightedGraph(
            tuple(v for v in self.vertices if v[0] in inside),
            tuple(e for e in self.edges if e.u in inside and e.v in inside),
        )

    def spanning_subgraph(self, edge_ids) -> "WeightedGraph":
        """All vertices, restricted edge set."""
        wanted = set(edge_ids)
        unknown = wanted - set(e.id for e in self.edges)
        if unknown:
            raise InputError(f"unknown edge id {sorted(unknown)[0]}")
        return WeightedGraph(
            self.vertices, tuple(e for e in self.edges if e.id in wanted)
        )

    def with_vertex_weights(self, weights: Mapping[str, Weight]) -> "WeightedGraph":
        return WeightedGraph(
            tuple((vid, weights.get(vid, w)) for vid, w in self.vertices),
            self.edges,
        )

    def with_edge_orders(self, orders: Mapping[str, int]) -> "WeightedGraph":
        return WeightedGraph(
            self.vertices,
            tuple(
                Edge(e.id, e.u, e.v, e.gamma, orders.get(e.id, e.order))
                for e in self.edges
            ),
        )

    def with_symbolic_gammas(self) -> "WeightedGraph":
        return WeightedGraph(
            self.vertices,
            tuple(Edge(e.id, e.u, e.v, None, e.order) for e in self.edges),
        )
