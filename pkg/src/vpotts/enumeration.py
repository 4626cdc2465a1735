"""Exhaustive enumeration of spanning forests, spanning trees, and connected
partitions, plus edge-activity classification against the edge order.

All enumerations are deterministic: forests are produced in lexicographic
order of their sorted order-index sequences, and partitions follow
restricted-growth order on the vertex listing.  Desk scale only; nothing here
samples or approximates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .errors import InputError
from .graph import WeightedGraph

__all__ = [
    "ActivitySets",
    "spanning_forests",
    "spanning_trees",
    "connected_partitions",
    "classify_activities",
]


@dataclass(frozen=True)
class ActivitySets:
    """Partition of the edge set relative to a spanning forest: forest edges
    split into internally active/inactive, the rest into externally
    active/inactive."""

    internally_active: FrozenSet[str]
    internally_inactive: FrozenSet[str]
    externally_active: FrozenSet[str]
    externally_inactive: FrozenSet[str]


def spanning_forests(graph: WeightedGraph) -> List[FrozenSet[str]]:
    """Every acyclic edge subset, including the empty one, exactly once.

    Loops never appear in a forest.  Output order is lexicographic on the
    sorted order-index sequence of each subset.
    """
    edges = graph.edges_by_order()
    vertex_ids = graph.vertex_ids()
    out: List[FrozenSet[str]] = []

    def root(parent: Dict[str, str], item: str) -> str:
        while parent[item] != item:
            item = parent[item]
        return item

    def extend(start: int, chosen: List[str], parent: Dict[str, str]) -> None:
        out.append(frozenset(chosen))
        for i in range(start, len(edges)):
            e = edges[i]
            ru, rv = root(parent, e.u), root(parent, e.v)
            if ru == rv:
                continue
            child = dict(parent)
            child[ru] = rv
            chosen.append(e.id)
            extend(i + 1, chosen, child)
            chosen.pop()

    extend(0, [], {vid: vid for vid in vertex_ids})
    return out


def spanning_trees(graph: WeightedGraph) -> List[FrozenSet[str]]:
    """Maximal spanning forests: one spanning tree per component."""
    rank = len(graph.vertices) - len(graph.components())
    return [forest for forest in spanning_forests(graph) if len(forest) == rank]


def connected_partitions(graph: WeightedGraph) -> List[Tuple[FrozenSet[str], ...]]:
    """Every partition of the vertex set whose blocks induce connected
    subgraphs.  Blocks are returned ordered by smallest member."""
    vertex_ids = list(graph.vertex_ids())
    edges = [(e.u, e.v) for e in graph.edges]
    results: List[Tuple[FrozenSet[str], ...]] = []

    def block_connected(block: List[str]) -> bool:
        inside = set(block)
        parent = {vid: vid for vid in block}

        def find(item):
            while parent[item] != item:
                item = parent[item]
            return item

        count = len(block)
        for u, v in edges:
            if u in inside and v in inside:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    count -= 1
        return count == 1

    def grow(index: int, blocks: List[List[str]]) -> None:
        if index == len(vertex_ids):
            if all(block_connected(block) for block in blocks):
                results.append(
                    tuple(
                        frozenset(block)
                        for block in sorted(blocks, key=min)
                    )
                )
            return
        vid = vertex_ids[index]
        for block in blocks:
            block.append(vid)
            grow(index + 1, blocks)
            block.pop()
        blocks.append([vid])
        grow(index + 1, blocks)
        blocks.pop()

    grow(0, [])
    return results


def _forest_adjacency(graph: WeightedGraph, forest) -> Dict[str, List[Tuple[str, str]]]:
    adj: Dict[str, List[Tuple[str, str]]] = {vid: [] for vid in graph.vertex_ids()}
    for eid in forest:
        e = graph.edge(eid)
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))
    return adj


def _reachable(adj, start: str, skip_edge: str) -> FrozenSet[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        here = queue.popleft()
        for nxt, eid in adj[here]:
            if eid == skip_edge or nxt in seen:
                continue
            seen.add(nxt)
            queue.append(nxt)
    return frozenset(seen)


def _forest_path_edges(adj, start: str, goal: str) -> List[str]:
    if start == goal:
        return []
    seen = {start}
    via: Dict[str, Tuple[str, str]] = {}
    queue = deque([start])
    while queue:
        here = queue.popleft()
        for nxt, eid in adj[here]:
            if nxt in seen:
                continue
            seen.add(nxt)
            via[nxt] = (here, eid)
            if nxt == goal:
                path = []
                at = goal
                while at != start:
                    prev, peid = via[at]
                    path.append(peid)
                    at = prev
                return path
            queue.append(nxt)
    raise InputError(f"no forest path between {start} and {goal}")


def classify_activities(graph: WeightedGraph, forest) -> ActivitySets:
    """Classify every edge of the graph against a spanning forest.

    A forest edge is internally active when its order index is minimal in its
    cut: the set of edges whose insertion reconnects the two pieces the
    forest splits into when the edge is removed, restoring the component
    partition.  A non-forest edge whose addition closes a cycle is externally
    active when its order index is minimal on that cycle; loops always are.
    A non-forest edge joining two forest components closes no cycle and is
    externally inactive.
    """
    forest = frozenset(forest)
    known = graph.edge_ids()
    if not forest <= known:
        raise InputError(f"edge id {sorted(forest - known)[0]} not in graph")
    _, _, nullity = graph.subgraph_stats(forest)
    if nullity != 0:
        raise InputError("edge subset is not a forest")

    order = {e.id: e.order for e in graph.edges}
    adj = _forest_adjacency(graph, forest)
    component_of: Dict[str, int] = {}
    for index, block in enumerate(graph.components(forest)):
        for vid in block:
            component_of[vid] = index

    internally_active, internally_inactive = set(), set()
    externally_active, externally_inactive = set(), set()

    for e in graph.edges:
        if e.id in forest:
            side_u = _reachable(adj, e.u, e.id)
            side_v = _reachable(adj, e.v, e.id)
            cut_min = min(
                order[f.id]
                for f in graph.edges
                if (f.u in side_u and f.v in side_v)
                or (f.u in side_v and f.v in side_u)
            )
            if order[e.id] == cut_min:
                internally_active.add(e.id)
            else:
                internally_inactive.add(e.id)
        elif e.is_loop():
            externally_active.add(e.id)
        elif component_of[e.u] == component_of[e.v]:
            cycle = _forest_path_edges(adj, e.u, e.v) + [e.id]
            if order[e.id] == min(order[eid] for eid in cycle):
                externally_active.add(e.id)
            else:
                externally_inactive.add(e.id)
        else:
            externally_inactive.add(e.id)

    return ActivitySets(
        frozenset(internally_active),
        frozenset(internally_inactive),
        frozenset(externally_active),
        frozenset(externally_inactive),
    )
