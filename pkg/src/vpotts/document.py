"""JSON graph documents: parsing into graphs and parameters, and writing
graphs back out.

Schema (format_version 1):

    {
      "format_version": 1,
      "vertices": [{"id": "v1", "weight": {"kind": "formal", "label": "a"}},
                   {"id": "v2", "weight": {"kind": "field",
                                           "values": [[1.0, 0.0], 0.5]}}],
      "edges": [{"id": "e1", "u": "v1", "v": "v2",
                 "gamma": "symbolic", "J": 1.0}],
      "q": 2,
      "beta": 1.0,
      "edge_order": ["e1"]
    }

Weight kinds must not be mixed and field vectors must share one length, which
doubles as q when no explicit q is given.  Scalar entries (gamma, J, field
components) are numbers or [re, im] pairs.  gamma defaults to "symbolic";
edge_order defaults to the listing order.  Parameters are attached when beta
is present; that requires q to be known and every edge to carry J.  Vertices
with formal weights then get zero field vectors.
"""

from __future__ import annotations

import json
from typing import Optional, Tuple

from .algebra import ExactComplex, FieldWeight, FormalWeight
from .errors import ParseError
from .graph import Edge, WeightedGraph
from .potts import PottsParams

__all__ = ["parse_graph", "graph_to_document"]

FORMAT_VERSION = 1


def _fail(path: str, message: str):
    raise ParseError(f"{path}: {message}")


def _scalar(value, path: str) -> complex:
    if isinstance(value, bool):
        _fail(path, "expected a number or [re, im] pair")
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(part, (int, float)) and not isinstance(part, bool) for part in value)
    ):
        return complex(value[0], value[1])
    _fail(path, "expected a number or [re, im] pair")


def _parse_weight(raw, path: str):
    if not isinstance(raw, dict) or "kind" not in raw:
        _fail(path, "expected an object with a 'kind' field")
    kind = raw["kind"]
    if kind == "formal":
        label = raw.get("label")
        if not isinstance(label, str) or not label:
            _fail(path + ".label", "expected a non-empty string")
        return FormalWeight((label,))
    if kind == "field":
        values = raw.get("values")
        if not isinstance(values, list) or not values:
            _fail(path + ".values", "expected a non-empty list")
        return FieldWeight(
            tuple(
                ExactComplex.of(_scalar(v, f"{path}.values[{i}]"))
                for i, v in enumerate(values)
            )
        )
    _fail(path + ".kind", f"unknown weight kind {kind!r}")


def parse_graph(source) -> Tuple[WeightedGraph, Optional[PottsParams]]:
    """Parse a graph document from bytes, text, or a readable object.

    Returns the graph and, when beta is supplied, the numeric parameters.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        _fail("document", "expected a JSON object")

    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        _fail("format_version", f"unsupported version {version!r}")

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        _fail("vertices", "expected a list")
    vertices = []
    seen_vertices = set()
    kinds = set()
    field_lengths = set()
    for i, raw in enumerate(raw_vertices):
        path = f"vertices[{i}]"
        if not isinstance(raw, dict):
            _fail(path, "expected an object")
        vid = raw.get("id")
        if not isinstance(vid, str) or not vid:
            _fail(path + ".id", "expected a non-empty string")
        if vid in seen_vertices:
            _fail(path + ".id", f"duplicate vertex id {vid!r}")
        seen_vertices.add(vid)
        weight = _parse_weight(raw.get("weight"), path + ".weight")
        kinds.add(type(weight).__name__)
        if isinstance(weight, FieldWeight):
            field_lengths.add(weight.q)
        vertices.append((vid, weight))
    if len(kinds) > 1:
        _fail("vertices", "formal and field weights cannot be mixed")
    if len(field_lengths) > 1:
        _fail("vertices", f"field vectors have mixed lengths {sorted(field_lengths)}")

    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        _fail("edges", "expected a list")
    edge_specs = []
    couplings = {}
    seen_edges = set()
    for i, raw in enumerate(raw_edges):
        path = f"edges[{i}]"
        if not isinstance(raw, dict):
            _fail(path, "expected an object")
        eid = raw.get("id")
        if not isinstance(eid, str) or not eid:
            _fail(path + ".id", "expected a non-empty string")
        if eid in seen_edges:
            _fail(path + ".id", f"duplicate edge id {eid!r}")
        seen_edges.add(eid)
        for end in ("u", "v"):
            endpoint = raw.get(end)
            if not isinstance(endpoint, str):
                _fail(f"{path}.{end}", "expected a vertex id string")
            if endpoint not in seen_vertices:
                _fail(f"{path}.{end}", f"edge {eid!r} references unknown vertex {endpoint!r}")
        gamma_raw = raw.get("gamma", "symbolic")
        if gamma_raw == "symbolic":
            gamma = None
        else:
            gamma = ExactComplex.of(_scalar(gamma_raw, path + ".gamma"))
        if "J" in raw:
            couplings[eid] = _scalar(raw["J"], path + ".J")
        edge_specs.append((eid, raw["u"], raw["v"], gamma))

    order_ids = [spec[0] for spec in edge_specs]
    raw_order = data.get("edge_order")
    if raw_order is not None:
        if not isinstance(raw_order, list) or sorted(raw_order) != sorted(order_ids):
            _fail("edge_order", "expected a permutation of the edge ids")
        order_ids = list(raw_order)
    position = {eid: i for i, eid in enumerate(order_ids)}
    edges = tuple(
        Edge(eid, u, v, gamma, position[eid]) for eid, u, v, gamma in edge_specs
    )
    graph = WeightedGraph(tuple(vertices), edges)

    q = data.get("q")
    if q is not None and (not isinstance(q, int) or isinstance(q, bool) or q < 1):
        _fail("q", "expected a positive integer")
    if q is not None and field_lengths and q not in field_lengths:
        _fail("q", f"q = {q} disagrees with field vector length {field_lengths.pop()}")

    beta = data.get("beta")
    if beta is None:
        return graph, None
    if isinstance(beta, bool) or not isinstance(beta, (int, float)):
        _fail("beta", "expected a number")
    effective_q = q if q is not None else (field_lengths.pop() if field_lengths else None)
    if effective_q is None:
        _fail("q", "beta given but q is neither set nor implied by field weights")
    missing = [eid for eid in order_ids if eid not in couplings]
    if missing:
        _fail("edges", f"beta given but edge {missing[0]!r} has no J")
    field_map = {}
    for vid, weight in vertices:
        if isinstance(weight, FieldWeight):
            field_map[vid] = weight
        else:
            field_map[vid] = FieldWeight.zero(effective_q)
    return graph, PottsParams(effective_q, float(beta), couplings, field_map)


def _scalar_out(value: complex):
    if value.imag == 0:
        return value.real
    return [value.real, value.imag]


def graph_to_document(graph: WeightedGraph, params: Optional[PottsParams] = None) -> dict:
    """Serialize a graph (and optional parameters) back into document form.

    Formal weights must be single-label to round-trip; merged weights are not
    representable.
    """
    vertices = []
    for vid, weight in graph.vertices:
        if isinstance(weight, FormalWeight):
            if len(weight.labels) != 1:
                raise ParseError(f"vertex {vid}: merged formal weight is not serializable")
            entry = {"kind": "formal", "label": weight.labels[0]}
        else:
            entry = {
                "kind": "field",
                "values": [_scalar_out(complex(v)) for v in weight.values],
            }
        vertices.append({"id": vid, "weight": entry})
    edges = []
    for e in graph.edges_by_order():
        entry = {"id": e.id, "u": e.u, "v": e.v}
        if e.gamma is not None:
            entry["gamma"] = _scalar_out(complex(e.gamma))
        if params is not None:
            entry["J"] = _scalar_out(complex(params.J[e.id]))
        edges.append(entry)
    document = {"format_version": FORMAT_VERSION, "vertices": vertices, "edges": edges}
    if params is not None:
        document["q"] = params.q
        document["beta"] = params.beta
    return document
