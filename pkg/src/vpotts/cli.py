"""Command-line front end.

Subcommands: vpoly, zt, tutte, zext, zzero, rfim, crosscheck.  Graph input is
a JSON document given as a file path argument or on standard input ("-" or no
argument).  Polynomial output is the canonical text form; numeric output is
"re imag" with 15 significant digits.  Exit codes: 0 ok, 1 crosscheck
disagreement, 2 usage or input error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .document import graph_to_document, parse_graph
from .errors import (
    CapacityError,
    EvaluationError,
    InputError,
    ParseError,
    SingularInputError,
)
from .potts import (
    PottsParams,
    z_brute_force,
    z_ext_forest_expansion,
    z_ext_partition_expansion,
    z_ext_tree_expansion,
    z_ext_via_v,
    z_zero,
    z_zero_tree_expansion,
    check_potts_tutte_identity,
    rfim_partition,
)
from .random_graphs import (
    random_constant_coupling_params,
    random_potts_params,
    random_weighted_graph,
)
from .tutte import tutte_polynomial, zt_subset_sum, zt_traldi
from .vpoly import (
    specialize_x_to_theta,
    v_connected_partition,
    v_deletion_contraction,
    v_spanning_forest,
    v_spanning_tree,
    v_state_sum,
)

_V_METHODS = {
    "delcon": v_deletion_contraction,
    "statesum": v_state_sum,
    "tree": v_spanning_tree,
    "forest": v_spanning_forest,
    "partition": v_connected_partition,
}

_ZEXT_METHODS = {
    "v": z_ext_via_v,
    "tree": z_ext_tree_expansion,
    "forest": z_ext_forest_expansion,
    "partition": z_ext_partition_expansion,
    "brute": z_brute_force,
}

_Z_TOLERANCE = 1e-9


def _format_complex(value: complex) -> str:
    return f"{value.real:.15g} {value.imag:.15g}"


def _load(path):
    if path is None or path == "-":
        return parse_graph(sys.stdin.buffer.read())
    with open(path, "rb") as handle:
        return parse_graph(handle)


def _require_params(params) -> PottsParams:
    if params is None:
        raise InputError("document has no numeric parameters (beta, q, per-edge J)")
    return params


def _cmd_vpoly(args) -> int:
    graph, _ = _load(args.graph)
    print(_V_METHODS[args.method](graph).canonical_text())
    return 0


def _cmd_zt(args) -> int:
    graph, _ = _load(args.graph)
    print(zt_subset_sum(graph).canonical_text())
    return 0


def _cmd_tutte(args) -> int:
    graph, _ = _load(args.graph)
    print(tutte_polynomial(graph).canonical_text())
    return 0


def _cmd_zext(args) -> int:
    graph, params = _load(args.graph)
    value = _ZEXT_METHODS[args.method](graph, _require_params(params))
    print(_format_complex(value))
    return 0


def _cmd_zzero(args) -> int:
    graph, params = _load(args.graph)
    print(_format_complex(z_zero(graph, _require_params(params))))
    return 0


def _cmd_rfim(args) -> int:
    graph, params = _load(args.graph)
    params = _require_params(params)
    if params.q != 1:
        raise InputError("rfim documents carry one-component field values per vertex")
    couplings = {complex(value) for value in params.J.values()}
    if len(couplings) > 1:
        raise InputError("rfim requires one constant coupling J")
    coupling = couplings.pop() if couplings else 0j
    fields = {vid: complex(weight.values[0]) for vid, weight in graph.vertices}
    brute, forest, tree = rfim_partition(graph, params.beta, coupling, fields)
    print(_format_complex(brute))
    print(_format_complex(forest))
    print(_format_complex(tree))
    return 0


def _relative_error(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else 0.0


def _trial_failure(graph, rng: random.Random):
    """Run one crosscheck trial; return (message, params or None) on failure."""
    state_sum = v_state_sum(graph)
    for name, method in (
        ("delcon", v_deletion_contraction),
        ("tree", v_spanning_tree),
        ("forest", v_spanning_forest),
        ("partition", v_connected_partition),
    ):
        if method(graph) != state_sum:
            return f"V mismatch: {name} differs from statesum", None
    subset = zt_subset_sum(graph)
    if specialize_x_to_theta(state_sum) != subset:
        return "specialization of V differs from the subset sum", None
    if zt_traldi(graph) != subset:
        return "Traldi expansion differs from the subset sum", None

    params = random_potts_params(rng, graph)
    brute = z_brute_force(graph, params)
    for name, method in (
        ("v", z_ext_via_v),
        ("tree", z_ext_tree_expansion),
        ("forest", z_ext_forest_expansion),
        ("partition", z_ext_partition_expansion),
    ):
        value = method(graph, params)
        if _relative_error(value, brute) > _Z_TOLERANCE:
            return f"Z mismatch: {name} differs from brute force", params

    zero_params = PottsParams.zero_field(graph, params.q, params.beta, params.J)
    if _relative_error(z_zero(graph, zero_params), z_brute_force(graph, zero_params)) > _Z_TOLERANCE:
        return "zero-field value differs from brute force", zero_params

    constant = random_constant_coupling_params(rng, graph)
    ok, residual = check_potts_tutte_identity(graph, constant, _Z_TOLERANCE)
    if not ok:
        return f"Tutte identity residual {residual:.3g}", constant
    if (
        _relative_error(z_zero_tree_expansion(graph, constant), z_zero(graph, constant))
        > _Z_TOLERANCE
    ):
        return "zero-field tree expansion differs", constant
    return None


def _cmd_crosscheck(args) -> int:
    failures = 0
    for trial in range(args.trials):
        tag = f"{args.seed}:{trial}"
        rng = random.Random(tag)
        graph = random_weighted_graph(rng, args.max_vertices, args.max_edges)
        outcome = _trial_failure(graph, rng)
        if outcome is not None:
            message, params = outcome
            failures += 1
            print(f"trial {trial} (seed {tag}): {message}", file=sys.stderr)
            shown = graph if params is None else graph.with_vertex_weights(dict(params.M))
            print(json.dumps(graph_to_document(shown, params)), file=sys.stderr)
    print(f"crosscheck: {args.trials - failures}/{args.trials} trials passed (seed {args.seed})")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpotts",
        description="Exact V-polynomial and Potts partition function computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name, handler, help_text, method_choices=None):
        cmd = sub.add_parser(name, help=help_text)
        if method_choices:
            cmd.add_argument("--method", required=True, choices=sorted(method_choices))
        cmd.add_argument("graph", nargs="?", help="graph document path ('-' for stdin)")
        cmd.set_defaults(func=handler)

    add_graph_command("vpoly", _cmd_vpoly, "V-polynomial of the graph", _V_METHODS)
    add_graph_command("zt", _cmd_zt, "multivariate Tutte polynomial")
    add_graph_command("tutte", _cmd_tutte, "classical Tutte polynomial")
    add_graph_command("zext", _cmd_zext, "external-field partition function", _ZEXT_METHODS)
    add_graph_command("zzero", _cmd_zzero, "zero-field partition function")
    add_graph_command("rfim", _cmd_rfim, "random-field Ising partition function")

    cross = sub.add_parser("crosscheck", help="random mutual agreement harness")
    cross.add_argument("--trials", type=int, default=50)
    cross.add_argument("--seed", type=int, default=0)
    cross.add_argument("--max-vertices", type=int, default=6)
    cross.add_argument("--max-edges", type=int, default=9)
    cross.set_defaults(func=_cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except (ParseError, InputError, SingularInputError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
