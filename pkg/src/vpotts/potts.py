"""Potts model Hamiltonians, brute-force partition functions, and the
expansions of the external-field partition function over connected
partitions, spanning forests, and spanning trees, plus the preferred-spin,
constant-field, and random-field Ising specializations.

Conventions.  A state assigns one of q spins to each vertex.  The Hamiltonian
with variable couplings J_e and per-vertex field vectors M_i is

    h(state) = - sum_edges J_e * [spins at the endpoints agree]
               - sum_vertices M_{i, spin(i)}

and the partition function is the sum of exp(-beta * h) over all q^|V|
states.  beta absorbs the temperature; it never appears split into kT.
Loops always satisfy the agreement test and contribute -J_e to every state.

Numerics are complex double precision; the expansions agree with the
brute-force state sum to about 1e-9 relative error at desk scale.  The
polynomial-level identities behind the expansions live in the vpoly and
tutte modules where arithmetic is exact.

Exponent placement.  In the constant-field and Ising specializations the
block weights carry beta in their exponents (exp(beta*H*|block|) + q - 1 and
exp(2*beta*z) + exp(4*beta*z)); only this reading matches the definitional
state sum for beta != 1.  The beta-free variant is available behind the
``literal`` flag for comparison.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .algebra import THETA, TUTTE_X, TUTTE_Y, FieldWeight, gamma_var, weight_add
from .enumeration import classify_activities, connected_partitions, spanning_forests, spanning_trees
from .errors import CapacityError, InputError, SingularInputError
from .graph import WeightedGraph
from .tutte import tutte_polynomial, zt_q1_connected, zt_subset_sum
from .vpoly import v_deletion_contraction

__all__ = [
    "PottsParams",
    "BRUTE_FORCE_STATE_LIMIT",
    "EXPANSION_OBJECT_LIMIT",
    "hamiltonian",
    "z_brute_force",
    "z_ext_via_v",
    "z_ext_tree_expansion",
    "z_ext_forest_expansion",
    "z_ext_partition_expansion",
    "z_zero",
    "check_potts_tutte_identity",
    "z_zero_tree_expansion",
    "preferred_spin_expansions",
    "constant_field_expansions",
    "rfim_partition",
]

# Desk-scale guardrails: refuse brute-force enumerations beyond 1e7 states and
# expansions beyond 1e6 trees/forests/partitions (or edge subsets).
BRUTE_FORCE_STATE_LIMIT = 10**7
EXPANSION_OBJECT_LIMIT = 10**6


@dataclass(frozen=True)
class PottsParams:
    """Numeric model parameters: spin count q, inverse temperature beta,
    per-edge couplings J, and a length-q field vector per vertex."""

    q: int
    beta: float
    J: Mapping[str, complex]
    M: Mapping[str, FieldWeight]

    def __post_init__(self):
        if self.q < 1:
            raise InputError("q must be at least 1")
        object.__setattr__(self, "J", dict(self.J))
        object.__setattr__(self, "M", dict(self.M))

    @classmethod
    def zero_field(cls, graph: WeightedGraph, q: int, beta: float, J: Mapping[str, complex]) -> "PottsParams":
        return cls(q, beta, J, {vid: FieldWeight.zero(q) for vid in graph.vertex_ids()})


def _require_couplings(graph: WeightedGraph, params: PottsParams) -> None:
    for e in graph.edges:
        if e.id not in params.J:
            raise InputError(f"missing coupling for edge {e.id}")


def _require_fields(graph: WeightedGraph, params: PottsParams) -> None:
    for vid in graph.vertex_ids():
        field = params.M.get(vid)
        if field is None:
            raise InputError(f"missing field vector for vertex {vid}")
        if field.q != params.q:
            raise InputError(
                f"field vector at {vid} has length {field.q}, expected {params.q}"
            )


def _guard_states(count_base: int, count_exp: int) -> None:
    if count_base**count_exp > BRUTE_FORCE_STATE_LIMIT:
        raise CapacityError(
            f"{count_base}^{count_exp} states exceed the limit of {BRUTE_FORCE_STATE_LIMIT}"
        )


def _guard_subsets(graph: WeightedGraph) -> None:
    if 2 ** len(graph.edges) > EXPANSION_OBJECT_LIMIT:
        raise CapacityError(
            f"2^{len(graph.edges)} edge subsets exceed the limit of {EXPANSION_OBJECT_LIMIT}"
        )


def _guard_partitions(graph: WeightedGraph) -> None:
    n = len(graph.vertices)
    bell = [1]
    for _ in range(n):
        row = [bell[-1]]
        for value in bell:
            row.append(row[-1] + value)
        bell = row
        if bell[0] > EXPANSION_OBJECT_LIMIT:
            raise CapacityError(
                f"more than {EXPANSION_OBJECT_LIMIT} vertex partitions"
            )


def _field_weighted(graph: WeightedGraph, params: PottsParams) -> WeightedGraph:
    """Copy of the graph carrying the field vectors as vertex weights and
    symbolic edge weights keyed by edge id."""
    return graph.with_vertex_weights(dict(params.M)).with_symbolic_gammas()


def _x_of(field: FieldWeight, beta: float) -> complex:
    """X weight of a field vector: sum over spins of exp(beta * entry)."""
    return sum(cmath.exp(beta * complex(value)) for value in field.values)


def _edge_v(params: PottsParams, edge_id: str) -> complex:
    return cmath.exp(params.beta * complex(params.J[edge_id])) - 1


def hamiltonian(graph: WeightedGraph, params: PottsParams, state: Mapping[str, int]) -> complex:
    """Energy of a spin state under couplings J and field vectors M."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    for vid in graph.vertex_ids():
        spin = state.get(vid)
        if spin is None:
            raise InputError(f"state does not assign a spin to vertex {vid}")
        if not 1 <= spin <= params.q:
            raise InputError(f"spin {spin} at vertex {vid} is outside 1..{params.q}")
    energy = 0j
    for e in graph.edges:
        if state[e.u] == state[e.v]:
            energy -= complex(params.J[e.id])
    for vid in graph.vertex_ids():
        energy -= complex(params.M[vid].values[state[vid] - 1])
    return energy


def z_brute_force(graph: WeightedGraph, params: PottsParams) -> complex:
    """Definitional partition function: the sum of exp(-beta*h) over all
    q^|V| states.  This is the oracle every expansion is checked against."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    vids = graph.vertex_ids()
    _guard_states(params.q, len(vids))
    index = {vid: i for i, vid in enumerate(vids)}
    edge_terms = [(index[e.u], index[e.v], complex(params.J[e.id])) for e in graph.edges]
    field_terms = [
        [complex(value) for value in params.M[vid].values] for vid in vids
    ]
    beta = params.beta
    total = 0j
    for spins in itertools.product(range(params.q), repeat=len(vids)):
        energy = 0j
        for iu, iv, coupling in edge_terms:
            if spins[iu] == spins[iv]:
                energy -= coupling
        for i, fields in enumerate(field_terms):
            energy -= fields[spins[i]]
        total += cmath.exp(-beta * energy)
    return total


def _zext_of(weighted: WeightedGraph, beta: float, J: Mapping[str, complex]) -> complex:
    """Partition function of a field-weighted graph through its V-polynomial:
    compute V symbolically, then bind each x variable to the X weight of the
    field vector it indexes and each edge variable to exp(beta*J) - 1."""
    _guard_subsets(weighted)
    poly = v_deletion_contraction(weighted)
    bindings: Dict = {gamma_var(e.id): cmath.exp(beta * complex(J[e.id])) - 1 for e in weighted.edges}
    for var in poly.variables():
        if var[0] == "x":
            bindings[var] = _x_of(var[1], beta)
    return complex(poly.evaluate(bindings))


def z_ext_via_v(graph: WeightedGraph, params: PottsParams) -> complex:
    """External-field partition function as an evaluation of the
    V-polynomial with the field vectors as vertex weights."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    return _zext_of(_field_weighted(graph, params), params.beta, params.J)


def z_ext_tree_expansion(graph: WeightedGraph, params: PottsParams) -> complex:
    """Spanning-tree expansion: per tree, the product of exp(beta*J)-1 over
    internally inactive edges and exp(beta*J) over externally active edges,
    times the partition function of the tree with its internally inactive
    edges contracted (field vectors merging under contraction)."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    _guard_subsets(graph)
    weighted = _field_weighted(graph, params)
    total = 0j
    for tree in spanning_trees(weighted):
        acts = classify_activities(weighted, tree)
        factor = 1 + 0j
        for eid in sorted(acts.internally_inactive):
            factor *= _edge_v(params, eid)
        for eid in sorted(acts.externally_active):
            factor *= cmath.exp(params.beta * complex(params.J[eid]))
        contracted = weighted.spanning_subgraph(tree)
        for eid in sorted(acts.internally_inactive):
            contracted = contracted.contract_edge(eid)
        total += factor * _zext_of(contracted, params.beta, params.J)
    return total


def z_ext_forest_expansion(graph: WeightedGraph, params: PottsParams) -> complex:
    """Spanning-forest expansion: per forest, the product of the X weights of
    the forest component field sums, exp(beta*J)-1 over forest edges, and
    exp(beta*J) over externally active edges."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    _guard_subsets(graph)
    total = 0j
    for forest in spanning_forests(graph):
        acts = classify_activities(graph, forest)
        term = 1 + 0j
        for block in graph.components(forest):
            merged = _merged_field(params, block)
            term *= _x_of(merged, params.beta)
        for eid in sorted(forest):
            term *= _edge_v(params, eid)
        for eid in sorted(acts.externally_active):
            term *= cmath.exp(params.beta * complex(params.J[eid]))
        total += term
    return total


def _merged_field(params: PottsParams, block) -> FieldWeight:
    merged = None
    for vid in sorted(block):
        field = params.M[vid]
        merged = field if merged is None else weight_add(merged, field)
    return merged


def z_ext_partition_expansion(graph: WeightedGraph, params: PottsParams) -> complex:
    """Connected-partition expansion: per partition, the product of the X
    weights of the block field sums times, per block, the degree-one q
    coefficient of the block's zero-field partition polynomial evaluated at
    exp(beta*J)-1."""
    _require_couplings(graph, params)
    _require_fields(graph, params)
    _guard_partitions(graph)
    symbolic = graph.with_symbolic_gammas()
    bindings = {gamma_var(e.id): _edge_v(params, e.id) for e in graph.edges}
    memo: Dict = {}

    def block_value(block) -> complex:
        if block not in memo:
            poly = zt_q1_connected(symbolic.induced_subgraph(block))
            memo[block] = complex(poly.evaluate(bindings))
        return memo[block]

    total = 0j
    for blocks in connected_partitions(graph):
        term = 1 + 0j
        for block in blocks:
            term *= _x_of(_merged_field(params, block), params.beta)
            term *= block_value(block)
        total += term
    return total


def z_zero(graph: WeightedGraph, params: PottsParams) -> complex:
    """Zero-field partition function: the multivariate Tutte polynomial
    evaluated at theta = q and edge weights exp(beta*J)-1."""
    _require_couplings(graph, params)
    _guard_subsets(graph)
    poly = zt_subset_sum(graph.with_symbolic_gammas())
    bindings: Dict = {THETA: params.q}
    for e in graph.edges:
        bindings[gamma_var(e.id)] = _edge_v(params, e.id)
    return complex(poly.evaluate(bindings))


def _constant_coupling(graph: WeightedGraph, params: PottsParams) -> complex:
    _require_couplings(graph, params)
    values = {complex(params.J[e.id]) for e in graph.edges}
    if len(values) > 1:
        raise InputError("couplings are not constant across edges")
    return values.pop() if values else 0j


def _relative_error(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def check_potts_tutte_identity(
    graph: WeightedGraph, params: PottsParams, tol: float = 1e-9
) -> Tuple[bool, float]:
    """Check Z_zero = q^k * v^(|V|-k) * T((q+v)/v, v+1) with v = exp(beta*J)-1
    for a constant coupling J.  Returns (within tolerance, relative residual).
    """
    lhs = z_zero(graph, params)
    k = len(graph.components())
    if not graph.edges:
        # Edgeless: k = |V|, so the v power is empty and T = 1.
        residual = _relative_error(lhs, complex(params.q**k))
        return residual <= tol, residual
    coupling = _constant_coupling(graph, params)
    v = cmath.exp(params.beta * coupling) - 1
    if v == 0:
        raise SingularInputError("exp(beta*J) - 1 vanishes; the identity is undefined")
    tutte = tutte_polynomial(graph).evaluate(
        {TUTTE_X: (params.q + v) / v, TUTTE_Y: v + 1}
    )
    rhs = params.q**k * v ** (len(graph.vertices) - k) * complex(tutte)
    residual = _relative_error(lhs, rhs)
    return residual <= tol, residual


def z_zero_tree_expansion(graph: WeightedGraph, params: PottsParams) -> complex:
    """Zero-field spanning-tree expansion for a constant coupling:
    q^k * v^(|V|-k) * sum over trees of ((q+v)/v)^|internally active| *
    exp(beta*J)^|externally active|."""
    if not graph.edges:
        # Single empty tree with no activities; the v power is empty.
        return complex(params.q ** len(graph.vertices))
    coupling = _constant_coupling(graph, params)
    v = cmath.exp(params.beta * coupling) - 1
    if v == 0:
        raise SingularInputError("exp(beta*J) - 1 vanishes; the expansion is undefined")
    _guard_subsets(graph)
    k = len(graph.components())
    expJ = cmath.exp(params.beta * coupling)
    total = 0j
    for tree in spanning_trees(graph):
        acts = classify_activities(graph, tree)
        total += ((params.q + v) / v) ** len(acts.internally_active) * expJ ** len(
            acts.externally_active
        )
    return params.q**k * v ** (len(graph.vertices) - k) * total


def preferred_spin_expansions(
    graph: WeightedGraph,
    q: int,
    beta: float,
    J: Mapping[str, complex],
    z: Mapping[str, complex],
) -> Tuple[complex, complex, complex]:
    """Partition, forest, and tree expansions for the model where spin 1 is
    preferred with per-vertex strength z.  Delegates to the general
    expansions with field vectors (z, 0, ..., 0); the X weight of a merged
    value c is then exp(beta*c) + q - 1."""
    for vid in graph.vertex_ids():
        if vid not in z:
            raise InputError(f"missing field value for vertex {vid}")
    fields = {
        vid: FieldWeight((z[vid],) + (0,) * (q - 1)) for vid in graph.vertex_ids()
    }
    params = PottsParams(q, beta, J, fields)
    return (
        z_ext_partition_expansion(graph, params),
        z_ext_forest_expansion(graph, params),
        z_ext_tree_expansion(graph, params),
    )


def constant_field_expansions(
    graph: WeightedGraph,
    q: int,
    beta: float,
    J: complex,
    H: complex,
    literal: bool = False,
) -> Tuple[complex, complex, complex]:
    """Partition, forest, and tree expansions for constant coupling J and
    constant field H on the preferred spin.

    With literal=True the block weights use exp(H*|block|) + q - 1 with no
    beta in the exponent; that variant matches the state sum only at
    beta = 1 (or H = 0) and exists for comparison.
    """
    couplings = {e.id: J for e in graph.edges}
    fields = {vid: H for vid in graph.vertex_ids()}
    if not literal:
        return preferred_spin_expansions(graph, q, beta, couplings, fields)

    params = PottsParams.zero_field(graph, q, beta, couplings)
    _guard_partitions(graph)
    symbolic = graph.with_symbolic_gammas()
    bindings = {gamma_var(e.id): _edge_v(params, e.id) for e in graph.edges}
    memo: Dict = {}

    def block_value(block) -> complex:
        if block not in memo:
            poly = zt_q1_connected(symbolic.induced_subgraph(block))
            memo[block] = complex(poly.evaluate(bindings))
        return memo[block]

    def x_literal(size: int) -> complex:
        return cmath.exp(complex(H) * size) + q - 1

    partition_total = 0j
    for blocks in connected_partitions(graph):
        term = 1 + 0j
        for block in blocks:
            term *= x_literal(len(block)) * block_value(block)
        partition_total += term

    expJ = cmath.exp(beta * complex(J))
    forest_total = 0j
    for forest in spanning_forests(graph):
        acts = classify_activities(graph, forest)
        term = 1 + 0j
        for block in graph.components(forest):
            term *= x_literal(len(block))
        term *= (expJ - 1) ** len(forest)
        term *= expJ ** len(acts.externally_active)
        forest_total += term

    _, _, tree_total = preferred_spin_expansions(graph, q, beta, couplings, fields)
    return partition_total, forest_total, tree_total


def _ising_energy(spins, edge_pairs, field_values, coupling: complex) -> complex:
    energy = 0j
    for iu, iv in edge_pairs:
        energy -= coupling * spins[iu] * spins[iv]
    for i, z in enumerate(field_values):
        energy -= z * spins[i]
    return energy


def _rfim_brute(graph: WeightedGraph, beta: float, coupling: complex, z: Mapping[str, complex]) -> complex:
    vids = graph.vertex_ids()
    _guard_states(2, len(vids))
    index = {vid: i for i, vid in enumerate(vids)}
    edge_pairs = [(index[e.u], index[e.v]) for e in graph.edges]
    field_values = [complex(z[vid]) for vid in vids]
    total = 0j
    for spins in itertools.product((-1, 1), repeat=len(vids)):
        total += cmath.exp(-beta * _ising_energy(spins, edge_pairs, field_values, coupling))
    return total


def rfim_partition(
    graph: WeightedGraph,
    beta: float,
    J: complex,
    z: Mapping[str, complex],
    literal: bool = False,
) -> Tuple[complex, complex, complex]:
    """Random-field Ising model with spins in {-1, +1}, constant coupling J,
    and per-vertex fields z: h = -J * sum of spin products over edges minus
    sum of z_i * spin_i.

    Returns the brute-force state sum, the spanning-forest expansion, and the
    spanning-tree expansion.  Both expansions carry the prefactor
    exp(-beta*eta) with eta = J*|E| + 3*sum(z); component weights use
    x(c) = exp(2*beta*c) + exp(4*beta*c).  literal=True drops beta from the
    component weight exponents, which matches the state sum only at beta = 1
    (or zero field).
    """
    for vid in graph.vertex_ids():
        if vid not in z:
            raise InputError(f"missing field value for vertex {vid}")
    coupling = complex(J)
    brute = _rfim_brute(graph, beta, coupling, z)

    _guard_subsets(graph)
    eta = coupling * len(graph.edges) + 3 * sum(complex(z[vid]) for vid in graph.vertex_ids())
    prefactor = cmath.exp(-beta * eta)
    exp2bj = cmath.exp(2 * beta * coupling)

    def x_of_sum(total_field: complex) -> complex:
        if literal:
            return cmath.exp(2 * total_field) + cmath.exp(4 * total_field)
        return cmath.exp(2 * beta * total_field) + cmath.exp(4 * beta * total_field)

    forest_total = 0j
    for forest in spanning_forests(graph):
        acts = classify_activities(graph, forest)
        term = 1 + 0j
        for block in graph.components(forest):
            term *= x_of_sum(sum(complex(z[vid]) for vid in block))
        term *= (exp2bj - 1) ** len(forest)
        term *= exp2bj ** len(acts.externally_active)
        forest_total += term
    forest_value = prefactor * forest_total

    weighted = graph.with_vertex_weights(
        {vid: FieldWeight((z[vid],)) for vid in graph.vertex_ids()}
    ).with_symbolic_gammas()
    tree_total = 0j
    for tree in spanning_trees(weighted):
        acts = classify_activities(weighted, tree)
        contracted = weighted.spanning_subgraph(tree)
        for eid in sorted(acts.internally_inactive):
            contracted = contracted.contract_edge(eid)
        merged_z = {
            vid: complex(weight.values[0]) for vid, weight in contracted.vertices
        }
        eta_sub = coupling * len(contracted.edges) + 3 * sum(merged_z.values())
        term = (exp2bj - 1) ** len(acts.internally_inactive)
        term *= exp2bj ** len(acts.externally_active)
        term *= cmath.exp(beta * eta_sub)
        term *= _rfim_brute(contracted, beta, coupling, merged_z)
        tree_total += term
    tree_value = prefactor * tree_total

    return brute, forest_value, tree_value
