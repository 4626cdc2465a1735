"""Acceptance suite: every criterion prints one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import random
import time

from vpotts import (
    FieldWeight,
    PottsParams,
    check_potts_tutte_identity,
    connected_partitions,
    rfim_partition,
    constant_field_expansions,
    preferred_spin_expansions,
    spanning_forests,
    spanning_trees,
    specialize_x_to_theta,
    tutte_polynomial,
    v_connected_partition,
    v_deletion_contraction,
    v_spanning_forest,
    v_spanning_tree,
    v_state_sum,
    z_brute_force,
    z_ext_forest_expansion,
    z_ext_partition_expansion,
    z_ext_tree_expansion,
    z_ext_via_v,
    z_zero,
    z_zero_tree_expansion,
    zt_q1_connected,
    zt_subset_sum,
    zt_traldi,
)
from vpotts.random_graphs import (
    random_constant_coupling_params,
    random_potts_params,
    random_weighted_graph,
)

from conftest import make_complete, make_k3, make_path3
from test_tutte import collapse_gammas
from test_vpoly import k3_expected
from conftest import gv, theta

TOL = 1e-9
TIME_BUDGET_SECONDS = 300.0

V_METHODS = (
    ("delcon", v_deletion_contraction),
    ("statesum", v_state_sum),
    ("tree", v_spanning_tree),
    ("forest", v_spanning_forest),
    ("partition", v_connected_partition),
)

Z_METHODS = (
    ("v", z_ext_via_v),
    ("tree", z_ext_tree_expansion),
    ("forest", z_ext_forest_expansion),
    ("partition", z_ext_partition_expansion),
)


def report(number: int, name: str, ok: bool) -> None:
    print(f"[acceptance {number}] {name}: {'PASS' if ok else 'FAIL'}")


def rel(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else 0.0


def seeded_graph(label: str, trial: int, **kwargs):
    rng = random.Random(f"{label}:{trial}")
    return random_weighted_graph(rng, **kwargs), rng


def test_criterion_1_five_way_v_agreement():
    started = time.monotonic()
    failures = []
    for trial in range(200):
        graph, _ = seeded_graph("accept-v", trial)
        reference = v_state_sum(graph)
        for name, method in V_METHODS:
            if method(graph) != reference:
                failures.append((trial, name))
    elapsed = time.monotonic() - started
    ok = not failures and elapsed < TIME_BUDGET_SECONDS
    report(1, f"five-way V agreement on 200 graphs ({elapsed:.1f}s)", ok)
    assert not failures, failures[:5]
    assert elapsed < TIME_BUDGET_SECONDS


def test_criterion_2_k3_fixtures():
    k3 = make_k3()
    g = gv("e")
    zt_expected = (
        theta() * theta() * theta()
        + 3 * g * theta() * theta()
        + (3 * g * g + g * g * g) * theta()
    )
    checks = [
        v_state_sum(k3) == k3_expected(),
        v_deletion_contraction(k3) == k3_expected(),
        collapse_gammas(zt_subset_sum(k3), "e") == zt_expected,
        tutte_polynomial(k3).canonical_text() == "1*x^2 + 1*x + 1*y",
        collapse_gammas(zt_q1_connected(k3), "e") == 3 * g * g + g * g * g,
    ]
    ok = all(checks)
    report(2, "K3 fixtures (V, Z_T, Tutte, q^1 coefficient)", ok)
    assert ok, checks


def test_criterion_3_five_way_z_agreement():
    started = time.monotonic()
    failures = []
    for trial in range(200):
        graph, rng = seeded_graph("accept-z", trial)
        params = random_potts_params(rng, graph)
        brute = z_brute_force(graph, params)
        for name, method in Z_METHODS:
            error = rel(method(graph, params), brute)
            if error > TOL:
                failures.append((trial, name, error))
    elapsed = time.monotonic() - started
    ok = not failures and elapsed < TIME_BUDGET_SECONDS
    report(3, f"five-way Z agreement on 200 instances ({elapsed:.1f}s)", ok)
    assert not failures, failures[:5]
    assert elapsed < TIME_BUDGET_SECONDS


def test_criterion_4_specialization_chain():
    failures = []
    for trial in range(200):
        graph, rng = seeded_graph("accept-chain", trial)
        subset = zt_subset_sum(graph)
        if specialize_x_to_theta(v_state_sum(graph)) != subset:
            failures.append((trial, "specialize"))
        if zt_traldi(graph) != subset:
            failures.append((trial, "traldi"))
        params = random_potts_params(rng, graph, zero_field=True)
        if rel(z_zero(graph, params), z_brute_force(graph, params)) > TOL:
            failures.append((trial, "z_zero"))
    ok = not failures
    report(4, "specialization chain and zero-field reduction on 200 instances", ok)
    assert ok, failures[:5]


def test_criterion_5_classical_identities():
    failures = []
    produced = 0
    trial = 0
    while produced < 100:
        graph, rng = seeded_graph("accept-classic", trial)
        trial += 1
        if len(graph.components()) != 1 or not graph.edges:
            continue
        produced += 1
        params = random_constant_coupling_params(rng, graph)
        agrees, residual = check_potts_tutte_identity(graph, params, TOL)
        if not agrees:
            failures.append((trial, "identity", residual))
        error = rel(z_zero_tree_expansion(graph, params), z_zero(graph, params))
        if error > TOL:
            failures.append((trial, "tree expansion", error))
    ok = not failures
    report(5, "classical identities on 100 connected constant-J instances", ok)
    assert ok, failures[:5]


def test_criterion_6_specialization_models():
    failures = []
    for trial in range(50):
        graph, rng = seeded_graph("accept-pref", trial)
        q = rng.choice((2, 3, 4))
        beta = rng.uniform(0.1, 2.0)
        couplings = {e.id: rng.uniform(-2.0, 2.0) for e in graph.edges_by_order()}
        fields = {vid: rng.uniform(-1.0, 1.0) for vid in graph.vertex_ids()}
        brute = z_brute_force(
            graph,
            PottsParams(
                q,
                beta,
                couplings,
                {v: FieldWeight((value,) + (0,) * (q - 1)) for v, value in fields.items()},
            ),
        )
        for name, value in zip(
            ("partition", "forest", "tree"),
            preferred_spin_expansions(graph, q, beta, couplings, fields),
        ):
            error = rel(value, brute)
            if error > TOL:
                failures.append(("preferred", trial, name, error))

    for trial in range(50):
        graph, rng = seeded_graph("accept-const", trial)
        q = rng.choice((2, 3, 4))
        beta = rng.uniform(0.1, 2.0)
        coupling = rng.uniform(-2.0, 2.0)
        field = rng.uniform(-1.0, 1.0)
        brute = z_brute_force(
            graph,
            PottsParams(
                q,
                beta,
                {e.id: coupling for e in graph.edges},
                {v: FieldWeight((field,) + (0,) * (q - 1)) for v in graph.vertex_ids()},
            ),
        )
        for name, value in zip(
            ("partition", "forest", "tree"),
            constant_field_expansions(graph, q, beta, coupling, field),
        ):
            error = rel(value, brute)
            if error > TOL:
                failures.append(("constant", trial, name, error))

    for trial in range(50):
        graph, rng = seeded_graph("accept-rfim", trial, max_vertices=10, max_edges=12)
        beta = rng.uniform(0.1, 2.0)
        coupling = rng.uniform(-1.5, 1.5)
        fields = {vid: rng.uniform(-1.0, 1.0) for vid in graph.vertex_ids()}
        brute, forest, tree = rfim_partition(graph, beta, coupling, fields)
        if rel(forest, brute) > TOL:
            failures.append(("rfim", trial, "forest", rel(forest, brute)))
        if rel(tree, brute) > TOL:
            failures.append(("rfim", trial, "tree", rel(tree, brute)))

    ok = not failures
    report(6, "preferred-spin, constant-field, and Ising expansions (50 each)", ok)
    assert ok, failures[:5]


def test_criterion_7_edge_order_invariance():
    failures = []
    for trial in range(20):
        graph, rng = seeded_graph("accept-order", trial)
        baselines = (
            v_spanning_tree(graph),
            v_spanning_forest(graph),
            zt_traldi(graph),
            tutte_polynomial(graph),
        )
        for attempt in range(5):
            orders = [e.order for e in graph.edges]
            rng.shuffle(orders)
            permuted = graph.with_edge_orders(
                {e.id: order for e, order in zip(graph.edges, orders)}
            )
            results = (
                v_spanning_tree(permuted),
                v_spanning_forest(permuted),
                zt_traldi(permuted),
                tutte_polynomial(permuted),
            )
            for name, base, result in zip(
                ("vtree", "vforest", "traldi", "tutte"), baselines, results
            ):
                if base != result:
                    failures.append((trial, attempt, name))
    ok = not failures
    report(7, "edge-order invariance over 20 graphs x 5 permutations", ok)
    assert ok, failures[:5]


def test_criterion_8_enumeration_counts():
    counts = {
        "trees K3": len(spanning_trees(make_complete(3))),
        "trees K4": len(spanning_trees(make_complete(4))),
        "trees K5": len(spanning_trees(make_complete(5))),
        "forests K3": len(spanning_forests(make_k3())),
        "partitions K3": len(connected_partitions(make_k3())),
        "partitions path3": len(connected_partitions(make_path3())),
    }
    expected = {
        "trees K3": 3,
        "trees K4": 16,
        "trees K5": 125,
        "forests K3": 7,
        "partitions K3": 5,
        "partitions path3": 4,
    }
    ok = counts == expected
    report(8, "enumeration counts (trees, forests, connected partitions)", ok)
    assert counts == expected
