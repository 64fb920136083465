import itertools
import json
import random

import pytest

from oracles import random_valid_code
from stabconv.convert import five_qubit_code
from stabconv.pauli import PauliOperator
from stabconv.tableau import (
    GateOp,
    StabilizerCode,
    add_ancilla_plus,
    apply_gate,
    check_valid_tableau,
    groups_equal,
    permute_qubits,
)
from stabconv.search import (
    CodeFamily,
    ExpansionStats,
    FrontierBudgetError,
    Graph,
    LcOrbit,
    bfs_bidirectional,
    canonical_form,
    canonicalize,
    code_to_state,
    depth_one_stats,
    extract_code_from_state,
    family_from_code,
    find_relabeling,
    graph_key,
    graph_to_state,
    lc_orbit,
    local_complement,
    state_to_graph,
    validate_path,
)
from stabconv.verify import enumerate_errors, verify_correctable


# ---- graphs ------------------------------------------------------------------


def test_graph_construction_checks():
    with pytest.raises(ValueError):
        Graph(2, (0b10,))  # wrong row count
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # asymmetric / self-loop mix
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_local_complement_path_becomes_triangle():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert sorted(local_complement(path, 1).edges()) == [(0, 1), (0, 2), (1, 2)]


def test_local_complement_isolated_vertex_is_noop():
    g = Graph.from_edges(3, [(0, 1)])
    assert local_complement(g, 2) == g


def test_local_complement_is_involution():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(2, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        v = rng.randrange(n)
        assert local_complement(local_complement(g, v), v) == g


def test_graph_key_permutation_invariant():
    rng = random.Random(5)
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)])
    k = graph_key(g)
    for _ in range(30):
        perm = list(range(5))
        rng.shuffle(perm)
        rows = [0] * 5
        for u, v in g.edges():
            pu, pv = perm[u], perm[v]
            rows[pu] |= 1 << pv
            rows[pv] |= 1 << pu
        assert graph_key(Graph(5, tuple(rows))) == k


# ---- orbits ------------------------------------------------------------------


def test_lc_orbit_single_vertex():
    g = Graph(1, (0,))
    orbit = lc_orbit(g, 10)
    assert len(orbit.graphs) == 1 and not orbit.truncated


def test_lc_orbit_of_path_contains_triangle():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    orbit = lc_orbit(path, 100)
    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert graph_key(triangle) in {graph_key(g) for g in orbit.graphs}
    assert not orbit.truncated


def test_lc_orbit_cap_sets_truncation_flag():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    orbit = lc_orbit(path, 1)
    assert orbit.truncated
    assert len(orbit.graphs) == 1


def test_lc_orbit_matches_labelled_closure():
    # independent closure without isomorphism caching, then collapse by key
    g = state_to_graph(code_to_state(five_qubit_code()))
    seen = {g.adjacency: g}
    frontier = [g]
    while frontier:
        current = frontier.pop()
        for v in range(g.n):
            nxt = local_complement(current, v)
            if nxt.adjacency not in seen:
                seen[nxt.adjacency] = nxt
                frontier.append(nxt)
    labelled_classes = {graph_key(h) for h in seen.values()}
    orbit = lc_orbit(g, 100_000)
    assert {graph_key(h) for h in orbit.graphs} == labelled_classes
    # regression constant from this closure
    assert len(orbit.graphs) == 2


def _components(g: Graph) -> list[int]:
    unseen = set(range(g.n))
    sizes = []
    while unseen:
        stack = [unseen.pop()]
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for u in range(g.n):
                if g.adjacency[v] >> u & 1 and u in unseen:
                    unseen.remove(u)
                    stack.append(u)
        sizes.append(size)
    return sorted(sizes)


def test_lc_orbit_preserves_component_fingerprint():
    g = state_to_graph(code_to_state(five_qubit_code()))
    fingerprint = _components(g)
    for member in lc_orbit(g, 1000).graphs:
        assert _components(member) == fingerprint


# ---- code/state/graph conversions ---------------------------------------------


def test_code_to_state_shape():
    state = code_to_state(five_qubit_code())
    assert state.n == 6
    assert len(state.generators) == 6
    assert state.is_state
    assert check_valid_tableau(state).valid


def test_code_to_state_rejects_states():
    state = code_to_state(five_qubit_code())
    with pytest.raises(ValueError):
        code_to_state(state)


def test_code_to_state_injective_on_step_codes(step_codes_10q):
    states = [code_to_state(c) for c in step_codes_10q]
    for a, b in itertools.combinations(states, 2):
        assert not groups_equal(a, b)


def test_extract_inverts_reference_construction():
    rng = random.Random(9)
    for _ in range(25):
        code = random_valid_code(rng.randrange(2, 7), rng)
        state = code_to_state(code)
        assert extract_code_from_state(state, code.n) == code


def test_extract_returns_none_for_unentangled_reference():
    # product state: reference qubit carries only X -> no Z pivot
    state = StabilizerCode(
        2, (PauliOperator.from_string("XI"), PauliOperator.from_string("IX"))
    )
    assert extract_code_from_state(state, 1) is None


def test_graph_state_roundtrip():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(2, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        assert state_to_graph(graph_to_state(g)) == g


def test_state_to_graph_handles_random_code_states():
    rng = random.Random(13)
    for _ in range(25):
        code = random_valid_code(rng.randrange(2, 7), rng)
        graph = state_to_graph(code_to_state(code))
        assert graph.n == code.n + 1  # constructor validates symmetry


def test_family_from_code_singleton():
    family = family_from_code(five_qubit_code(), orbit_cap=1)
    assert family.codes == (five_qubit_code(),)
    assert not family.truncated


def test_family_from_code_orbit_members_are_valid():
    family = family_from_code(five_qubit_code(), orbit_cap=50)
    assert len(family.codes) >= 1
    for code in family.codes:
        assert code.n == 5
        assert check_valid_tableau(code).valid
    keys = {canonicalize(c) for c in family.codes}
    assert len(keys) == len(family.codes)


# ---- canonical keys ------------------------------------------------------------


def test_canonical_key_invariant_under_permutations(step_codes_10q):
    rng = random.Random(17)
    for code in step_codes_10q[:4]:
        key = canonicalize(code)
        for _ in range(50):
            perm = list(range(code.n))
            rng.shuffle(perm)
            assert canonicalize(permute_qubits(code, perm)) == key


def test_canonical_keys_distinct_across_step_codes(step_codes_10q):
    keys = {canonicalize(c) for c in step_codes_10q}
    assert len(keys) == len(step_codes_10q)


def test_canonical_key_detects_logical_reassignment():
    code = five_qubit_code()
    swapped = StabilizerCode(5, code.generators, code.logical_z, code.logical_x)
    assert canonicalize(code) != canonicalize(swapped)


def test_no_false_collisions_on_mixed_corpus(step_codes_10q):
    rng = random.Random(19)
    corpus = list(step_codes_10q)
    for _ in range(40):
        corpus.append(random_valid_code(rng.randrange(4, 9), rng))
    by_key = {}
    for code in corpus:
        key = (code.n, canonicalize(code))
        if key in by_key:
            assert groups_equal(by_key[key], code)
        else:
            by_key[key] = code
    assert len(by_key) >= 50


def test_find_relabeling_recovers_permutation():
    rng = random.Random(23)
    for _ in range(20):
        code = random_valid_code(rng.randrange(3, 8), rng)
        perm = list(range(code.n))
        rng.shuffle(perm)
        shuffled = permute_qubits(code, perm)
        found = find_relabeling(code, shuffled)
        assert found is not None
        assert groups_equal(permute_qubits(code, found), shuffled)


def test_find_relabeling_rejects_different_codes(step_codes_10q):
    assert find_relabeling(step_codes_10q[0], step_codes_10q[5]) is None


# ---- search -------------------------------------------------------------------


def test_bfs_zero_length_path(padded_initial):
    outcome = bfs_bidirectional([padded_initial], [padded_initial], max_depth=2)
    assert outcome.found
    assert outcome.path.cz_count == 0
    assert outcome.path.gates == ()


def test_bfs_finds_two_cz_path(plan, padded_initial):
    goal = plan.steps[2].expected_code
    outcome = bfs_bidirectional([padded_initial], [goal], max_depth=4)
    assert outcome.found
    assert outcome.path.cz_count == 2
    assert outcome.nodes_expanded > 0
    # replay obeys the same predicate the search used, and lands on the goal
    final = validate_path(padded_initial, outcome.path.gates)
    assert find_relabeling(final, goal) is not None


def test_bfs_respects_depth_limit(plan, padded_initial):
    goal = plan.steps[2].expected_code
    outcome = bfs_bidirectional([padded_initial], [goal], max_depth=0)
    assert not outcome.found


def test_bfs_rejects_empty_or_mixed_families(plan, padded_initial):
    with pytest.raises(ValueError):
        bfs_bidirectional([], [padded_initial], max_depth=1)
    with pytest.raises(ValueError):
        bfs_bidirectional([padded_initial], [plan.initial_code], max_depth=1)


def test_listed_gate_sequence_is_a_valid_search_path(plan, padded_initial):
    gates = [op for step in plan.steps for op in step.ops if op.kind == "CZ"]
    final = validate_path(padded_initial, gates)
    assert groups_equal(final, plan.steps[13].expected_code)


def test_depth_one_expansion_regression_constants(padded_initial):
    stats = depth_one_stats(padded_initial)
    assert stats == ExpansionStats(accepted=35, rejected=10, unique_keys=2)


def test_checkpoint_and_resume(tmp_path, plan, padded_initial):
    goal = plan.steps[2].expected_code
    ckpt = tmp_path / "search.ckpt"
    with pytest.raises(FrontierBudgetError) as err:
        bfs_bidirectional(
            [padded_initial],
            [goal],
            max_depth=4,
            node_budget=3,
            checkpoint_path=str(ckpt),
        )
    assert err.value.checkpoint_path == str(ckpt)
    payload = json.loads(ckpt.read_text())
    assert payload["version"] == 1
    resumed = bfs_bidirectional([], [], max_depth=4, resume_from=str(ckpt))
    assert resumed.found
    assert resumed.path.cz_count == 2


def test_validate_path_rejects_unprotected_gate(padded_initial):
    with pytest.raises(ValueError):
        validate_path(padded_initial, [GateOp.cz(0, 1)])
