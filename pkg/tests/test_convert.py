import itertools
import json
import random

import pytest

from stabconv import plan_data
from stabconv.convert import (
    ConversionPlan,
    ConversionStep,
    FaultToleranceError,
    PermuteQubits,
    RemoveQubit,
    StepDivergenceError,
    builtin_plan,
    execute_plan,
    execute_reverse,
    export_circuit_lines,
    five_qubit_code,
    five_qubit_equivalence_check,
    intermediate_seven_qubit_code,
    parse_epilogue_item,
    plan_from_json_dict,
    plan_to_json_dict,
    standard_five_qubit_code,
    steane_code,
    steane_equivalence_check,
    steane_equivalence_report,
)
from stabconv.pauli import PauliOperator
from stabconv.tableau import (
    GateOp,
    StabilizerCode,
    add_ancilla_plus,
    apply_gate,
    apply_ops,
    generator_span,
    group_member,
    groups_equal,
    permute_qubits,
)


def P(s):
    return PauliOperator.from_string(s)


def same_group(a, b):
    sa, sb = generator_span(a), generator_span(b)
    return sa.rank == sb.rank and all(sb.contains(g.symplectic) for g in a.generators)


# ---- embedded data ----------------------------------------------------------


def test_embedded_tables_content_hash():
    assert plan_data.content_fingerprint() == plan_data.CONTENT_SHA256


def test_builtin_plan_shape(plan):
    assert len(plan.steps) == 15
    assert plan.cz_count == 13
    assert plan.quoted_cz_count == 14
    assert plan.width == 10
    assert plan.steps[0].ops == ()
    assert plan.steps[1].ops == (GateOp.cz(0, 5),)
    assert plan.steps[1].check_pair == (0, 5)
    assert plan.steps[14].ops == (
        GateOp.xrot(2, 1),
        GateOp.zrot(1, -1),
        GateOp.zrot(3, -1),
    )
    assert plan.steps[0].expected_code.generators[0] == P("YYZIZ")
    assert plan.steps[1].expected_code.logical_x == P("XXXXXZIIII")


def test_cz_sequence_matches_listing(plan):
    pairs = [s.ops[0].qubits for s in plan.steps if s.ops and s.ops[0].kind == "CZ"]
    assert pairs == [
        (0, 5), (0, 6), (1, 7), (2, 8), (3, 9), (1, 3), (7, 3),
        (7, 6), (6, 4), (4, 0), (5, 0), (9, 3), (8, 2),
    ]


def test_check_pair_present_iff_cz(plan):
    for step in plan.steps:
        has_cz = any(op.kind == "CZ" for op in step.ops)
        assert (step.check_pair is not None) == has_cz


# ---- forward execution -------------------------------------------------------


def test_execute_plan_full_validation(plan):
    results = execute_plan(plan, validate=True)
    assert len(results) == 15
    reports = [r for _, r in results if r is not None]
    assert len(reports) == 14
    assert all(r.valid for r in reports)


def test_internal_chain_consistency(plan, step_codes_10q):
    previous = step_codes_10q[0]
    for step, expected in zip(plan.steps[1:], step_codes_10q[1:]):
        computed = apply_ops(previous, step.ops)
        assert groups_equal(computed, expected)
        previous = expected


def test_listed_logicals_match_conjugated_modulo_group(plan, step_codes_10q):
    code = step_codes_10q[0]
    for step, expected in zip(plan.steps[1:], step_codes_10q[1:]):
        code = apply_ops(code, step.ops)
        assert group_member(expected, code.logical_x * expected.logical_x) is not None
        assert group_member(expected, code.logical_z * expected.logical_z) is not None


def test_divergence_reports_step():
    plan = builtin_plan()
    tampered_steps = list(plan.steps)
    tampered_steps[1] = ConversionStep(
        ops=(GateOp.cz(0, 7),),
        expected_code=plan.steps[1].expected_code,
        check_pair=(0, 7),
    )
    tampered = ConversionPlan(plan.initial_code, tuple(tampered_steps), plan.epilogue)
    with pytest.raises(StepDivergenceError) as err:
        execute_plan(tampered, validate=True)
    assert err.value.step_index == 2


def test_fault_tolerance_failure_carries_witness(plan, padded_initial):
    # a CZ between two data qubits of the five-qubit block is not protected
    bad_code = apply_gate(padded_initial, GateOp.cz(0, 1))
    bad_plan = ConversionPlan(
        initial_code=plan.initial_code,
        steps=(
            ConversionStep(
                ops=(GateOp.cz(0, 1),), expected_code=bad_code, check_pair=(0, 1)
            ),
        ),
        epilogue=(),
    )
    with pytest.raises(FaultToleranceError) as err:
        execute_plan(bad_plan, validate=True)
    assert err.value.step_index == 1
    assert len(err.value.witness) == 2


def test_empty_and_noop_plans(plan, padded_initial):
    empty = ConversionPlan(padded_initial, (), ())
    assert execute_plan(empty, validate=True) == []
    noop = ConversionPlan(
        padded_initial,
        (ConversionStep(ops=(), expected_code=padded_initial, check_pair=None),),
        (),
    )
    results = execute_plan(noop, validate=True)
    assert len(results) == 1
    assert results[0][0] == padded_initial
    assert results[0][1] is None


def test_execute_without_validation_matches_tables(plan, step_codes_10q):
    results = execute_plan(plan, validate=False)
    assert all(r is None for _, r in results)
    for (code, _), expected in zip(results, step_codes_10q):
        assert groups_equal(code, expected)


# ---- reverse execution -------------------------------------------------------


def test_execute_reverse_full_validation(plan, padded_initial):
    results = execute_reverse(plan, validate=True)
    assert len(results) == len(plan.steps)
    reports = [r for _, r in results if r is not None]
    assert len(reports) == 13
    assert all(r.valid for r in reports)
    assert groups_equal(results[-1][0], padded_initial)


def test_reverse_single_cz_recovers_initial(plan, padded_initial):
    single = ConversionPlan(
        plan.initial_code, (plan.steps[0], plan.steps[1]), ()
    )
    results = execute_reverse(single, validate=True)
    assert groups_equal(results[0][0], padded_initial)


def test_reverse_undoes_singles_layer(plan):
    last = plan.steps[-1]
    previous = plan.steps[-2].expected_code
    undone = apply_ops(
        last.expected_code, [op.inverse() for op in reversed(last.ops)]
    )
    assert groups_equal(undone, previous)


# ---- endpoint equivalence ----------------------------------------------------


def test_steane_equivalence_of_final_step(plan):
    final = plan.steps[-1].expected_code
    report = steane_equivalence_report(final)
    assert report.pre_rotation_match
    assert report.post_rotation_match
    assert steane_equivalence_check(final)
    assert report.seven_qubit_code.n == 7
    assert groups_equal(report.seven_qubit_code, intermediate_seven_qubit_code())


def test_pre_rotation_logical_z_is_all_y(plan):
    report = steane_equivalence_report(plan.steps[-1].expected_code)
    relabeled = report.relabeled_code
    # Z_L equals Y...Y modulo the stabilizer group before the rotation layer
    assert group_member(relabeled, relabeled.logical_z * P("YYYYYYY")) is not None
    assert group_member(relabeled, relabeled.logical_x * P("XXXXXXX")) is not None


def test_steane_check_rejects_wrong_code(padded_initial):
    assert not steane_equivalence_check(padded_initial)


def test_steane_check_requires_ten_qubits():
    with pytest.raises(ValueError):
        steane_equivalence_check(five_qubit_code())


def test_five_qubit_equivalence_check(plan):
    assert five_qubit_equivalence_check(plan.initial_code)
    code = plan.initial_code
    swapped = StabilizerCode(
        5,
        (code.generators[1], code.generators[0]) + code.generators[2:],
        code.logical_x,
        code.logical_z,
    )
    assert five_qubit_equivalence_check(swapped)
    with pytest.raises(ValueError):
        five_qubit_equivalence_check(steane_code())


def test_five_qubit_form_relabels_from_standard_cyclic_form():
    # letter change X->Y is a ZROT layer; qubit reordering frozen from a
    # one-time search over all 120 permutations
    rotated = apply_ops(standard_five_qubit_code(), [GateOp.zrot(q) for q in range(5)])
    relabeled = permute_qubits(rotated, (0, 2, 4, 1, 3))
    assert same_group(relabeled, five_qubit_code())


def test_epilogue_census(plan):
    counts = {"H": 0, "XROT": 0, "ZROT": 0}
    for op in plan.steps[-1].ops:
        counts[op.kind] += 1
    for item in plan.epilogue:
        if isinstance(item, GateOp):
            counts[item.kind] += 1
    assert counts == {"H": 3, "XROT": 8, "ZROT": 2}


# ---- export and JSON ----------------------------------------------------------


def test_export_circuit_golden(plan):
    lines = export_circuit_lines(plan)
    assert lines[0] == "CZ 0 5"
    assert lines[:13] == [
        "CZ 0 5", "CZ 0 6", "CZ 1 7", "CZ 2 8", "CZ 3 9", "CZ 1 3", "CZ 7 3",
        "CZ 7 6", "CZ 6 4", "CZ 4 0", "CZ 5 0", "CZ 9 3", "CZ 8 2",
    ]
    assert lines[13:16] == ["XROT 2 +90", "ZROT 1 -90", "ZROT 3 -90"]
    assert lines[16:19] == ["H 1", "H 3", "H 6"]
    comments = [l for l in lines if l.startswith("#")]
    assert len(comments) == 4
    gate_lines = [l for l in lines if not l.startswith("#")]
    for line in gate_lines:
        GateOp.from_text(line)
    assert gate_lines[-7:] == [f"XROT {q} +90" for q in range(7)]


def test_epilogue_text_roundtrip():
    for text in plan_data.EPILOGUE_TEXT:
        item = parse_epilogue_item(text)
        assert item.to_text() == text
    assert parse_epilogue_item("REMOVE 9") == RemoveQubit(9)
    assert parse_epilogue_item("PERMUTE 0,1,6,2,4,3,5") == PermuteQubits((0, 1, 6, 2, 4, 3, 5))


def test_plan_json_roundtrip(plan):
    payload = plan_to_json_dict(plan)
    text = json.dumps(payload)
    assert json.dumps(plan_to_json_dict(plan)) == text  # deterministic
    restored = plan_from_json_dict(json.loads(text))
    assert len(restored.steps) == 15
    results = execute_plan(restored, validate=True)
    assert len([r for _, r in results if r is not None]) == 14


def test_plan_json_schema(plan):
    payload = plan_to_json_dict(plan)
    assert set(payload) == {"initial", "steps", "epilogue"}
    assert payload["steps"][1]["ops"] == ["CZ 0 5"]
    assert payload["steps"][1]["pair"] == [0, 5]
    assert payload["steps"][0]["pair"] is None
    assert payload["epilogue"][0] == "H 1"
