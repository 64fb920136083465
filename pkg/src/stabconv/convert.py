"""Execution and validation of code-conversion plans.

A plan is an ordered list of steps, each carrying the gates to apply and
the full table the resulting code must match (as a group, signs ignored:
the embedded tables are unsigned).  CZ steps also carry the qubit pair
whose two-qubit errors the post-gate code must correct.  The epilogue is
the local-equivalence procedure run after the last step: Hadamards,
removal of unentangled qubits, a relabeling, and a transversal rotation.

Execution works on a fixed working width (ten qubits for the built-in
plan); narrower expected tables are padded with |+> ancillas before
comparison.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Union

from . import plan_data
from .pauli import PauliOperator
from .tableau import (
    GateOp,
    StabilizerCode,
    add_ancilla_plus,
    apply_gate,
    apply_ops,
    groups_equal,
    permute_qubits,
    remove_unentangled_qubit,
)
from .verify import ValidityReport, enumerate_errors, verify_correctable


class StepDivergenceError(Exception):
    """A step's computed code does not match its expected table."""

    def __init__(self, step_index: int, detail: str):
        self.step_index = step_index
        super().__init__(f"step {step_index}: {detail}")


class FaultToleranceError(Exception):
    """A step's code fails the correctability check."""

    def __init__(self, step_index: int, witness):
        self.step_index = step_index
        self.witness = witness
        pair = " / ".join(str(w) for w in witness) if witness else "?"
        super().__init__(f"step {step_index}: errors not distinguishable: {pair}")


@dataclass(frozen=True)
class RemoveQubit:
    qubit: int

    def to_text(self) -> str:
        return f"REMOVE {self.qubit}"


@dataclass(frozen=True)
class PermuteQubits:
    perm: tuple[int, ...]

    def to_text(self) -> str:
        return "PERMUTE " + ",".join(str(p) for p in self.perm)


EpilogueOp = Union[GateOp, RemoveQubit, PermuteQubits]


def parse_epilogue_item(text: str) -> EpilogueOp:
    parts = text.split(None, 1)
    if parts and parts[0].upper() == "REMOVE":
        return RemoveQubit(int(parts[1]))
    if parts and parts[0].upper() == "PERMUTE":
        return PermuteQubits(tuple(int(t) for t in parts[1].split(",")))
    return GateOp.from_text(text)


def apply_epilogue_item(code: StabilizerCode, item: EpilogueOp) -> StabilizerCode:
    if isinstance(item, RemoveQubit):
        return remove_unentangled_qubit(code, item.qubit)
    if isinstance(item, PermuteQubits):
        return permute_qubits(code, item.perm)
    return apply_gate(code, item)


@dataclass(frozen=True)
class ConversionStep:
    ops: tuple[GateOp, ...]
    expected_code: StabilizerCode
    check_pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class ConversionPlan:
    initial_code: StabilizerCode
    steps: tuple[ConversionStep, ...]
    epilogue: tuple[EpilogueOp, ...]
    quoted_cz_count: Optional[int] = None
    notes: tuple[str, ...] = ()

    @property
    def cz_count(self) -> int:
        return sum(1 for s in self.steps for op in s.ops if op.kind == "CZ")

    @property
    def width(self) -> int:
        return max([self.initial_code.n] + [s.expected_code.n for s in self.steps])


def _padded(code: StabilizerCode, width: int) -> StabilizerCode:
    if code.n > width:
        raise ValueError(f"code on {code.n} qubits exceeds working width {width}")
    return add_ancilla_plus(code, width - code.n)


@functools.lru_cache(maxsize=1)
def builtin_plan() -> ConversionPlan:
    """The embedded fifteen-step five-to-seven-qubit conversion plan."""
    steps = tuple(
        ConversionStep(
            ops=tuple(GateOp.from_text(t) for t in rec["ops"]),
            expected_code=StabilizerCode.from_strings(
                rec["stabilizers"], rec["logical_x"], rec["logical_z"]
            ),
            check_pair=rec["pair"],
        )
        for rec in plan_data.STEP_RECORDS
    )
    return ConversionPlan(
        initial_code=steps[0].expected_code,
        steps=steps,
        epilogue=tuple(parse_epilogue_item(t) for t in plan_data.EPILOGUE_TEXT),
        quoted_cz_count=plan_data.QUOTED_CZ_COUNT,
        notes=(plan_data.CZ_COUNT_NOTE,),
    )


def five_qubit_code() -> StabilizerCode:
    """The initial five-qubit code in the Y-letter form used by the plan."""
    return builtin_plan().initial_code


def standard_five_qubit_code() -> StabilizerCode:
    """The common cyclic form of the five-qubit code."""
    d = plan_data.STANDARD_FIVE_QUBIT
    return StabilizerCode.from_strings(d["stabilizers"], d["logical_x"], d["logical_z"])


def steane_code() -> StabilizerCode:
    d = plan_data.STEANE
    return StabilizerCode.from_strings(d["stabilizers"], d["logical_x"], d["logical_z"])


def intermediate_seven_qubit_code() -> StabilizerCode:
    """Seven-qubit table reached after the Hadamard layer and qubit removal,
    before the relabeling; the logical Z is all-Y at this stage."""
    d = plan_data.INTERMEDIATE_SEVEN_QUBIT
    return StabilizerCode.from_strings(d["stabilizers"], d["logical_x"], d["logical_z"])


StepResult = tuple[StabilizerCode, Optional[ValidityReport]]


def execute_plan(
    plan: ConversionPlan, validate: bool = True, workers: int = 1
) -> list[StepResult]:
    """Run the plan forward from the padded initial code.

    With ``validate`` on, every step's code must match its expected table
    as a group, and every step that applies gates must pass the
    correctability check (singles everywhere, plus the step's CZ pair).
    """
    width = plan.width
    code = _padded(plan.initial_code, width)
    results: list[StepResult] = []
    for index, step in enumerate(plan.steps, start=1):
        code = apply_ops(code, step.ops)
        report: Optional[ValidityReport] = None
        if validate:
            if not groups_equal(code, _padded(step.expected_code, width)):
                raise StepDivergenceError(index, "computed code does not match expected table")
            if step.ops:
                report = verify_correctable(
                    code, enumerate_errors(width, step.check_pair), workers=workers
                )
                if not report.valid:
                    raise FaultToleranceError(index, report.witness)
        results.append((code, report))
    return results


def execute_reverse(
    plan: ConversionPlan, validate: bool = True, workers: int = 1
) -> list[StepResult]:
    """Undo the plan from the final table back to the initial code.

    Undoing a CZ step lands on the code that precedes the gate in the
    forward direction; that code must correct the pair errors of the CZ
    being undone.
    """
    if not plan.steps:
        return []
    width = plan.width
    code = _padded(plan.steps[-1].expected_code, width)
    results: list[StepResult] = []
    for index in range(len(plan.steps) - 1, -1, -1):
        step = plan.steps[index]
        code = apply_ops(code, [op.inverse() for op in reversed(step.ops)])
        report: Optional[ValidityReport] = None
        if validate:
            target = plan.steps[index - 1].expected_code if index > 0 else plan.initial_code
            if not groups_equal(code, _padded(target, width)):
                raise StepDivergenceError(index + 1, "undo does not match preceding table")
            if step.check_pair is not None:
                report = verify_correctable(
                    code, enumerate_errors(width, step.check_pair), workers=workers
                )
                if not report.valid:
                    raise FaultToleranceError(index + 1, report.witness)
        results.append((code, report))
    return results


@dataclass(frozen=True)
class SteaneEquivalenceReport:
    """Stages of the final-code equivalence procedure."""

    seven_qubit_code: StabilizerCode
    relabeled_code: StabilizerCode
    final_code: StabilizerCode
    pre_rotation_match: bool
    post_rotation_match: bool

    @property
    def ok(self) -> bool:
        return self.pre_rotation_match and self.post_rotation_match


def steane_equivalence_report(code: StabilizerCode) -> SteaneEquivalenceReport:
    """Apply the built-in epilogue to a ten-qubit final-step code and compare
    against the standard seven-qubit tables before and after the transversal
    rotation layer."""
    if code.n != 10:
        raise ValueError(f"expected a 10-qubit code, got n={code.n}")
    epilogue = builtin_plan().epilogue
    permute_at = next(i for i, item in enumerate(epilogue) if isinstance(item, PermuteQubits))

    current = code
    for item in epilogue[:permute_at]:
        current = apply_epilogue_item(current, item)
    seven = current
    relabeled = apply_epilogue_item(seven, epilogue[permute_at])

    steane = steane_code()
    pre_expected = StabilizerCode(
        steane.n,
        steane.generators,
        steane.logical_x,
        PauliOperator.from_string(plan_data.PRE_ROTATION_LOGICAL_Z),
    )
    pre_match = groups_equal(relabeled, pre_expected)

    final = relabeled
    for item in epilogue[permute_at + 1 :]:
        final = apply_epilogue_item(final, item)
    post_match = groups_equal(final, steane)

    return SteaneEquivalenceReport(
        seven_qubit_code=seven,
        relabeled_code=relabeled,
        final_code=final,
        pre_rotation_match=pre_match,
        post_rotation_match=post_match,
    )


def steane_equivalence_check(code: StabilizerCode) -> bool:
    """True iff the epilogue turns ``code`` into the standard seven-qubit
    code, including the intermediate all-Y logical-Z stage."""
    return steane_equivalence_report(code).ok


def five_qubit_equivalence_check(code: StabilizerCode) -> bool:
    """True iff a five-qubit code matches the built-in initial table as a
    group (signs ignored)."""
    if code.n != 5:
        raise ValueError(f"expected a 5-qubit code, got n={code.n}")
    return groups_equal(code, five_qubit_code())


def epilogue_item_to_text(item: EpilogueOp) -> str:
    return item.to_text()


def export_circuit_lines(plan: ConversionPlan) -> list[str]:
    """Line-oriented circuit text: one gate per line; non-gate epilogue
    items appear as comments."""
    lines = [op.to_text() for step in plan.steps for op in step.ops]
    for item in plan.epilogue:
        if isinstance(item, RemoveQubit):
            lines.append(f"# remove qubit {item.qubit}")
        elif isinstance(item, PermuteQubits):
            lines.append("# relabel qubits, new<-old: " + ",".join(str(p) for p in item.perm))
        else:
            lines.append(item.to_text())
    return lines


def plan_to_json_dict(plan: ConversionPlan) -> dict:
    return {
        "initial": plan.initial_code.to_json_dict(),
        "steps": [
            {
                "ops": [op.to_text() for op in step.ops],
                "expected": step.expected_code.to_json_dict(),
                "pair": list(step.check_pair) if step.check_pair else None,
            }
            for step in plan.steps
        ],
        "epilogue": [epilogue_item_to_text(item) for item in plan.epilogue],
    }


def plan_from_json_dict(data: dict) -> ConversionPlan:
    steps = tuple(
        ConversionStep(
            ops=tuple(GateOp.from_text(t) for t in rec["ops"]),
            expected_code=StabilizerCode.from_json_dict(rec["expected"]),
            check_pair=tuple(rec["pair"]) if rec.get("pair") else None,
        )
        for rec in data["steps"]
    )
    return ConversionPlan(
        initial_code=StabilizerCode.from_json_dict(data["initial"]),
        steps=steps,
        epilogue=tuple(parse_epilogue_item(t) for t in data.get("epilogue", [])),
    )
