"""Stabilizer-code toolkit: exact Pauli algebra, correctability
verification, fault-tolerant code-conversion replay, and minimal-CZ
path search between code families."""

from .pauli import PauliOperator
from .tableau import (
    GateOp,
    StabilizerCode,
    TableauReport,
    add_ancilla_plus,
    apply_gate,
    apply_ops,
    check_valid_tableau,
    conjugate_pauli,
    group_member,
    groups_equal,
    permute_qubits,
    remove_unentangled_qubit,
)
from .verify import (
    ErrorSet,
    Syndrome,
    ValidityReport,
    enumerate_errors,
    syndrome,
    verify_correctable,
)
from .convert import (
    ConversionPlan,
    ConversionStep,
    FaultToleranceError,
    StepDivergenceError,
    SteaneEquivalenceReport,
    builtin_plan,
    execute_plan,
    execute_reverse,
    five_qubit_code,
    five_qubit_equivalence_check,
    steane_code,
    steane_equivalence_check,
    steane_equivalence_report,
)

__all__ = [
    "PauliOperator",
    "GateOp",
    "StabilizerCode",
    "TableauReport",
    "add_ancilla_plus",
    "apply_gate",
    "apply_ops",
    "check_valid_tableau",
    "conjugate_pauli",
    "group_member",
    "groups_equal",
    "permute_qubits",
    "remove_unentangled_qubit",
    "ErrorSet",
    "Syndrome",
    "ValidityReport",
    "enumerate_errors",
    "syndrome",
    "verify_correctable",
    "ConversionPlan",
    "ConversionStep",
    "FaultToleranceError",
    "StepDivergenceError",
    "SteaneEquivalenceReport",
    "builtin_plan",
    "execute_plan",
    "execute_reverse",
    "five_qubit_code",
    "five_qubit_equivalence_check",
    "steane_code",
    "steane_equivalence_check",
    "steane_equivalence_report",
]

__version__ = "0.1.0"
