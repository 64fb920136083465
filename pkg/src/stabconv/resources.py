"""Resource accounting: minimum-max-weight generating sets, ancilla
requirements for fault-tolerant syndrome measurement, and gate censuses.

Measuring a weight-w stabilizer with a verified cat state needs w ancilla
qubits plus one, so the ancilla requirement follows the largest generator
weight after the generating set has been optimised to make that maximum
as small as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .convert import ConversionPlan, RemoveQubit, PermuteQubits
from .pauli import PauliOperator
from .tableau import StabilizerCode

_EXHAUSTIVE_LIMIT = 20


def _vector_weight(vec: int, n: int) -> int:
    return ((vec | (vec >> n)) & ((1 << n) - 1)).bit_count()


def min_max_weight_generators(
    code: StabilizerCode,
) -> tuple[tuple[PauliOperator, ...], int]:
    """Generating set of the full group minimising the largest weight.

    Enumerates every nontrivial group element, then greedily collects an
    independent set in ascending weight order; exchange across the GF(2)
    matroid makes the greedy choice optimal for the max-weight objective.
    """
    gens = code.generators
    g = len(gens)
    if g > _EXHAUSTIVE_LIMIT:
        raise ValueError(f"{g} generators exceed the exhaustive limit {_EXHAUSTIVE_LIMIT}")
    vectors = [gen.symplectic for gen in gens]

    elements: list[tuple[int, int, int]] = []
    acc = 0
    for i in range(1, 1 << g):
        acc ^= vectors[(i & -i).bit_length() - 1]
        mask = i ^ (i >> 1)
        elements.append((_vector_weight(acc, code.n), acc, mask))
    elements.sort()

    pivots: list[int] = []
    chosen_masks: list[int] = []
    max_weight = 0
    for weight, vec, mask in elements:
        residual = vec
        for p in pivots:
            if residual & (p & -p):
                residual ^= p
        if residual == 0:
            continue
        pivots.append(residual)
        chosen_masks.append(mask)
        max_weight = weight
        if len(chosen_masks) == g:
            break

    chosen: list[PauliOperator] = []
    for mask in chosen_masks:
        product = PauliOperator.identity(code.n)
        for idx in range(g):
            if mask >> idx & 1:
                product = product * gens[idx]
        chosen.append(product)
    return tuple(chosen), max_weight


@dataclass(frozen=True)
class StepWeightReport:
    step_index: int
    listed_max_weight: int
    reduced_max_weight: int


@dataclass(frozen=True)
class GateCensus:
    cz: int
    hadamard: int
    x_rot: int
    z_rot: int


@dataclass(frozen=True)
class ResourceReport:
    steps: tuple[StepWeightReport, ...]
    max_weight: int
    data_qubits: int
    ancilla_qubits: int
    total_qubits: int
    census: GateCensus
    cz_listed: int
    cz_quoted: Optional[int]
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "steps": [
                {
                    "step": s.step_index,
                    "listed_max_weight": s.listed_max_weight,
                    "reduced_max_weight": s.reduced_max_weight,
                }
                for s in self.steps
            ],
            "max_weight": self.max_weight,
            "data_qubits": self.data_qubits,
            "ancilla_qubits": self.ancilla_qubits,
            "total_qubits": self.total_qubits,
            "census": {
                "cz": self.census.cz,
                "hadamard": self.census.hadamard,
                "x_rot": self.census.x_rot,
                "z_rot": self.census.z_rot,
            },
            "cz_listed": self.cz_listed,
            "cz_quoted": self.cz_quoted,
            "notes": list(self.notes),
        }


def resource_report(plan: ConversionPlan) -> ResourceReport:
    """Weight, qubit, and gate-count accounting for a conversion plan.

    Reports both the largest generator weight as listed in each step table
    and the largest weight after minimisation, so weight-8 listed rows are
    directly inspectable next to their weight-6 replacements.
    """
    steps = []
    overall = 0
    for index, step in enumerate(plan.steps, start=1):
        listed = max(g.weight for g in step.expected_code.generators)
        _, reduced = min_max_weight_generators(step.expected_code)
        steps.append(
            StepWeightReport(
                step_index=index, listed_max_weight=listed, reduced_max_weight=reduced
            )
        )
        overall = max(overall, reduced)

    counts = {"CZ": 0, "H": 0, "XROT": 0, "ZROT": 0}
    for step in plan.steps:
        for op in step.ops:
            counts[op.kind] += 1
    for item in plan.epilogue:
        if isinstance(item, (RemoveQubit, PermuteQubits)):
            continue
        counts[item.kind] += 1

    ancilla = overall + 1
    return ResourceReport(
        steps=tuple(steps),
        max_weight=overall,
        data_qubits=plan.width,
        ancilla_qubits=ancilla,
        total_qubits=plan.width + ancilla,
        census=GateCensus(
            cz=counts["CZ"],
            hadamard=counts["H"],
            x_rot=counts["XROT"],
            z_rot=counts["ZROT"],
        ),
        cz_listed=plan.cz_count,
        cz_quoted=plan.quoted_cz_count,
        notes=plan.notes,
    )
