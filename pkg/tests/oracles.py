"""Independent test oracles: dense matrices, letter-counting commutation,
exhaustive group enumeration, and brute-force correctability.

Everything here deliberately avoids the package's bit-vector paths so the
two implementations can check each other.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from stabconv.pauli import PauliOperator
from stabconv.tableau import GateOp, StabilizerCode, apply_gate, permute_qubits

MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
PHASES = {0: 1, 1: 1j, 2: -1, 3: -1j}


def pauli_matrix(p: PauliOperator) -> np.ndarray:
    """Dense matrix with qubit 0 as the leftmost tensor factor."""
    letters = [p.letter(q) for q in range(p.n)]
    m = np.array([[1]], dtype=complex)
    for letter in letters:
        m = np.kron(m, MATRICES[letter])
    sign_exp = (p.phase - letters.count("Y")) % 4
    return PHASES[sign_exp] * m


def gate_matrix(gate: GateOp, n: int) -> np.ndarray:
    """Dense unitary for a gate on n qubits (qubit 0 = most significant bit)."""
    if gate.kind == "CZ":
        i, j = gate.qubits
        diag = np.ones(2**n, dtype=complex)
        for b in range(2**n):
            if (b >> (n - 1 - i)) & 1 and (b >> (n - 1 - j)) & 1:
                diag[b] = -1
        return np.diag(diag)
    q = gate.qubits[0]
    if gate.kind == "H":
        local = (MATRICES["X"] + MATRICES["Z"]) / np.sqrt(2)
    else:
        axis = MATRICES["X"] if gate.kind == "XROT" else MATRICES["Z"]
        local = (np.eye(2) - 1j * gate.sign * axis) / np.sqrt(2)
    m = np.array([[1]], dtype=complex)
    for pos in range(n):
        m = np.kron(m, local if pos == q else np.eye(2))
    return m


def conjugate_dense(p: PauliOperator, gate: GateOp) -> np.ndarray:
    u = gate_matrix(gate, p.n)
    return u @ pauli_matrix(p) @ u.conj().T


def anticommuting_positions(a: str, b: str) -> int:
    """Count positions where two Pauli strings carry different non-identity
    letters."""
    return sum(1 for x, y in zip(a, b) if x != "I" and y != "I" and x != y)


def _letters(p: PauliOperator) -> str:
    return "".join(p.letter(q) for q in range(p.n))


def commute_by_counting(a: PauliOperator, b: PauliOperator) -> bool:
    return anticommuting_positions(_letters(a), _letters(b)) % 2 == 0


def syndrome_by_counting(code: StabilizerCode, error: PauliOperator) -> tuple[int, ...]:
    return tuple(0 if commute_by_counting(g, error) else 1 for g in code.generators)


def group_vectors_exhaustive(code: StabilizerCode) -> set[tuple[int, int]]:
    """All (x, z) bit-vector pairs of the stabilizer group, by explicit
    closure over generator subsets."""
    vectors = set()
    gens = code.generators
    for picks in itertools.product((0, 1), repeat=len(gens)):
        x = 0
        z = 0
        for bit, g in zip(picks, gens):
            if bit:
                x ^= g.x_bits
                z ^= g.z_bits
        vectors.add((x, z))
    return vectors


def brute_force_correctable(code: StabilizerCode, errors) -> tuple[bool, tuple | None]:
    """Reference correctability check: bucket every error by its
    counting-oracle syndrome and compare same-bucket pairs against the
    exhaustively enumerated group."""
    group = group_vectors_exhaustive(code)
    buckets: dict[tuple[int, ...], list[PauliOperator]] = {}
    for e in errors:
        buckets.setdefault(syndrome_by_counting(code, e), []).append(e)
    for bucket in buckets.values():
        for e, f in itertools.combinations(bucket, 2):
            if (e.x_bits ^ f.x_bits, e.z_bits ^ f.z_bits) not in group:
                return False, (e, f)
    return True, None


def random_valid_code(n: int, rng: random.Random, gate_count: int = 40) -> StabilizerCode:
    """Random code built by conjugating a trivial one-logical-qubit code
    through a random Clifford circuit and a random relabeling."""
    gens = tuple(PauliOperator.single(n, q, "Z") for q in range(1, n))
    code = StabilizerCode(
        n, gens, PauliOperator.single(n, 0, "X"), PauliOperator.single(n, 0, "Z")
    )
    for _ in range(gate_count):
        kind = rng.choice(["CZ", "H", "XROT", "ZROT"])
        if kind == "CZ" and n >= 2:
            i, j = rng.sample(range(n), 2)
            code = apply_gate(code, GateOp.cz(i, j))
        elif kind == "H":
            code = apply_gate(code, GateOp.h(rng.randrange(n)))
        else:
            code = apply_gate(code, GateOp(kind, (rng.randrange(n),), rng.choice([1, -1])))
    perm = list(range(n))
    rng.shuffle(perm)
    return permute_qubits(code, perm)


def random_pauli(n: int, rng: random.Random) -> PauliOperator:
    return PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))
