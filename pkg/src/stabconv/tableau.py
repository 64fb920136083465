"""Stabilizer codes with logical operators, Clifford conjugation, and GF(2)
group membership.

A :class:`StabilizerCode` is an immutable value: generators plus a logical
X/Z pair for one encoded qubit.  The same type with ``logical_x`` and
``logical_z`` set to ``None`` represents a stabilizer *state* (n generators,
nothing encoded), which the search machinery uses.

Gate conjugation follows the rotation convention R_A(theta) = exp(-i*theta*A/2);
a "+90" rotation means theta = +pi/2.  Conjugation images, exact phases
included:

    CZ(i,j):  X_i -> X_i Z_j,  X_j -> Z_i X_j,  Z fixed
    H(q):     X <-> Z, Y -> -Y
    XROT +90: Z -> -Y, Y -> Z      XROT -90: Z -> Y,  Y -> -Z
    ZROT +90: X -> Y,  Y -> -X     ZROT -90: X -> -Y, Y -> X
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gf2 import LinearSpan
from .pauli import PauliOperator

_GATE_KINDS = {"CZ": 2, "H": 1, "XROT": 1, "ZROT": 1}


@dataclass(frozen=True)
class GateOp:
    """One Clifford operation: CZ, H, or a +-90 degree X/Z rotation."""

    kind: str
    qubits: tuple[int, ...]
    sign: int = 1

    def __post_init__(self) -> None:
        arity = _GATE_KINDS.get(self.kind)
        if arity is None:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} qubit(s), got {self.qubits}")
        if self.kind == "CZ" and self.qubits[0] == self.qubits[1]:
            raise ValueError("CZ requires two distinct qubits")
        if any(q < 0 for q in self.qubits):
            raise ValueError("qubit indices must be non-negative")
        if self.sign not in (1, -1):
            raise ValueError("rotation sign must be +1 or -1")

    @classmethod
    def cz(cls, i: int, j: int) -> GateOp:
        return cls("CZ", (i, j))

    @classmethod
    def h(cls, q: int) -> GateOp:
        return cls("H", (q,))

    @classmethod
    def xrot(cls, q: int, sign: int = 1) -> GateOp:
        return cls("XROT", (q,), sign)

    @classmethod
    def zrot(cls, q: int, sign: int = 1) -> GateOp:
        return cls("ZROT", (q,), sign)

    def inverse(self) -> GateOp:
        if self.kind in ("CZ", "H"):
            return self
        return GateOp(self.kind, self.qubits, -self.sign)

    def to_text(self) -> str:
        """Line format: "CZ i j", "H i", "XROT i +90|-90", "ZROT i +90|-90"."""
        if self.kind == "CZ":
            return f"CZ {self.qubits[0]} {self.qubits[1]}"
        if self.kind == "H":
            return f"H {self.qubits[0]}"
        angle = "+90" if self.sign > 0 else "-90"
        return f"{self.kind} {self.qubits[0]} {angle}"

    @classmethod
    def from_text(cls, line: str) -> GateOp:
        parts = line.split()
        if not parts:
            raise ValueError("empty gate line")
        kind = parts[0].upper()
        try:
            if kind == "CZ":
                if len(parts) != 3:
                    raise ValueError
                return cls.cz(int(parts[1]), int(parts[2]))
            if kind == "H":
                if len(parts) != 2:
                    raise ValueError
                return cls.h(int(parts[1]))
            if kind in ("XROT", "ZROT"):
                if len(parts) != 3 or parts[2] not in ("+90", "-90"):
                    raise ValueError
                return cls(kind, (int(parts[1]),), 1 if parts[2] == "+90" else -1)
        except ValueError:
            pass
        raise ValueError(f"cannot parse gate line {line!r}")


def conjugate_pauli(p: PauliOperator, gate: GateOp) -> PauliOperator:
    """Image of ``p`` under conjugation by ``gate``, phase exact."""
    if any(q >= p.n for q in gate.qubits):
        raise ValueError(f"gate {gate.to_text()!r} out of range for n={p.n}")
    x, z, phase = p.x_bits, p.z_bits, p.phase
    if gate.kind == "CZ":
        i, j = gate.qubits
        xi, xj = x >> i & 1, x >> j & 1
        phase += 2 * (xi & xj)
        z ^= (xj << i) | (xi << j)
    elif gate.kind == "H":
        q = gate.qubits[0]
        xq, zq = x >> q & 1, z >> q & 1
        phase += 2 * (xq & zq)
        x ^= (xq ^ zq) << q
        z ^= (xq ^ zq) << q
    elif gate.kind == "XROT":
        q = gate.qubits[0]
        zq = z >> q & 1
        phase += (3 if gate.sign > 0 else 1) * zq
        x ^= zq << q
    else:  # ZROT
        q = gate.qubits[0]
        xq = x >> q & 1
        phase += (1 if gate.sign > 0 else 3) * xq
        z ^= xq << q
    return PauliOperator(p.n, x, z, phase % 4)


@dataclass(frozen=True)
class StabilizerCode:
    """Generators plus logical X/Z operators on n qubits (logicals ``None``
    for a stabilizer state)."""

    n: int
    generators: tuple[PauliOperator, ...]
    logical_x: Optional[PauliOperator] = None
    logical_z: Optional[PauliOperator] = None

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} does not act on {self.n} qubits")
        if (self.logical_x is None) != (self.logical_z is None):
            raise ValueError("logical_x and logical_z must be both present or both absent")
        for l in (self.logical_x, self.logical_z):
            if l is not None and l.n != self.n:
                raise ValueError(f"logical operator {l} does not act on {self.n} qubits")

    @property
    def is_state(self) -> bool:
        return self.logical_x is None

    @property
    def logicals(self) -> tuple[PauliOperator, ...]:
        if self.is_state:
            return ()
        return (self.logical_x, self.logical_z)

    @classmethod
    def from_strings(
        cls,
        generators: Iterable[str],
        logical_x: str | None = None,
        logical_z: str | None = None,
    ) -> StabilizerCode:
        gens = tuple(PauliOperator.from_string(s) for s in generators)
        if not gens:
            raise ValueError("at least one generator required")
        lx = PauliOperator.from_string(logical_x) if logical_x is not None else None
        lz = PauliOperator.from_string(logical_z) if logical_z is not None else None
        return cls(gens[0].n, gens, lx, lz)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": [g.to_string() for g in self.generators],
            "logical_x": self.logical_x.to_string() if self.logical_x else None,
            "logical_z": self.logical_z.to_string() if self.logical_z else None,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> StabilizerCode:
        gens = tuple(PauliOperator.from_string(s) for s in data["generators"])
        lx = data.get("logical_x")
        lz = data.get("logical_z")
        code = cls(
            int(data["n"]),
            gens,
            PauliOperator.from_string(lx) if lx else None,
            PauliOperator.from_string(lz) if lz else None,
        )
        return code

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> StabilizerCode:
        return cls.from_json_dict(json.loads(text))


def apply_gate(code: StabilizerCode, gate: GateOp) -> StabilizerCode:
    """Conjugate every generator and both logicals by ``gate``."""
    if any(q >= code.n for q in gate.qubits):
        raise ValueError(f"gate {gate.to_text()!r} out of range for n={code.n}")
    return StabilizerCode(
        code.n,
        tuple(conjugate_pauli(g, gate) for g in code.generators),
        conjugate_pauli(code.logical_x, gate) if code.logical_x else None,
        conjugate_pauli(code.logical_z, gate) if code.logical_z else None,
    )


def apply_ops(code: StabilizerCode, ops: Iterable[GateOp]) -> StabilizerCode:
    for gate in ops:
        code = apply_gate(code, gate)
    return code


def generator_span(code: StabilizerCode) -> LinearSpan:
    return LinearSpan([g.symplectic for g in code.generators])


def group_member(
    code: StabilizerCode, p: PauliOperator, phase_exact: bool = False
) -> tuple[int, ...] | None:
    """GF(2) combination of generators whose product equals ``p``
    (up to phase unless ``phase_exact``), or None."""
    if p.n != code.n:
        raise ValueError(f"operator size {p.n} does not match code size {code.n}")
    combo = generator_span(code).combination_for(p.symplectic)
    if combo is None:
        return None
    bits = tuple((combo >> i) & 1 for i in range(len(code.generators)))
    if phase_exact:
        product = PauliOperator.identity(code.n)
        for bit, g in zip(bits, code.generators):
            if bit:
                product = product * g
        if product.phase != p.phase:
            return None
    return bits


def _logicals_agree(
    a: StabilizerCode, b: StabilizerCode, span: LinearSpan, phase_exact: bool
) -> bool:
    """Logical operators of a and b agree modulo b's stabilizer group."""
    for la, lb in ((a.logical_x, b.logical_x), (a.logical_z, b.logical_z)):
        diff = la * lb
        if not span.contains(diff.symplectic):
            return False
        if phase_exact and group_member(b, diff, phase_exact=True) is None:
            return False
    return True


def groups_equal(a: StabilizerCode, b: StabilizerCode, phase_exact: bool = False) -> bool:
    """True iff a and b generate the same stabilizer group and (for codes)
    their logical operators agree modulo that group."""
    if a.n != b.n or a.is_state != b.is_state:
        return False
    span_a = generator_span(a)
    span_b = generator_span(b)
    if span_a.rank != span_b.rank:
        return False
    for g in a.generators:
        if not span_b.contains(g.symplectic):
            return False
    for g in b.generators:
        if not span_a.contains(g.symplectic):
            return False
    if phase_exact:
        for g in a.generators:
            if group_member(b, g, phase_exact=True) is None:
                return False
        for g in b.generators:
            if group_member(a, g, phase_exact=True) is None:
                return False
    if not a.is_state and not _logicals_agree(a, b, span_b, phase_exact):
        return False
    return True


def add_ancilla_plus(code: StabilizerCode, count: int) -> StabilizerCode:
    """Append ``count`` qubits in the |+> state: one new X generator each,
    everything else extended by identity."""
    if count < 0:
        raise ValueError("ancilla count must be non-negative")
    if count == 0:
        return code
    n = code.n + count

    def extend(p: PauliOperator) -> PauliOperator:
        return PauliOperator(n, p.x_bits, p.z_bits, p.phase)

    new_gens = [extend(g) for g in code.generators]
    new_gens.extend(PauliOperator.single(n, code.n + k, "X") for k in range(count))
    return StabilizerCode(
        n,
        tuple(new_gens),
        extend(code.logical_x) if code.logical_x else None,
        extend(code.logical_z) if code.logical_z else None,
    )


def remove_unentangled_qubit(code: StabilizerCode, qubit: int) -> StabilizerCode:
    """Delete a qubit stabilized by a singleton X or Z generator.

    Other generators acting on the qubit with the same letter are re-based
    by multiplying the singleton in; any remaining support on the qubit
    means it is entangled and removal fails.
    """
    if not 0 <= qubit < code.n:
        raise ValueError(f"qubit {qubit} out of range for n={code.n}")
    mask = 1 << qubit
    singleton_idx = None
    for idx, g in enumerate(code.generators):
        if (g.x_bits | g.z_bits) == mask:
            singleton_idx = idx
            break
    if singleton_idx is None:
        raise ValueError(f"qubit {qubit} is entangled: no singleton generator on it")
    singleton = code.generators[singleton_idx]
    single_is_x = bool(singleton.x_bits & mask) and not singleton.z_bits & mask
    single_is_z = bool(singleton.z_bits & mask) and not singleton.x_bits & mask
    if not (single_is_x or single_is_z):
        raise ValueError(f"qubit {qubit} is entangled: singleton generator is Y-type")

    def rebase(p: PauliOperator) -> PauliOperator:
        same_letter = (p.x_bits & mask) if single_is_x else (p.z_bits & mask)
        if same_letter:
            p = p * singleton
        if (p.x_bits | p.z_bits) & mask:
            raise ValueError(f"qubit {qubit} is entangled")
        return p

    low = mask - 1

    def drop_column(p: PauliOperator) -> PauliOperator:
        x = (p.x_bits & low) | ((p.x_bits >> 1) & ~low)
        z = (p.z_bits & low) | ((p.z_bits >> 1) & ~low)
        return PauliOperator(code.n - 1, x, z, p.phase)

    new_gens = []
    for idx, g in enumerate(code.generators):
        if idx == singleton_idx:
            continue
        new_gens.append(drop_column(rebase(g)))
    lx = drop_column(rebase(code.logical_x)) if code.logical_x else None
    lz = drop_column(rebase(code.logical_z)) if code.logical_z else None
    return StabilizerCode(code.n - 1, tuple(new_gens), lx, lz)


def permute_qubits(code: StabilizerCode, perm: Sequence[int]) -> StabilizerCode:
    """Relabel qubits: new qubit i carries what old qubit perm[i] carried."""
    if sorted(perm) != list(range(code.n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{code.n - 1}")

    def apply(p: PauliOperator) -> PauliOperator:
        x = 0
        z = 0
        for new, old in enumerate(perm):
            x |= ((p.x_bits >> old) & 1) << new
            z |= ((p.z_bits >> old) & 1) << new
        return PauliOperator(code.n, x, z, p.phase)

    return StabilizerCode(
        code.n,
        tuple(apply(g) for g in code.generators),
        apply(code.logical_x) if code.logical_x else None,
        apply(code.logical_z) if code.logical_z else None,
    )


@dataclass(frozen=True)
class TableauReport:
    """Outcome of the structural checks on a StabilizerCode."""

    generators_commute: bool
    independent: bool
    generator_count_ok: bool
    logicals_commute_with_group: Optional[bool]
    logicals_anticommute: Optional[bool]
    problems: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.problems


def check_valid_tableau(code: StabilizerCode) -> TableauReport:
    """Verify commutation, GF(2) independence, generator count, and the
    logical commutation/anticommutation structure."""
    problems: list[str] = []
    gens = code.generators

    commute = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes_with(gens[j]):
                commute = False
                problems.append(f"generators {i} and {j} anticommute")
    span = generator_span(code)
    independent = span.rank == len(gens)
    if not independent:
        problems.append("generators are dependent over GF(2)")

    expected = code.n if code.is_state else code.n - 1
    count_ok = len(gens) == expected
    if not count_ok:
        problems.append(f"expected {expected} generators, found {len(gens)}")

    logicals_commute: Optional[bool] = None
    logicals_anti: Optional[bool] = None
    if not code.is_state:
        logicals_commute = True
        for name, l in (("logical_x", code.logical_x), ("logical_z", code.logical_z)):
            for i, g in enumerate(gens):
                if not l.commutes_with(g):
                    logicals_commute = False
                    problems.append(f"{name} anticommutes with generator {i}")
            if span.contains(l.symplectic):
                logicals_commute = False
                problems.append(f"{name} lies inside the stabilizer group")
        logicals_anti = not code.logical_x.commutes_with(code.logical_z)
        if not logicals_anti:
            problems.append("logical_x and logical_z do not anticommute")

    return TableauReport(
        generators_commute=commute,
        independent=independent,
        generator_count_ok=count_ok,
        logicals_commute_with_group=logicals_commute,
        logicals_anticommute=logicals_anti,
        problems=tuple(problems),
    )
