"""Correctability checks: every pair of distinct errors must produce
distinct syndromes, where errors whose product lies in the stabilizer
group count as the same error.

Including the identity in every error set means an undetected logical
error (zero syndrome, not a stabilizer) surfaces as a collision with
the identity.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .gf2 import LinearSpan
from .pauli import PauliOperator
from .tableau import StabilizerCode

Syndrome = tuple[int, ...]

_SINGLE_LETTERS = ("X", "Y", "Z")


def syndrome(code: StabilizerCode, error: PauliOperator) -> Syndrome:
    """One bit per generator; 1 where the error anticommutes."""
    if error.n != code.n:
        raise ValueError(f"error size {error.n} does not match code size {code.n}")
    return tuple(0 if g.commutes_with(error) else 1 for g in code.generators)


@dataclass(frozen=True)
class ErrorSet:
    """Deduplicated error list (always containing the identity) plus a
    description of where it came from."""

    errors: tuple[PauliOperator, ...]
    description: str

    def __len__(self) -> int:
        return len(self.errors)


def enumerate_errors(n: int, pair: tuple[int, int] | None = None) -> ErrorSet:
    """Identity + the 3n single-qubit errors; with ``pair`` (i, j) also the
    nine two-qubit errors acting on both i and j."""
    errors: list[PauliOperator] = [PauliOperator.identity(n)]
    for q in range(n):
        for letter in _SINGLE_LETTERS:
            errors.append(PauliOperator.single(n, q, letter))
    description = f"single-qubit sweep on {n} qubits"
    if pair is not None:
        i, j = pair
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"invalid qubit pair {pair!r} for n={n}")
        for a in _SINGLE_LETTERS:
            for b in _SINGLE_LETTERS:
                errors.append(PauliOperator.single(n, i, a) * PauliOperator.single(n, j, b))
        description += f" + two-qubit errors on ({i},{j})"
    seen: set[PauliOperator] = set()
    unique = []
    for e in errors:
        if e not in seen:
            seen.add(e)
            unique.append(e)
    return ErrorSet(tuple(unique), description)


@dataclass(frozen=True)
class ValidityReport:
    """Result of a correctability check: valid, or a witness pair of
    errors sharing a syndrome whose product is outside the group."""

    valid: bool
    witness: Optional[tuple[PauliOperator, PauliOperator]]
    checked: int

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "witness": [w.to_string() for w in self.witness] if self.witness else None,
            "checked": self.checked,
        }


def _scan_bucket(
    bucket: list[PauliOperator], span: LinearSpan
) -> tuple[int, Optional[tuple[PauliOperator, PauliOperator]]]:
    checked = 0
    for e, f in itertools.combinations(bucket, 2):
        checked += 1
        if not span.contains(e.symplectic ^ f.symplectic):
            return checked, (e, f)
    return checked, None


def verify_correctable(
    code: StabilizerCode, error_set: ErrorSet, workers: int = 1
) -> ValidityReport:
    """Group errors by syndrome; any same-syndrome pair must differ by a
    stabilizer element (phase-insensitive).  ``checked`` counts the pairs
    compared."""
    for e in error_set.errors:
        if e.n != code.n:
            raise ValueError(f"error {e} does not act on {code.n} qubits")
    span = LinearSpan([g.symplectic for g in code.generators])
    buckets: dict[Syndrome, list[PauliOperator]] = {}
    for e in error_set.errors:
        buckets.setdefault(syndrome(code, e), []).append(e)
    crowded = [b for b in buckets.values() if len(b) > 1]

    checked = 0
    witness: Optional[tuple[PauliOperator, PauliOperator]] = None
    if workers > 1 and len(crowded) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for count, found in pool.map(lambda b: _scan_bucket(b, span), crowded):
                checked += count
                if found is not None and witness is None:
                    witness = found
    else:
        for bucket in crowded:
            count, found = _scan_bucket(bucket, span)
            checked += count
            if found is not None:
                witness = found
                break
    return ValidityReport(valid=witness is None, witness=witness, checked=checked)
