"""GF(2) linear algebra on bit-packed integer row vectors.

Rows are Python ints; bit i is column i.  Elimination pivots run from
bit 0 upward, which for symplectic vectors means qubit-0 X-part first,
then the Z-part block, so reductions are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def rref(rows: list[int]) -> list[int]:
    """Reduced row-echelon form: unique for the row space, zero rows dropped,
    rows ordered by pivot column."""
    reduced: list[int] = []
    for row in rows:
        for p in reduced:
            if row & (p & -p):
                row ^= p
        if row:
            reduced.append(row)
            pivot = row & -row
            for i, p in enumerate(reduced[:-1]):
                if p & pivot:
                    reduced[i] = p ^ row
    reduced.sort(key=lambda r: r & -r)
    return reduced


def rank(rows: list[int]) -> int:
    return len(rref(rows))


@dataclass
class LinearSpan:
    """Echelonized span of bit-packed rows with membership and combination queries.

    ``combination_for`` reports which input rows XOR to a target vector,
    as a bit mask over the original row indices.
    """

    rows: list[int]
    _pivots: list[tuple[int, int, int]] = field(init=False, default_factory=list)

    def __post_init__(self) -> None:
        for index, row in enumerate(self.rows):
            marker = 1 << index
            row, marker = self._reduce(row, marker)
            if row:
                pivot = row & -row
                new_pivots = []
                for pbit, prow, pmark in self._pivots:
                    if prow & pivot:
                        prow ^= row
                        pmark ^= marker
                    new_pivots.append((pbit, prow, pmark))
                new_pivots.append((pivot, row, marker))
                new_pivots.sort(key=lambda t: t[0])
                self._pivots = new_pivots

    def _reduce(self, vector: int, marker: int = 0) -> tuple[int, int]:
        for pbit, prow, pmark in self._pivots:
            if vector & pbit:
                vector ^= prow
                marker ^= pmark
        return vector, marker

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def contains(self, vector: int) -> bool:
        residual, _ = self._reduce(vector)
        return residual == 0

    def reduce(self, vector: int) -> int:
        """Canonical coset representative of ``vector`` modulo the span."""
        residual, _ = self._reduce(vector)
        return residual

    def combination_for(self, vector: int) -> int | None:
        """Bit mask over input rows whose XOR equals ``vector``, or None."""
        residual, marker = self._reduce(vector)
        return None if residual else marker

    def basis(self) -> list[int]:
        return [row for _, row, _ in self._pivots]
