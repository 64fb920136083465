"""Exact n-qubit Pauli group arithmetic in the binary-symplectic picture.

An operator is stored as two bit-packed integers plus a phase exponent:

    P = i**phase * prod_q X_q**x_q * Z_q**z_q

where bit q of ``x_bits``/``z_bits`` is the X/Z component on qubit q.
With this convention Y = i*X*Z, so the single-qubit letters map to
(x, z, phase): I=(0,0,0), X=(1,0,0), Z=(0,1,0), Y=(1,1,1).

Bit-packed ints keep products, commutation checks and GF(2) reductions
to a handful of word operations and make operators hashable values.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTER_FROM_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_FROM_LETTER = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}

# phase exponent of i -> printable prefix ("" means +1)
_PREFIX_FROM_PHASE = {0: "", 1: "+i", 2: "-", 3: "-i"}


@dataclass(frozen=True, repr=False)
class PauliOperator:
    """Immutable n-qubit Pauli operator with an exact power-of-i phase."""

    n: int
    x_bits: int
    z_bits: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("operator must act on at least one qubit")
        mask = (1 << self.n) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise ValueError(f"bit vectors exceed {self.n} qubits")
        if not 0 <= self.phase < 4:
            object.__setattr__(self, "phase", self.phase % 4)

    # ---- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        """Letter from {I,X,Y,Z} on one qubit, identity elsewhere."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        try:
            x, z = _BITS_FROM_LETTER[letter]
        except KeyError:
            raise ValueError(f"unknown Pauli letter {letter!r}") from None
        phase = 1 if letter == "Y" else 0
        return cls(n, x << qubit, z << qubit, phase)

    @classmethod
    def from_string(cls, s: str) -> PauliOperator:
        """Parse a Pauli string: optional sign prefix (+, -, +i, -i), then
        one character per qubit from {I,X,Y,Z}; whitespace is ignored.
        """
        pos = 0
        end = len(s)
        while pos < end and s[pos].isspace():
            pos += 1
        phase = 0
        if pos < end and s[pos] in "+-":
            negative = s[pos] == "-"
            pos += 1
            imag = pos < end and s[pos] == "i"
            if imag:
                pos += 1
            phase = (2 if negative else 0) + (1 if imag else 0)
        x_bits = 0
        z_bits = 0
        qubits = 0
        for idx in range(pos, end):
            ch = s[idx]
            if ch.isspace():
                continue
            bits = _BITS_FROM_LETTER.get(ch)
            if bits is None:
                raise ValueError(f"invalid Pauli character {ch!r} at index {idx}")
            x_bits |= bits[0] << qubits
            z_bits |= bits[1] << qubits
            if ch == "Y":
                phase += 1
            qubits += 1
        if qubits == 0:
            raise ValueError("empty Pauli string")
        return cls(qubits, x_bits, z_bits, phase % 4)

    # ---- rendering -----------------------------------------------------

    def letter(self, qubit: int) -> str:
        if not 0 <= qubit < self.n:
            raise ValueError(f"qubit {qubit} out of range for n={self.n}")
        return _LETTER_FROM_BITS[(self.x_bits >> qubit & 1, self.z_bits >> qubit & 1)]

    def to_string(self, spaced: bool = False) -> str:
        """Canonical string form; round-trips through :meth:`from_string`."""
        letters = [self.letter(q) for q in range(self.n)]
        sign_exp = (self.phase - letters.count("Y")) % 4
        body = (" " if spaced else "").join(letters)
        return _PREFIX_FROM_PHASE[sign_exp] + body

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"PauliOperator({self.to_string()!r})"

    # ---- group algebra -------------------------------------------------

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"operator sizes differ: {self.n} != {other.n}")
        # moving Z**a past X**b picks up (-1)**(a&b)
        phase = (self.phase + other.phase + 2 * (self.z_bits & other.x_bits).bit_count()) % 4
        return PauliOperator(self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits, phase)

    def commutes_with(self, other: PauliOperator) -> bool:
        """True iff the operators commute (mod-2 symplectic inner product is 0)."""
        if self.n != other.n:
            raise ValueError(f"operator sizes differ: {self.n} != {other.n}")
        return ((self.x_bits & other.z_bits).bit_count() + (self.z_bits & other.x_bits).bit_count()) % 2 == 0

    @property
    def weight(self) -> int:
        """Number of qubits on which the operator is not identity."""
        return (self.x_bits | self.z_bits).bit_count()

    def is_identity(self, up_to_phase: bool = False) -> bool:
        trivial = self.x_bits == 0 and self.z_bits == 0
        return trivial if up_to_phase else trivial and self.phase == 0

    def equal_up_to_phase(self, other: PauliOperator) -> bool:
        return self.n == other.n and self.x_bits == other.x_bits and self.z_bits == other.z_bits

    # ---- symplectic vector view -----------------------------------------

    @property
    def symplectic(self) -> int:
        """Bit-packed GF(2) vector: x components first, then z components."""
        return self.x_bits | (self.z_bits << self.n)

    @classmethod
    def from_symplectic(cls, n: int, vector: int, phase: int = 0) -> PauliOperator:
        mask = (1 << n) - 1
        return cls(n, vector & mask, (vector >> n) & mask, phase)
