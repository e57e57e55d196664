"""n-qubit Pauli operators, their (z|x) binary form, and local Clifford conjugation.

A :class:`Pauli` is ``i**phase`` times a tensor product of the single-qubit
symbols I, X, Y, Z, where qubit ``j`` carries ``(z_j, x_j)`` = (0,0) I,
(0,1) X, (1,0) Z, (1,1) Y.  Indices are 0-based in code and 1-based in all
text (``"X2 Z3"`` acts on the second and third qubits).

Text grammar::

    dense   := sign? [IXYZ]{n}
    sparse  := sign? (([XYZ]) index)+      separated by whitespace
    sign    := "+" | "-" | "+i" | "-i" | "i"
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import gf2

_SIGNS = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_SIGN_TEXT = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SYMBOLS = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_FROM_BITS = {v: k for k, v in _SYMBOLS.items()}


class PauliError(ValueError):
    """Base class for malformed Pauli input."""


class BadSymbol(PauliError):
    pass


class LengthMismatch(PauliError):
    pass


class IndexOutOfRange(PauliError):
    pass


class DuplicateTarget(PauliError):
    pass


class Pauli:
    """Immutable Pauli operator ``i**phase * sigma(z, x)``."""

    __slots__ = ("phase", "z", "x")

    def __init__(self, z, x, phase: int = 0):
        z = gf2.as_bits(z).reshape(-1)
        x = gf2.as_bits(x).reshape(-1)
        if z.size != x.size:
            raise LengthMismatch(f"z has length {z.size} but x has length {x.size}")
        z.setflags(write=False)
        x.setflags(write=False)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "phase", int(phase) % 4)

    def __setattr__(self, name, value):
        raise AttributeError("Pauli is immutable")

    @property
    def n(self) -> int:
        return int(self.z.size)

    @classmethod
    def identity(cls, n: int) -> Pauli:
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @classmethod
    def from_symplectic(cls, vec, phase: int = 0) -> Pauli:
        """Build from a length-2n vector laid out as ``(z | x)``."""
        vec = gf2.as_bits(vec).reshape(-1)
        if vec.size % 2:
            raise LengthMismatch(f"symplectic vector has odd length {vec.size}")
        n = vec.size // 2
        return cls(vec[:n], vec[n:], phase)

    @classmethod
    def single(cls, symbol: str, qubit: int, n: int) -> Pauli:
        """``symbol`` on 0-based ``qubit`` and identity elsewhere."""
        if not 0 <= qubit < n:
            raise IndexOutOfRange(f"qubit {qubit + 1} outside 1..{n}")
        z = np.zeros(n, np.uint8)
        x = np.zeros(n, np.uint8)
        z[qubit], x[qubit] = _SYMBOLS[symbol]
        return cls(z, x)

    def symplectic(self) -> np.ndarray:
        """The phase-free ``(z | x)`` vector."""
        return np.concatenate([self.z, self.x])

    def stripped(self) -> Pauli:
        """Same operator with phase +1."""
        return Pauli(self.z, self.x)

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.z | self.x))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.z | self.x))

    def symbols(self) -> str:
        return "".join(_FROM_BITS[(int(a), int(b))] for a, b in zip(self.z, self.x))

    def __mul__(self, other: Pauli) -> Pauli:
        if self.n != other.n:
            raise LengthMismatch(f"cannot multiply {self.n}- and {other.n}-qubit Paulis")
        # sigma(z,x) = (-i)^(z.x) Z^z X^x, and X^b Z^c = (-1)^(b.c) Z^c X^b
        a_zx = int(np.dot(self.z, self.x))
        b_zx = int(np.dot(other.z, other.x))
        z = self.z ^ other.z
        x = self.x ^ other.x
        swap = int(np.dot(self.x, other.z))
        # Z^z X^x = i^(z.x) sigma(z,x)
        e = self.phase + other.phase - a_zx - b_zx + 2 * swap + int(np.dot(z, x))
        return Pauli(z, x, e)

    def commutes(self, other: Pauli) -> bool:
        return symplectic_product(self, other) == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pauli):
            return NotImplemented
        return (
            self.phase == other.phase
            and np.array_equal(self.z, other.z)
            and np.array_equal(self.x, other.x)
        )

    def __hash__(self) -> int:
        return hash((self.phase, self.z.tobytes(), self.x.tobytes()))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Pauli({to_text(self)!r})"

    def matrix(self) -> np.ndarray:
        """Dense ``2**n x 2**n`` matrix, qubit 1 as the most significant bit."""
        out = np.array([[1.0 + 0j]])
        for s in self.symbols():
            out = np.kron(out, _PAULI_MATS[s])
        return (1j**self.phase) * out


_PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_SIGN_RE = re.compile(r"^\s*(\+i|-i|i|\+|-)?\s*")
_SPARSE_TOKEN = re.compile(r"^([IXYZ])(\d+)$")


def parse_pauli(text: str, n: int) -> Pauli:
    """Parse a dense or sparse Pauli string on ``n`` qubits.

    >>> str(parse_pauli("X2 Y5", 6))
    '+IXIIYI'
    """
    m = _SIGN_RE.match(text)
    phase = _SIGNS[m.group(1) or ""]
    body = text[m.end():].strip()
    z = np.zeros(n, np.uint8)
    x = np.zeros(n, np.uint8)
    tokens = body.split()
    if body == "I" and n != 1:
        return Pauli(z, x, phase)
    if any(ch.isdigit() for ch in body):
        for tok in tokens:
            tm = _SPARSE_TOKEN.match(tok)
            if tm is None:
                raise BadSymbol(f"bad sparse Pauli token {tok!r} in {text!r}")
            q = int(tm.group(2)) - 1
            if not 0 <= q < n:
                raise IndexOutOfRange(f"qubit {q + 1} outside 1..{n} in {text!r}")
            bits = _SYMBOLS[tm.group(1)]
            if z[q] or x[q]:
                # repeated qubit: multiply in place
                p = Pauli(z, x, phase) * Pauli.single(tm.group(1), q, n)
                z, x, phase = p.z.copy(), p.x.copy(), p.phase
            else:
                z[q], x[q] = bits
        return Pauli(z, x, phase)
    dense = "".join(tokens)
    if len(dense) != n:
        raise LengthMismatch(f"{text!r} has {len(dense)} symbols, expected {n}")
    for j, ch in enumerate(dense):
        if ch not in _SYMBOLS:
            raise BadSymbol(f"unknown Pauli symbol {ch!r} in {text!r}")
        z[j], x[j] = _SYMBOLS[ch]
    return Pauli(z, x, phase)


def to_text(p: Pauli) -> str:
    """Dense text form with an explicit sign; inverse of :func:`parse_pauli`."""
    return _SIGN_TEXT[p.phase] + p.symbols()


def to_sparse_text(p: Pauli) -> str:
    """Sparse 1-based form such as ``-X2 Z3``; identity prints as ``I``."""
    sign = {0: "", 1: "i", 2: "-", 3: "-i"}[p.phase]
    parts = [f"{s}{j + 1}" for j, s in enumerate(p.symbols()) if s != "I"]
    return sign + (" ".join(parts) if parts else "I")


def symplectic_product(p: Pauli, q: Pauli) -> int:
    """``p.z . q.x + p.x . q.z`` mod 2; zero iff the operators commute."""
    if p.n != q.n:
        raise LengthMismatch(f"{p.n}-qubit and {q.n}-qubit operators")
    return int((np.dot(p.z, q.x) + np.dot(p.x, q.z)) & 1)


# --- Clifford gates -------------------------------------------------------

_S2 = 1 / np.sqrt(2)
GATES: dict[str, np.ndarray] = {
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "P": np.array([[1, 0], [0, 1j]], dtype=complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CP": np.diag([1, 1, 1, -1]).astype(complex),
}
GATE_ARITY = {"H": 1, "P": 1, "CNOT": 2, "CP": 2}


def _decompose(mat: np.ndarray, k: int) -> tuple[str, int]:
    """Write a ``k``-qubit matrix known to be a phased Pauli as (symbols, phase)."""
    for combo in np.ndindex(*(4,) * k):
        syms = "".join("IXYZ"[c] for c in combo)
        ref = Pauli.from_symplectic(
            np.array([_SYMBOLS[s][0] for s in syms] + [_SYMBOLS[s][1] for s in syms])
        ).matrix()
        coeff = np.trace(ref.conj().T @ mat) / 2**k
        if abs(coeff) > 0.5:
            for e in range(4):
                if abs(coeff - 1j**e) < 1e-9:
                    return syms, e
            raise AssertionError(f"non-Clifford coefficient {coeff}")
    raise AssertionError("matrix is not a Pauli")


def _check_targets(gate: str, targets, n: int) -> tuple[int, ...]:
    if gate not in GATES:
        raise BadSymbol(f"unknown gate {gate!r}; expected one of {sorted(GATES)}")
    t = (targets,) if isinstance(targets, (int, np.integer)) else tuple(targets)
    t = tuple(int(i) for i in t)
    if len(t) != GATE_ARITY[gate]:
        raise LengthMismatch(f"{gate} takes {GATE_ARITY[gate]} target(s), got {len(t)}")
    for q in t:
        if not 0 <= q < n:
            raise IndexOutOfRange(f"qubit {q + 1} outside 1..{n}")
    if len(set(t)) != len(t):
        raise DuplicateTarget(f"{gate} targets must be distinct, got {[q + 1 for q in t]}")
    return t


def conjugate(p: Pauli, gate: str, targets) -> Pauli:
    """Return ``U p U^dagger`` for ``gate`` acting on 0-based ``targets``.

    CNOT targets are ``(control, target)``; CP is symmetric.
    """
    t = _check_targets(gate, targets, p.n)
    local = Pauli(p.z[list(t)], p.x[list(t)]).matrix()
    u = GATES[gate]
    syms, e = _decompose(u @ local @ u.conj().T, len(t))
    z = p.z.copy()
    x = p.x.copy()
    for q, s in zip(t, syms):
        z[q], x[q] = _SYMBOLS[s]
    return Pauli(z, x, p.phase + e)


Circuit = Sequence[tuple[str, object]]


@dataclass(frozen=True)
class StabilizerMatrix:
    """A list of Pauli generators with their ``(Z | X)`` binary matrix."""

    generators: tuple[Pauli, ...]
    n: int = field(default=-1)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if self.n < 0:
            if not gens:
                raise ValueError("cannot infer n from an empty generator list")
            object.__setattr__(self, "n", gens[0].n)
        for g in gens:
            if g.n != self.n:
                raise LengthMismatch(f"generator {g} is not on {self.n} qubits")

    @property
    def binary(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, 2 * self.n), np.uint8)
        return np.vstack([g.symplectic() for g in self.generators])

    @property
    def z_block(self) -> np.ndarray:
        return self.binary[:, : self.n]

    @property
    def x_block(self) -> np.ndarray:
        return self.binary[:, self.n :]

    def rank(self) -> int:
        return gf2.rank(self.binary)

    def commuting(self) -> bool:
        gens = self.generators
        return all(
            symplectic_product(gens[i], gens[j]) == 0
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        )

    @classmethod
    def from_binary(cls, matrix, phases: Iterable[int] | None = None) -> StabilizerMatrix:
        m = gf2.as_bits(matrix, 2)
        phases = list(phases) if phases is not None else [0] * m.shape[0]
        return cls(tuple(Pauli.from_symplectic(r, e) for r, e in zip(m, phases)), m.shape[1] // 2)


def apply_local_clifford(sm: StabilizerMatrix, circuit: Circuit) -> StabilizerMatrix:
    """Conjugate every generator by ``circuit`` applied left to right."""
    gens = list(sm.generators)
    for gate, targets in circuit:
        gens = [conjugate(g, gate, targets) for g in gens]
    return StabilizerMatrix(tuple(gens), sm.n)
