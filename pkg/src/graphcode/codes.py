"""Named stabilizer codes and random codes for property tests."""

from __future__ import annotations

import numpy as np

from .pauli import GATE_ARITY, Pauli, conjugate
from .stabilizer import StabilizerCode


def gottesman_8_3_3() -> StabilizerCode:
    """The [[8,3,3]] member of the [[2^j, 2^j - j - 2, 3]] family."""
    return StabilizerCode.from_strings(
        8,
        [
            "X1 X2 X3 X4 X5 X6 X7 X8",
            "Z1 Z2 Z3 Z4 Z5 Z6 Z7 Z8",
            "X2 X4 Y5 Z6 Y7 Z8",
            "X2 Z3 Y4 X6 Z7 Y8",
            "Y2 X3 Z4 X5 Z6 Y8",
        ],
        ["X1 X2 Z6 Z8", "X1 X3 Z4 Z7", "X1 Z4 X5 Z6"],
        ["Z2 Z4 Z6 Z8", "Z3 Z4 Z7 Z8", "Z5 Z6 Z7 Z8"],
        claimed_distance=3,
        name="gottesman_8_3_3",
    )


def five_qubit_code() -> StabilizerCode:
    return StabilizerCode.from_strings(
        5,
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        ["XXXXX"],
        ["ZZZZZ"],
        claimed_distance=3,
        name="five_qubit_5_1_3",
    )


def steane_code() -> StabilizerCode:
    return StabilizerCode.from_strings(
        7,
        ["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
        ["XXXXXXX"],
        ["ZZZZZZZ"],
        claimed_distance=3,
        name="steane_7_1_3",
    )


def trivial_code(n: int, k: int) -> StabilizerCode:
    """``Z`` on the first ``n - k`` qubits; logical X/Z on the rest."""
    gens = tuple(Pauli.single("Z", i, n) for i in range(n - k))
    lx = tuple(Pauli.single("X", n - k + j, n) for j in range(k))
    lz = tuple(Pauli.single("Z", n - k + j, n) for j in range(k))
    return StabilizerCode(n, k, gens, lx, lz, None, f"trivial_{n}_{k}")


def random_circuit(n: int, depth: int, rng: np.random.Generator) -> list[tuple[str, tuple[int, ...]]]:
    gates = ["H", "P", "CNOT", "CP"] if n > 1 else ["H", "P"]
    circuit = []
    for _ in range(depth):
        gate = gates[rng.integers(len(gates))]
        targets = tuple(int(q) for q in rng.choice(n, GATE_ARITY[gate], replace=False))
        circuit.append((gate, targets))
    return circuit


def random_code(n: int, k: int, rng: np.random.Generator, depth: int | None = None) -> StabilizerCode:
    """A random Clifford image of :func:`trivial_code`, generators and logicals alike."""
    base = trivial_code(n, k)
    circuit = random_circuit(n, depth if depth is not None else 4 * n * n, rng)

    def push(ops):
        out = []
        for p in ops:
            for gate, targets in circuit:
                p = conjugate(p, gate, targets)
            out.append(p)
        return tuple(out)

    return StabilizerCode(
        n, k, push(base.generators), push(base.logical_x), push(base.logical_z), None,
        f"random_{n}_{k}",
    )
