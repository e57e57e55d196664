"""Coincidence matrices: attaching input vertices to a graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import gf2
from .graphs import Graph, apply_q, lc_sequence_search, local_complement
from .pauli import Pauli, StabilizerMatrix


class RankDeficientSupport(ValueError):
    pass


class ConditionViolated(ValueError):
    def __init__(self, which: str, report: AttachmentReport):
        self.which = which
        self.report = report
        super().__init__(f"attachment condition {which} fails")


class SearchExhausted(RuntimeError):
    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"no acceptable graph within an LC orbit bound of {bound}")


class InvalidXi(ValueError):
    pass


@dataclass(frozen=True)
class CoincidenceMatrix:
    """Symmetric matrix over ``k`` input vertices followed by ``n`` output vertices."""

    k: int
    n: int
    xi: np.ndarray

    def __post_init__(self):
        xi = gf2.as_bits(self.xi, 2).copy()
        size = self.k + self.n
        if xi.shape != (size, size):
            raise InvalidXi(f"expected a {size}x{size} matrix for k={self.k}, n={self.n}")
        if not np.array_equal(xi, xi.T):
            raise InvalidXi("coincidence matrix is not symmetric")
        if xi.diagonal().any():
            raise InvalidXi("coincidence matrix has nonzero diagonal")
        if xi[: self.k, : self.k].any():
            raise InvalidXi("input-input block must be zero")
        xi.setflags(write=False)
        object.__setattr__(self, "xi", xi)

    @property
    def input_block(self) -> np.ndarray:
        """The ``k x n`` input-to-output block."""
        return self.xi[: self.k, self.k :].copy()

    @property
    def gamma(self) -> Graph:
        return Graph(self.xi[self.k :, self.k :])

    @classmethod
    def assemble(cls, gamma: Graph, input_block) -> CoincidenceMatrix:
        b = gf2.as_bits(input_block, 2)
        n = gamma.n
        if b.size == 0:
            b = np.zeros((0, n), np.uint8)
        k = b.shape[0]
        if b.shape[1] != n:
            raise ValueError(f"input block has {b.shape[1]} columns for {n} outputs")
        xi = np.block([[np.zeros((k, k), np.uint8), b], [b.T, gamma.adjacency]])
        return cls(k, n, xi.astype(np.uint8))

    def vertex_labels(self) -> list[str]:
        """``0, 0', 0'', ...`` for inputs then ``1..n`` for outputs."""
        return [input_label(i) for i in range(self.k)] + [str(j + 1) for j in range(self.n)]


def input_label(i: int) -> str:
    return "0" + "'" * i


@dataclass(frozen=True)
class AttachmentReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witness_vb: np.ndarray | None = None

    @property
    def ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii

    def failed(self) -> list[str]:
        names = [("i", self.cond_i), ("ii", self.cond_ii), ("iii", self.cond_iii)]
        return [name for name, good in names if not good]


def graph_form_stabilizer(gamma: Graph, kernel_vectors) -> StabilizerMatrix:
    """Generators ``X^k Z^(Gamma k)`` for each vector ``k``."""
    gens = []
    for kv in kernel_vectors:
        kv = gf2.as_bits(kv).reshape(-1)
        if kv.size != gamma.n:
            raise ValueError(f"vector of length {kv.size} for a {gamma.n}-vertex graph")
        gens.append(Pauli(gf2.matmul(gamma.adjacency, kv), kv))
    return StabilizerMatrix(tuple(gens), gamma.n)


def derive_input_block(gamma: Graph, x_support) -> np.ndarray:
    """Rows spanning the dot-product complement of the stabilizer X supports.

    The result is in reduced row echelon form, so its kernel is exactly the
    row span of ``x_support``.
    """
    s = gf2.as_bits(x_support, 2)
    n = gamma.n
    if s.size == 0:
        s = np.zeros((0, n), np.uint8)
    if s.shape[1] != n:
        raise ValueError(f"support rows have {s.shape[1]} columns for {n} outputs")
    if gf2.rank(s) != s.shape[0]:
        raise RankDeficientSupport(f"support rows have rank {gf2.rank(s)} < {s.shape[0]}")
    comp = gf2.kernel_matrix(s) if s.shape[0] else np.eye(n, dtype=np.uint8)
    return gf2.row_basis(comp) if comp.shape[0] else np.zeros((0, n), np.uint8)


def check_conditions(gamma: Graph, input_block) -> AttachmentReport:
    b = gf2.as_bits(input_block, 2)
    n = gamma.n
    if b.size == 0:
        b = np.zeros((0, n), np.uint8)
    g = gamma.adjacency
    cond_i = gf2.rank(g) < n
    rb, rg = gf2.rank(b), gf2.rank(g)
    # a nonzero vector in both spans shows up as a rank drop of the stack
    cond_ii = rb == b.shape[0] and gf2.rank(np.vstack([b, g])) == rb + rg
    witness = None
    if b.shape[0]:
        combos = gf2.kernel(gf2.matmul(g, b.T))
        for c in combos:
            v = gf2.matmul(c, b)
            if v.any():
                witness = v
                break
    return AttachmentReport(cond_i, cond_ii, witness is not None, witness)


def attach_inputs(gamma: Graph, input_block, strict: bool = True) -> CoincidenceMatrix:
    """Assemble the coincidence matrix, requiring all attachment conditions.

    With no inputs the coincidence matrix is the adjacency matrix itself and
    no conditions apply. ``strict=False`` assembles regardless of the
    conditions (use :func:`check_conditions` to inspect them).
    """
    cm = CoincidenceMatrix.assemble(gamma, input_block)
    if cm.k == 0 or not strict:
        return cm
    report = check_conditions(gamma, cm.input_block)
    if not report.ok:
        raise ConditionViolated(",".join(report.failed()), report)
    return cm


def ensure_singular(gamma: Graph, max_size: int = 100_000) -> tuple[Graph, list[int]]:
    """Shortest LC sequence (lowest vertex first) reaching a singular adjacency."""
    found = lc_sequence_search(gamma, lambda g: gf2.rank(g.adjacency) < g.n, max_size)
    if found is None:
        raise SearchExhausted(max_size)
    return found


@dataclass(frozen=True)
class AttachmentSearch:
    graph: Graph
    support: np.ndarray  # (z | x) rows of the code stabilizer in the graph frame
    sequence: tuple[int, ...]
    input_block: np.ndarray
    report: AttachmentReport
    satisfied: bool  # all three conditions hold; otherwise a singular fallback


def find_attachment(gamma: Graph, support, max_states: int = 100_000) -> AttachmentSearch:
    """Search LC sequences for a frame where the input block meets all conditions.

    ``support`` holds the ``(Gamma k | k)`` rows of the code stabilizer in the
    frame of ``gamma``; it is carried through each local complementation.
    States are visited breadth first, lowest vertex first. If no state meets
    all three conditions, the first singular state (or, failing that, the
    starting state) is returned with ``satisfied=False``. With ``n`` support
    rows there are no inputs and the starting state is returned as is.
    """
    n = gamma.n
    start = gf2.as_bits(support, 2)
    if start.size == 0:
        start = np.zeros((0, 2 * n), np.uint8)

    def evaluate(g, s):
        block = derive_input_block(g, s[:, n:])
        return block, check_conditions(g, block)

    if start.shape[0] == n:
        block, report = evaluate(gamma, start)
        return AttachmentSearch(gamma, start, (), block, report, True)

    seen = {(gamma.key(), gf2.row_basis(start).tobytes())}
    queue = deque([(gamma, start, ())])
    fallback = None
    while queue:
        g, s, seq = queue.popleft()
        # conditions ii and iii are only worth testing on singular graphs
        if gf2.rank(g.adjacency) < n:
            block, report = evaluate(g, s)
            if report.ok:
                return AttachmentSearch(g, s, seq, block, report, True)
            if fallback is None:
                fallback = AttachmentSearch(g, s, seq, block, report, False)
        for v in range(n):
            g2 = local_complement(g, v)
            s2 = apply_q(g, v, s)
            key = (g2.key(), gf2.row_basis(s2).tobytes())
            if key in seen:
                continue
            if len(seen) >= max_states:
                queue.clear()
                break
            seen.add(key)
            queue.append((g2, s2, seq + (v,)))
    if fallback is None:
        block, report = evaluate(gamma, start)
        fallback = AttachmentSearch(gamma, start, (), block, report, False)
    return fallback
