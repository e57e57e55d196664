"""Graphs from codeword stabilizers, local complementation, and LC orbits."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import gf2
from .pauli import StabilizerMatrix, apply_local_clifford
from .stabilizer import CwsRealization


class NoHadamardSubsetFound(RuntimeError):
    pass


class SingularBasisChange(ValueError):
    pass


class Graph:
    """Simple undirected graph held as a symmetric zero-diagonal adjacency matrix."""

    __slots__ = ("adjacency",)

    def __init__(self, adjacency):
        a = gf2.as_bits(adjacency, 2).copy()
        if a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix is not symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency matrix has loops on the diagonal")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return int(self.adjacency.shape[0])

    def neighbors(self, v: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.adjacency[v])]

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency))
        return [(int(a), int(b)) for a, b in zip(i, j)]

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(np.zeros((n, n), np.uint8))

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        a = np.zeros((n, n), np.uint8)
        for i, j in edges:
            a[i, j] = a[j, i] = 1
        return cls(a)

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    def key(self) -> bytes:
        return np.packbits(self.adjacency).tobytes() + bytes([self.n % 256])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(i + 1, j + 1) for i, j in self.edges()]})"


def transpose_stabilizer(sm: StabilizerMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Split the transposed ``(Z | X)`` matrix into ``A = Z^T`` and ``B = X^T``."""
    b = sm.binary
    n = sm.n
    if b.shape != (n, 2 * n):
        raise ValueError(f"need an n x 2n stabilizer matrix, got {b.shape}")
    return b[:, :n].T.copy(), b[:, n:].T.copy()


@dataclass(frozen=True)
class StandardizationResult:
    graph: Graph
    hadamard_set: tuple[int, ...]
    post_clifford: tuple[tuple[str, tuple[int, ...]], ...]
    diagonal_corrections: tuple[int, ...]
    raw_adjacency: np.ndarray
    basis_change: np.ndarray

    @property
    def circuit(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """Full local Clifford: Hadamards followed by the phase corrections."""
        return tuple(("H", (q,)) for q in self.hadamard_set) + self.post_clifford


def hadamard_subsets(n: int):
    """All qubit subsets by increasing size, lexicographic within a size."""
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def find_hadamard_subset(sm: StabilizerMatrix) -> tuple[int, ...]:
    """First subset (in :func:`hadamard_subsets` order) whose Hadamards make X invertible."""
    z = sm.z_block
    x = sm.x_block
    for subset in hadamard_subsets(sm.n):
        xs = x.copy()
        cols = list(subset)
        xs[:, cols] = z[:, cols]
        if gf2.rank(xs) == sm.n:
            return subset
    raise NoHadamardSubsetFound(
        "no Hadamard subset makes the X block invertible; the generators are not a "
        "full-rank commuting set"
    )


def standardize(cws: CwsRealization | StabilizerMatrix) -> StandardizationResult:
    """Graph adjacency ``A' B'^-1`` of a full-rank codeword stabilizer.

    When ``B = X^T`` is singular, Hadamards on the first suitable qubit subset
    are applied first. Ones on the diagonal of ``A' B'^-1`` are cleared and
    recorded; each corresponds to a phase gate on that qubit.
    """
    sm = cws.codeword_stabilizer if isinstance(cws, CwsRealization) else cws
    n = sm.n
    if sm.binary.shape[0] != n or sm.rank() != n:
        raise NoHadamardSubsetFound(f"codeword stabilizer must have full rank {n}")
    subset = find_hadamard_subset(sm)
    transformed = apply_local_clifford(sm, [("H", (q,)) for q in subset])
    a, b = transpose_stabilizer(transformed)
    b_inv = gf2.invert(b)
    raw = gf2.matmul(a, b_inv)
    corrections = tuple(int(i) for i in np.flatnonzero(raw.diagonal()))
    adjacency = raw.copy()
    np.fill_diagonal(adjacency, 0)
    return StandardizationResult(
        graph=Graph(adjacency),
        hadamard_set=tuple(subset),
        post_clifford=tuple(("P", (q,)) for q in corrections),
        diagonal_corrections=corrections,
        raw_adjacency=raw,
        basis_change=b_inv,
    )


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v + 1} outside 1..{g.n}")
    a = g.adjacency
    row = a[v]
    a = a ^ np.outer(row, row)
    np.fill_diagonal(a, 0)
    return Graph(a)


def q_matrix(g: Graph, v: int) -> np.ndarray:
    """The ``2n x 2n`` local symplectic map ``(I, diag(row v); Lambda_v, I)``."""
    n = g.n
    lam = np.zeros((n, n), np.uint8)
    lam[v, v] = 1
    eye = np.eye(n, dtype=np.uint8)
    return np.block([[eye, np.diag(g.adjacency[v])], [lam, eye]]).astype(np.uint8)


def q_transform(g: Graph, v: int) -> np.ndarray:
    """``(A Gamma + B)(C Gamma + D)^-1`` with the blocks of :func:`q_matrix`."""
    n = g.n
    q = q_matrix(g, v)
    a, b, c, d = q[:n, :n], q[:n, n:], q[n:, :n], q[n:, n:]
    gamma = g.adjacency
    denom = gf2.matmul(c, gamma) ^ d
    try:
        inv = gf2.invert(denom)
    except gf2.SingularMatrixError as exc:
        raise SingularBasisChange(f"C Gamma + D is singular at vertex {v + 1}") from exc
    return gf2.matmul(gf2.matmul(a, gamma) ^ b, inv)


def verify_q_transform(g: Graph, v: int) -> bool:
    """True iff the symplectic rule at ``v`` reproduces ``local_complement(g, v)``."""
    if g.n == 0:
        return True
    return np.array_equal(q_transform(g, v), local_complement(g, v).adjacency)


def apply_q(g: Graph, v: int, vectors) -> np.ndarray:
    """Push ``(z | x)`` row vectors through the symplectic map of an LC at ``v``."""
    vec = gf2.as_bits(vectors, 2).copy()
    n = g.n
    # same as vec @ q_matrix(g, v).T, without building the 2n x 2n matrix
    vec[:, :n] ^= vec[:, n:] & g.adjacency[v]
    vec[:, n + v] ^= vec[:, v]
    return vec


@dataclass(frozen=True)
class Orbit:
    graphs: tuple[Graph, ...]
    truncated: bool

    def __contains__(self, g) -> bool:
        return g in self.graphs

    def __len__(self) -> int:
        return len(self.graphs)


def lc_orbit(g: Graph, max_size: int = 10_000) -> Orbit:
    """Breadth-first closure of ``g`` under local complementation.

    Graphs are compared as labelled adjacency matrices. The result lists
    graphs in discovery order and stops after ``max_size`` members.
    """
    seen = {g}
    order = [g]
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for v in range(cur.n):
            nxt = local_complement(cur, v)
            if nxt in seen:
                continue
            if len(order) >= max_size:
                return Orbit(tuple(order), True)
            seen.add(nxt)
            order.append(nxt)
            queue.append(nxt)
    return Orbit(tuple(order), False)


def lc_sequence_search(g: Graph, accept, max_size: int = 100_000):
    """Shortest LC sequence (lowest vertices first) reaching a graph with ``accept``.

    Returns ``(graph, sequence)`` or ``None`` when the explored orbit (bounded by
    ``max_size``) has no acceptable member.
    """
    if accept(g):
        return g, []
    parent: dict[Graph, tuple[Graph, int] | None] = {g: None}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for v in range(cur.n):
            nxt = local_complement(cur, v)
            if nxt in parent:
                continue
            parent[nxt] = (cur, v)
            if accept(nxt):
                seq = []
                node = nxt
                while parent[node] is not None:
                    prev, u = parent[node]
                    seq.append(u)
                    node = prev
                return nxt, seq[::-1]
            if len(parent) >= max_size:
                return None
            queue.append(nxt)
    return None
