"""Dense linear algebra over GF(2).

Matrices and vectors are numpy ``uint8`` arrays holding 0/1 entries. Every
routine returns fresh arrays and never mutates its inputs.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

BitMatrix = npt.NDArray[np.uint8]
BitVector = npt.NDArray[np.uint8]


class SingularMatrixError(ValueError):
    """Raised when inverting a matrix that has no inverse over GF(2)."""


def as_bits(a, ndim: int | None = None) -> np.ndarray:
    """Coerce ``a`` to a uint8 0/1 array, reducing integers mod 2."""
    arr = np.asarray(a)
    if arr.dtype == bool:
        arr = arr.astype(np.uint8)
    else:
        arr = (arr.astype(np.int64) & 1).astype(np.uint8)
    if ndim is not None and arr.ndim != ndim:
        if ndim == 2 and arr.size == 0:
            return arr.reshape(0, 0)
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    return arr


def matmul(a, b) -> np.ndarray:
    """Matrix (or matrix-vector) product reduced mod 2."""
    return (as_bits(a).astype(np.int64) @ as_bits(b).astype(np.int64) & 1).astype(np.uint8)


def rref(m) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken from the lowest-index row holding a one in the current
    column, so the output is a deterministic function of the input.
    """
    a = as_bits(m, 2).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        p = int(col.argmax())
        if not col[p]:
            continue
        p += r
        if p != r:
            a[[r, p]] = a[[p, r]]
        hit = a[:, c].astype(bool)
        hit[r] = False
        a[hit] ^= a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    """Row rank over GF(2); an empty matrix has rank 0."""
    return len(rref(m)[1])


def invert(m) -> BitMatrix:
    """Inverse of a square matrix over GF(2).

    Raises:
        SingularMatrixError: if ``m`` is not invertible.
    """
    a = as_bits(m, 2)
    n, cols = a.shape
    if n != cols:
        raise ValueError(f"cannot invert a non-square {n}x{cols} matrix")
    reduced, pivots = rref(np.hstack([a, np.eye(n, dtype=np.uint8)]))
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"matrix of rank {rank(a)} < {n} is singular")
    return reduced[:, n:].copy()


def kernel(m) -> list[BitVector]:
    """Basis of the right null space ``{x : m x = 0}``.

    One basis vector per free column of the RREF, in increasing column order.
    For a matrix with no rows the kernel is the whole space.
    """
    a = as_bits(m, 2)
    cols = a.shape[1]
    reduced, pivots = rref(a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = np.zeros(cols, dtype=np.uint8)
        x[f] = 1
        for i, p in enumerate(pivots):
            x[p] = reduced[i, f]
        basis.append(x)
    return basis


def kernel_matrix(m) -> BitMatrix:
    """``kernel`` stacked as the rows of a matrix (shape ``(dim, cols)``)."""
    cols = as_bits(m, 2).shape[1]
    basis = kernel(m)
    if not basis:
        return np.zeros((0, cols), dtype=np.uint8)
    return np.vstack(basis)


def in_span(v, rows) -> bool:
    """True iff ``v`` is a GF(2) combination of the rows of ``rows``."""
    v = as_bits(v).reshape(-1)
    r = as_bits(rows, 2)
    if r.shape[0] == 0:
        return not v.any()
    if r.shape[1] != v.size:
        raise ValueError(f"vector length {v.size} does not match {r.shape[1]} columns")
    return rank(np.vstack([r, v])) == rank(r)


def solve_homogeneous(m) -> bool:
    """True iff ``m x = 0`` has only the trivial solution."""
    a = as_bits(m, 2)
    return rank(a) == a.shape[1]


def row_basis(m) -> BitMatrix:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    reduced, pivots = rref(m)
    return reduced[: len(pivots)].copy()


def same_row_space(a, b) -> bool:
    """True iff two matrices with equal column count span the same rows."""
    a = as_bits(a, 2)
    b = as_bits(b, 2)
    if a.shape[1] != b.shape[1]:
        return False
    return np.array_equal(row_basis(a), row_basis(b))


def span_elements(rows) -> list[BitVector]:
    """All ``2**rank`` vectors of the row space, zero vector first."""
    basis = row_basis(rows)
    cols = as_bits(rows, 2).shape[1]
    out = [np.zeros(cols, dtype=np.uint8)]
    for b in basis:
        out += [v ^ b for v in out]
    return out
