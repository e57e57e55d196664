"""State-vector ground truth for graph codes.

Amplitudes are indexed with qubit 1 as the most significant bit, matching
:meth:`graphcode.pauli.Pauli.matrix`.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .coincidence import CoincidenceMatrix
from .detection import configurations, detect_strong, detect_weak
from .graphs import Graph
from .pauli import Pauli

TOL = 1e-9
DEFAULT_CAP = 14


class TooManyQubits(ValueError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"{n} qubits exceeds the state-vector cap of {cap}; raise the cap "
            f"(memory grows as 2**n) to run the oracle"
        )


class NotOrthogonal(ValueError):
    pass


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise TooManyQubits(n, cap)


def _bits(n: int) -> np.ndarray:
    """``(2**n, n)`` table: row ``b`` holds the bits of basis state ``b``, qubit 1 first."""
    idx = np.arange(2**n)
    return ((idx[:, None] >> (n - 1 - np.arange(n))) & 1).astype(np.int64)


def graph_state(g: Graph, cap: int = DEFAULT_CAP) -> np.ndarray:
    """``2**(-n/2) * (-1)**(edges inside the support of mu)`` on each basis state ``mu``."""
    n = g.n
    _check_cap(n, cap)
    mu = _bits(n)
    a = np.triu(g.adjacency.astype(np.int64))
    q = np.einsum("bi,ij,bj->b", mu, a, mu)
    return ((-1.0) ** q / np.sqrt(2.0**n)).astype(complex)


def _mask(bits) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out


def apply_pauli(state: np.ndarray, p: Pauli) -> np.ndarray:
    """Apply ``p`` (with its phase) to a state vector or to each row of a stack."""
    n = p.n
    dim = state.shape[-1]
    if dim != 2**n:
        raise ValueError(f"{n}-qubit operator on a state of dimension {dim}")
    idx = np.arange(dim)
    xmask = _mask(p.x)
    zmask = _mask(p.z)
    # sigma(z,x) = (-i)^(z.x) Z^z X^x ; Z^z X^x |b> = (-1)^(z.(b^x)) |b^x>
    target = idx ^ xmask
    parity = np.bitwise_count(target & zmask) & 1
    coeff = (1j ** (p.phase - int(np.dot(p.z.astype(int), p.x.astype(int))))) * (-1.0) ** parity
    out = np.empty_like(state, dtype=complex)
    out[..., target] = coeff * state[..., idx]
    return out


def apply_local(state: np.ndarray, mats: Sequence[np.ndarray | None]) -> np.ndarray:
    """Apply a tensor product of single-qubit matrices (``None`` = identity)."""
    n = len(mats)
    psi = state.reshape((2,) * n)
    for q, m in enumerate(mats):
        if m is None:
            continue
        psi = np.moveaxis(np.tensordot(m, psi, axes=([1], [q])), 0, q)
    return psi.reshape(-1)


# Square roots of -i X and i Z.
TAU_X = np.array([[-1, 1j], [1j, -1]], dtype=complex) / np.sqrt(2)
OMEGA = np.exp(1j * np.pi / 4)
TAU_Z = np.diag([OMEGA, OMEGA**3])


def lc_unitary(g: Graph, a: int) -> list[np.ndarray | None]:
    """Per-qubit factors of the local unitary realizing local complementation at ``a``.

    ``tau_x`` acts on ``a`` and the inverse of ``tau_z`` on each neighbour of
    ``a``; other qubits are untouched. Equality with the complemented graph state holds up
    to a global phase.
    """
    mats: list[np.ndarray | None] = [None] * g.n
    mats[a] = TAU_X
    for b in g.neighbors(a):
        mats[b] = TAU_Z.conj().T
    return mats


def overlap(a: np.ndarray, b: np.ndarray) -> float:
    """``|<a|b>|``; equal to 1 iff the normalized states agree up to global phase."""
    return float(abs(np.vdot(a, b)))


@dataclass
class CodeSpace:
    codewords: np.ndarray  # shape (K, 2**n)

    def __post_init__(self):
        c = np.atleast_2d(np.asarray(self.codewords, dtype=complex))
        gram = c.conj() @ c.T
        if not np.allclose(gram, np.eye(c.shape[0]), atol=TOL, rtol=0):
            raise NotOrthogonal("codewords are not orthonormal")
        self.codewords = c

    @property
    def dimension(self) -> int:
        return self.codewords.shape[0]

    @property
    def n(self) -> int:
        return int(np.log2(self.codewords.shape[1]))


def codespace_from_cws(
    g: Graph,
    word_ops: Sequence[Pauli],
    diagonal_corrections: Iterable[int] = (),
    cap: int = DEFAULT_CAP,
) -> CodeSpace:
    """Codewords ``w |S>`` on the base state of a graph.

    ``diagonal_corrections`` lists qubits whose phase gate was dropped when the
    graph was read off; the base state is then the graph state with the inverse
    phase gate applied there.
    """
    base = graph_state(g, cap)
    corr = list(diagonal_corrections)
    if corr:
        pdag = np.diag([1, -1j])
        base = apply_local(base, [pdag if q in corr else None for q in range(g.n)])
    return CodeSpace(np.vstack([apply_pauli(base, w) for w in word_ops]))


def codespace_from_coincidence(cm: CoincidenceMatrix, cap: int = DEFAULT_CAP) -> CodeSpace:
    """Codewords of the graph code: ``Z^c |Gamma>`` for ``c`` in the input-block row span.

    Input basis state ``x`` maps to ``Z^(x B) |Gamma>``.
    """
    n, k = cm.n, cm.k
    b = cm.input_block
    base = graph_state(cm.gamma, cap)
    words = []
    for bits in itertools.product((0, 1), repeat=k):
        c = (np.array(bits, dtype=np.int64) @ b.astype(np.int64)) & 1 if k else np.zeros(n, np.int64)
        words.append(Pauli(c, np.zeros(n, np.uint8)))
    return CodeSpace(np.vstack([apply_pauli(base, w) for w in words]))


def project(state: np.ndarray, stabilizers: Iterable[Pauli]) -> np.ndarray:
    """Apply ``prod (1 + s)/2``."""
    for s in stabilizers:
        state = (state + apply_pauli(state, s)) / 2
    return state


def codespace_from_stabilizers(
    stabilizers: Sequence[Pauli], word_ops: Sequence[Pauli], cap: int = DEFAULT_CAP
) -> CodeSpace:
    """Codewords ``w |S>`` where ``|S>`` is the joint +1 eigenstate of a full
    set of ``n`` commuting stabilizers."""
    n = stabilizers[0].n
    _check_cap(n, cap)
    dim = 2**n
    plus = np.full(dim, 1 / np.sqrt(dim), dtype=complex)
    candidates = itertools.chain([plus], (np.eye(1, dim, b, dtype=complex)[0] for b in range(dim)))
    for seed in candidates:
        s = project(seed, stabilizers)
        norm = np.linalg.norm(s)
        if norm > 1e-6:
            s = s / norm
            break
    else:  # pragma: no cover - a commuting full-rank set always has a +1 state
        raise ValueError("stabilizers have no common +1 eigenstate")
    return CodeSpace(np.vstack([apply_pauli(s, w) for w in word_ops]))


@dataclass(frozen=True)
class KLResult:
    ok: bool
    witness: tuple[Pauli, int, int] | None = None
    omegas: dict = field(default_factory=dict, compare=False, repr=False)

    def __bool__(self) -> bool:
        return self.ok


def kl_check(cs: CodeSpace, errors: Iterable[Pauli], tol: float = TOL) -> KLResult:
    """Check ``<c_i|F|c_j> = omega(F) delta_ij`` for each error ``F``.

    ``omega(F)`` is read from the ``(0, 0)`` entry; the first violating
    ``(F, i, j)`` is returned as the witness.
    """
    c = cs.codewords
    omegas = {}
    eye = np.eye(c.shape[0])
    for f in errors:
        m = c.conj() @ apply_pauli(c, f).T
        w = m[0, 0]
        bad = np.argwhere(np.abs(m - w * eye) > tol)
        if bad.size:
            i, j = (int(v) for v in bad[0])
            return KLResult(False, (f, i, j), omegas)
        omegas[f] = complex(w)
    return KLResult(True, None, omegas)


def paulis_on(n: int, support: Iterable[int], exact: bool = False) -> Iterator[Pauli]:
    """Pauli operators supported inside ``support`` (or exactly on it)."""
    support = list(support)
    for combo in itertools.product("IXYZ", repeat=len(support)):
        if exact and "I" in combo:
            continue
        z = np.zeros(n, np.uint8)
        x = np.zeros(n, np.uint8)
        for q, s in zip(support, combo):
            z[q] = s in "ZY"
            x[q] = s in "XY"
        yield Pauli(z, x)


def paulis_up_to_weight(n: int, weight: int, include_identity: bool = False) -> Iterator[Pauli]:
    if include_identity:
        yield Pauli.identity(n)
    for w in range(1, weight + 1):
        for support in itertools.combinations(range(n), w):
            yield from paulis_on(n, support, exact=True)


def detects(cs: CodeSpace, config: Iterable[int]) -> bool:
    """Oracle verdict: every Pauli supported inside ``config`` satisfies KL."""
    return kl_check(cs, paulis_on(cs.n, config)).ok


@dataclass
class Agreement:
    e: int
    rows: list[tuple[tuple[int, ...], bool, bool]] = field(default_factory=list)

    @property
    def disagreements(self) -> list[tuple[tuple[int, ...], bool, bool]]:
        return [r for r in self.rows if r[1] != r[2]]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_validate(cm: CoincidenceMatrix, cs: CodeSpace, e: int, mode: str = "weak") -> Agreement:
    """Compare the graph verdict with the oracle on every ``|E| <= 2e``.

    Rows are ``(E, graph verdict, oracle verdict)``.
    """
    if cs.n != cm.n:
        raise ValueError(f"code space on {cs.n} qubits, coincidence matrix on {cm.n} outputs")
    check = detect_weak if mode == "weak" else detect_strong
    report = Agreement(e)
    for config in configurations(cm.n, 2 * e):
        report.rows.append((config, check(cm, config), detects(cs, config)))
    return report
