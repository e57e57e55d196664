"""Binary stabilizer codes, their codeword-stabilized (CWS) realization, and the
classical error map of a graph-form CWS code."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import gf2
from .pauli import Pauli, PauliError, StabilizerMatrix, parse_pauli, symplectic_product, to_sparse_text


class InvalidCode(ValueError):
    """The stabilizer code violates a group-structure invariant."""


class CodeFileError(ValueError):
    """Malformed code-definition file; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    k: int
    generators: tuple[Pauli, ...]
    logical_x: tuple[Pauli, ...]
    logical_z: tuple[Pauli, ...]
    claimed_distance: int | None = None
    name: str = ""

    @classmethod
    def from_strings(cls, n, generators, logical_x, logical_z, claimed_distance=None, name=""):
        parse = lambda ops: tuple(parse_pauli(s, n) for s in ops)  # noqa: E731
        return cls(n, len(logical_x), parse(generators), parse(logical_x), parse(logical_z),
                   claimed_distance, name)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    pairs: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(code: StabilizerCode) -> ValidationReport:
    """Check every StabilizerCode invariant and report each violation.

    ``pairs`` names the offending operators (e.g. ``("g2", "X1")``) for
    commutation failures.
    """
    rep = ValidationReport()
    n, k = code.n, code.k
    ops = (
        [(f"g{i + 1}", g) for i, g in enumerate(code.generators)]
        + [(f"X{i + 1}", g) for i, g in enumerate(code.logical_x)]
        + [(f"Z{i + 1}", g) for i, g in enumerate(code.logical_z)]
    )
    for name, op in ops:
        if op.n != n:
            rep.violations.append(f"{name} acts on {op.n} qubits, expected {n}")
    if rep.violations:
        return rep
    if len(code.generators) != n - k:
        rep.violations.append(f"expected {n - k} generators, got {len(code.generators)}")
    if len(code.logical_x) != k or len(code.logical_z) != k:
        rep.violations.append(
            f"expected {k} logical X and Z operators, got {len(code.logical_x)} and {len(code.logical_z)}"
        )
    if code.generators:
        r = gf2.rank(np.vstack([g.symplectic() for g in code.generators]))
        if r != len(code.generators):
            rep.violations.append(f"generators are dependent (rank {r} < {len(code.generators)})")

    def expect(a, b, value):
        (na, pa), (nb, pb) = a, b
        got = symplectic_product(pa, pb)
        if got != value:
            verb = "anticommute" if got else "commute"
            rep.violations.append(f"{na} and {nb} {verb}")
            rep.pairs.append((na, nb))

    gens = ops[: len(code.generators)]
    lx = ops[len(code.generators): len(code.generators) + len(code.logical_x)]
    lz = ops[len(code.generators) + len(code.logical_x):]
    for a, b in itertools.combinations(gens, 2):
        expect(a, b, 0)
    for g in gens:
        for lo in lx + lz:
            expect(g, lo, 0)
    for i, a in enumerate(lx):
        for j, b in enumerate(lz):
            expect(a, b, int(i == j))
    for a, b in itertools.combinations(lx, 2):
        expect(a, b, 0)
    for a, b in itertools.combinations(lz, 2):
        expect(a, b, 0)
    return rep


@dataclass(frozen=True)
class CwsRealization:
    codeword_stabilizer: StabilizerMatrix
    word_operators: tuple[Pauli, ...]
    clifford_record: tuple[tuple[str, tuple[int, ...]], ...] = ()
    num_code_generators: int = 0

    @property
    def n(self) -> int:
        return self.codeword_stabilizer.n

    @property
    def standard_form(self) -> bool:
        """Codeword stabilizer is ``(Gamma | I)`` with a simple graph and all
        word operators are Z-only."""
        b = self.codeword_stabilizer.binary
        n = self.n
        if b.shape != (n, 2 * n):
            return False
        z, x = b[:, :n], b[:, n:]
        return (
            np.array_equal(x, np.eye(n, dtype=np.uint8))
            and np.array_equal(z, z.T)
            and not z.diagonal().any()
            and all(not w.x.any() for w in self.word_operators)
        )


def word_operators(logical_x) -> tuple[Pauli, ...]:
    """All ``2**k`` products of logical X operators.

    Entry ``v`` (binary counting, bit 0 = the first logical) applies each
    logical X whose bit is set.
    """
    logical_x = list(logical_x)
    if not logical_x:
        raise InvalidCode("word operators need at least one logical operator or n")
    n = logical_x[0].n
    out = []
    for v in range(2 ** len(logical_x)):
        w = Pauli.identity(n)
        for i, lx in enumerate(logical_x):
            if v >> i & 1:
                w = w * lx
        out.append(w)
    return tuple(out)


def realize_cws(code: StabilizerCode) -> CwsRealization:
    """Codeword stabilizer = generators + logical Zs; words = products of logical Xs."""
    rep = validate(code)
    if not rep.ok:
        raise InvalidCode("; ".join(rep.violations))
    sm = StabilizerMatrix(tuple(code.generators) + tuple(code.logical_z), code.n)
    words = word_operators(code.logical_x) if code.k else (Pauli.identity(code.n),)
    return CwsRealization(sm, words, (), len(code.generators))


def classical_error_map(e: Pauli, gamma) -> np.ndarray:
    """Image ``v + sum_l u_l r_l`` of the error ``Z^v X^u`` under a graph ``gamma``."""
    g = gf2.as_bits(gamma, 2)
    if g.shape != (e.n, e.n):
        raise ValueError(f"graph of shape {g.shape} does not match a {e.n}-qubit error")
    return e.z ^ gf2.matmul(e.x, g)


# --- code-definition files ------------------------------------------------

def parse_code_text(text: str, name: str = "") -> StabilizerCode:
    """Parse the ``n k`` / generators / logical X / logical Z text format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise CodeFileError("empty code file")
    lineno, header = lines[0]
    parts = header.split()
    try:
        n, k = (int(p) for p in parts)
    except ValueError:
        raise CodeFileError(f"header must be 'n k', got {header!r}", lineno) from None
    if n < 1 or not 0 <= k <= n:
        raise CodeFileError(f"need n >= 1 and 0 <= k <= n, got n={n} k={k}", lineno)
    expected = (n - k) + 2 * k
    body = lines[1:]
    if len(body) != expected:
        where = body[expected][0] if len(body) > expected else (body[-1][0] if body else lineno)
        raise CodeFileError(f"expected {expected} operator lines, found {len(body)}", where)
    ops = []
    for ln, s in body:
        try:
            ops.append(parse_pauli(s, n))
        except PauliError as exc:
            raise CodeFileError(str(exc), ln) from None
    g = tuple(ops[: n - k])
    lx = tuple(ops[n - k: n])
    lz = tuple(ops[n:])
    return StabilizerCode(n, k, g, lx, lz, None, name)


def load_code(path) -> StabilizerCode:
    path = Path(path)
    return parse_code_text(path.read_text(), name=path.stem)


def format_code(code: StabilizerCode) -> str:
    out = [f"{code.n} {code.k}"]
    out += [to_sparse_text(p) for p in code.generators]
    out += [to_sparse_text(p) for p in code.logical_x]
    out += [to_sparse_text(p) for p in code.logical_z]
    return "\n".join(out) + "\n"
