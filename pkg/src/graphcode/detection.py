"""Graph-theoretic error detection on coincidence matrices.

For an error configuration ``E`` (a set of output vertices) the integration
vertices are ``I = Y \\ E`` and the unknowns are the bits ``d`` on the input
vertices ``X`` followed by ``E``. Each integration vertex contributes one
equation: the sum of ``d_b`` over its neighbours ``b`` in ``X u E``.

Strong mode: ``E`` is detected when that system has only the zero solution.
Weak mode: every solution must vanish on ``X`` and satisfy ``Xi^X_E d^E = 0``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .coincidence import CoincidenceMatrix


def _normalize(cm: CoincidenceMatrix, e_config: Iterable[int]) -> tuple[int, ...]:
    e = tuple(sorted(set(int(v) for v in e_config)))
    for v in e:
        if not 0 <= v < cm.n:
            raise IndexError(f"output vertex {v + 1} outside 1..{cm.n}")
    return e


def constraint_system(cm: CoincidenceMatrix, e_config: Iterable[int]) -> np.ndarray:
    """``Xi^I_{X u E}``: rows are integration vertices, columns inputs then ``E``.

    ``e_config`` holds 0-based output indices.
    """
    e = _normalize(cm, e_config)
    k = cm.k
    rows = [k + y for y in range(cm.n) if y not in e]
    cols = list(range(k)) + [k + v for v in e]
    return cm.xi[np.ix_(rows, cols)].copy()


def wc1_rows(cm: CoincidenceMatrix, e_config: Iterable[int]) -> np.ndarray:
    """Linear forms ``d^X`` and ``Xi^X_E d^E`` on the ``X u E`` unknowns."""
    e = _normalize(cm, e_config)
    k = cm.k
    unit = np.hstack([np.eye(k, dtype=np.uint8), np.zeros((k, len(e)), np.uint8)])
    cross = np.hstack(
        [np.zeros((k, k), np.uint8), cm.xi[np.ix_(range(k), [k + v for v in e])]]
    )
    return np.vstack([unit, cross]).astype(np.uint8)


def detect_strong(cm: CoincidenceMatrix, e_config: Iterable[int]) -> bool:
    return gf2.solve_homogeneous(constraint_system(cm, e_config))


def detect_weak(cm: CoincidenceMatrix, e_config: Iterable[int]) -> bool:
    """Every solution of the constraint system satisfies ``d^X = 0`` and
    ``Xi^X_E d^E = 0``."""
    system = constraint_system(cm, e_config)
    forms = wc1_rows(cm, e_config)
    return all(not gf2.matmul(forms, d).any() for d in gf2.kernel(system))


def detect_weak_stacked(cm: CoincidenceMatrix, e_config: Iterable[int]) -> bool:
    """Only the zero vector solves the constraint system together with the
    ``d^X = 0``, ``Xi^X_E d^E = 0`` rows.

    Kept for comparison with :func:`detect_weak`; it is not a detection
    criterion (it can accept configurations that the code does not detect).
    """
    system = constraint_system(cm, e_config)
    return gf2.solve_homogeneous(np.vstack([system, wc1_rows(cm, e_config)]))


def configurations(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """All output subsets with at most ``max_size`` members, by size then lexicographic."""
    for size in range(min(max_size, n) + 1):
        yield from itertools.combinations(range(n), size)


@dataclass(frozen=True)
class ConfigVerdict:
    config: tuple[int, ...]
    strong: bool
    weak: bool

    def verdict(self, mode: str) -> bool:
        return self.strong if mode == "strong" else self.weak


@dataclass
class DetectionReport:
    e: int
    mode: str
    per_config: list[ConfigVerdict] = field(default_factory=list)

    @property
    def detected(self) -> int:
        return sum(v.verdict(self.mode) for v in self.per_config)

    @property
    def first_failure(self) -> ConfigVerdict | None:
        for v in self.per_config:
            if not v.verdict(self.mode):
                return v
        return None

    @property
    def corrects_e(self) -> int:
        """Largest ``t <= e`` with every configuration of size ``<= 2t`` detected;
        ``-1`` when even the empty configuration fails."""
        fail = self.first_failure
        if fail is None:
            return self.e
        return (len(fail.config) - 1) // 2 if fail.config else -1

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def _verdict(cm: CoincidenceMatrix, config: tuple[int, ...]) -> ConfigVerdict:
    return ConfigVerdict(config, detect_strong(cm, config), detect_weak(cm, config))


def iter_verdicts(cm: CoincidenceMatrix, max_size: int) -> Iterator[ConfigVerdict]:
    for config in configurations(cm.n, max_size):
        yield _verdict(cm, config)


def verify_correction(
    cm: CoincidenceMatrix, e: int, mode: str = "strong", threads: int = 1
) -> DetectionReport:
    """Evaluate every configuration with ``|E| <= 2e`` (including ``E = {}``)."""
    if mode not in ("strong", "weak"):
        raise ValueError(f"mode must be 'strong' or 'weak', got {mode!r}")
    if 2 * e > cm.n:
        raise ValueError(f"2e = {2 * e} exceeds the {cm.n} output vertices")
    configs = list(configurations(cm.n, 2 * e))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            verdicts = list(pool.map(lambda c: _verdict(cm, c), configs))
    else:
        verdicts = [_verdict(cm, c) for c in configs]
    return DetectionReport(e, mode, verdicts)
