"""End-to-end conversion of a stabilizer code into a verified graph code.

Steps: realize the code as a CWS code, standardize the codeword stabilizer
to a graph, move through the LC orbit to a frame where the inputs can be
attached, attach them, then check detection graph-theoretically and
(optionally) against the state-vector oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .coincidence import (
    AttachmentReport,
    CoincidenceMatrix,
    attach_inputs,
    find_attachment,
    graph_form_stabilizer,
)
from .detection import ConfigVerdict, DetectionReport, verify_correction
from .graphs import Graph, standardize
from .oracle import DEFAULT_CAP, Agreement, CodeSpace, codespace_from_stabilizers, cross_validate
from .pauli import StabilizerMatrix, apply_local_clifford, parse_pauli, to_text
from .stabilizer import StabilizerCode, format_code, parse_code_text, realize_cws

SCHEMA = "graphcode.pipeline/1"


class PipelineError(RuntimeError):
    """An inner failure tagged with the pipeline step that raised it."""

    def __init__(self, step: str, cause: Exception):
        self.step = step
        self.cause = cause
        super().__init__(f"{step}: {cause}")


@dataclass
class PipelineRecord:
    code: StabilizerCode
    cws_stabilizer: np.ndarray
    word_operators: tuple[str, ...]
    hadamard_set: tuple[int, ...]
    diagonal_corrections: tuple[int, ...]
    raw_adjacency: np.ndarray
    basis_change: np.ndarray
    standard_graph: np.ndarray
    frame_support: np.ndarray  # code stabilizer rows (z | x) in the standard graph frame
    lc_sequence: tuple[int, ...]
    attached_support: np.ndarray
    conditions: AttachmentReport
    conditions_satisfied: bool
    coincidence: CoincidenceMatrix
    detection: DetectionReport | None = None
    agreement: Agreement | None = None
    meta: dict = field(default_factory=dict)

    @property
    def xi(self) -> np.ndarray:
        return self.coincidence.xi

    def matrices(self) -> dict[str, np.ndarray]:
        """Every intermediate matrix, keyed by name."""
        return {
            "cws_stabilizer": self.cws_stabilizer,
            "raw_adjacency": self.raw_adjacency,
            "basis_change": self.basis_change,
            "standard_graph": self.standard_graph,
            "frame_support": self.frame_support,
            "attached_support": self.attached_support,
            "input_block": self.coincidence.input_block,
            "gamma": self.coincidence.gamma.adjacency,
            "xi": self.coincidence.xi,
        }

    def to_dict(self) -> dict:
        rep = self.conditions
        out = {
            "schema": SCHEMA,
            "code": {
                "name": self.code.name,
                "claimed_distance": self.code.claimed_distance,
                "text": format_code(self.code),
            },
            "word_operators": list(self.word_operators),
            "hadamard_set": [q + 1 for q in self.hadamard_set],
            "diagonal_corrections": [q + 1 for q in self.diagonal_corrections],
            "lc_sequence": [v + 1 for v in self.lc_sequence],
            "conditions": {
                "i": rep.cond_i,
                "ii": rep.cond_ii,
                "iii": rep.cond_iii,
                "witness": _row(rep.witness_vb) if rep.witness_vb is not None else None,
                "satisfied": self.conditions_satisfied,
            },
            "k": self.coincidence.k,
            "n": self.coincidence.n,
            "matrices": {name: _rows(m) for name, m in self.matrices().items()},
            "detection": detection_to_dict(self.detection) if self.detection else None,
            "agreement": agreement_to_dict(self.agreement) if self.agreement else None,
            "meta": dict(self.meta),
        }
        return out

    @classmethod
    def from_dict(cls, data: dict) -> PipelineRecord:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported record schema {data.get('schema')!r}")
        m = {name: _from_rows(rows) for name, rows in data["matrices"].items()}
        c = data["code"]
        code = parse_code_text(c["text"], name=c["name"])
        code = StabilizerCode(
            code.n, code.k, code.generators, code.logical_x, code.logical_z,
            c["claimed_distance"], c["name"],
        )
        cond = data["conditions"]
        report = AttachmentReport(
            cond["i"], cond["ii"], cond["iii"],
            _from_row(cond["witness"]) if cond["witness"] is not None else None,
        )
        n = data["n"]
        cm = CoincidenceMatrix(data["k"], n, m["xi"])
        det = data.get("detection")
        agr = data.get("agreement")
        return cls(
            code=code,
            cws_stabilizer=m["cws_stabilizer"],
            word_operators=tuple(data["word_operators"]),
            hadamard_set=tuple(q - 1 for q in data["hadamard_set"]),
            diagonal_corrections=tuple(q - 1 for q in data["diagonal_corrections"]),
            raw_adjacency=m["raw_adjacency"],
            basis_change=m["basis_change"],
            standard_graph=m["standard_graph"],
            frame_support=_shape(m["frame_support"], 2 * n),
            lc_sequence=tuple(v - 1 for v in data["lc_sequence"]),
            attached_support=_shape(m["attached_support"], 2 * n),
            conditions=report,
            conditions_satisfied=cond["satisfied"],
            coincidence=cm,
            detection=detection_from_dict(det) if det else None,
            agreement=agreement_from_dict(agr) if agr else None,
            meta=dict(data.get("meta", {})),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PipelineRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def _row(v) -> str:
    return "".join(str(int(b)) for b in np.asarray(v).reshape(-1))


def _rows(m) -> list[str]:
    return [_row(r) for r in np.atleast_2d(np.asarray(m))] if np.asarray(m).size else []


def _from_row(s: str) -> np.ndarray:
    return np.array([int(ch) for ch in s], dtype=np.uint8)


def _from_rows(rows: list[str]) -> np.ndarray:
    if not rows:
        return np.zeros((0, 0), np.uint8)
    return np.vstack([_from_row(r) for r in rows])


def _shape(m: np.ndarray, cols: int) -> np.ndarray:
    return m if m.size else np.zeros((0, cols), np.uint8)


def detection_to_dict(rep: DetectionReport) -> dict:
    return {
        "e": rep.e,
        "mode": rep.mode,
        "detected": rep.detected,
        "total": len(rep.per_config),
        "corrects_e": rep.corrects_e,
        "ok": rep.ok,
        "configurations": [
            {"E": [v + 1 for v in c.config], "strong": c.strong, "weak": c.weak}
            for c in rep.per_config
        ],
    }


def detection_from_dict(data: dict) -> DetectionReport:
    verdicts = [
        ConfigVerdict(tuple(v - 1 for v in c["E"]), c["strong"], c["weak"])
        for c in data["configurations"]
    ]
    return DetectionReport(data["e"], data["mode"], verdicts)


def agreement_to_dict(agr: Agreement) -> dict:
    return {
        "e": agr.e,
        "ok": agr.ok,
        "disagreements": len(agr.disagreements),
        "rows": [{"E": [v + 1 for v in c], "graph": g, "oracle": o} for c, g, o in agr.rows],
    }


def agreement_from_dict(data: dict) -> Agreement:
    rows = [(tuple(v - 1 for v in r["E"]), r["graph"], r["oracle"]) for r in data["rows"]]
    return Agreement(data["e"], rows)


def frame_support(code: StabilizerCode, circuit) -> np.ndarray:
    """Binary rows of the code generators after the standardizing local Clifford."""
    n = code.n
    if not code.generators:
        return np.zeros((0, 2 * n), np.uint8)
    sm = apply_local_clifford(StabilizerMatrix(tuple(code.generators), n), circuit)
    return sm.binary


def convert(code: StabilizerCode, max_states: int = 100_000) -> PipelineRecord:
    """Run realization, standardization and input attachment."""
    n = code.n
    try:
        cws = realize_cws(code)
    except Exception as exc:
        raise PipelineError("realize", exc) from exc
    try:
        std = standardize(cws)
    except Exception as exc:
        raise PipelineError("standardize", exc) from exc
    support = frame_support(code, std.circuit)
    gamma = std.graph
    # generators are products of graph stabilizers: z part = x part times Gamma
    if not np.array_equal(support[:, :n], gf2.matmul(support[:, n:], gamma.adjacency)):
        raise PipelineError("standardize", ValueError("code generators left the graph frame"))
    try:
        found = find_attachment(gamma, support, max_states)
        cm = attach_inputs(found.graph, found.input_block, strict=False)
    except Exception as exc:
        raise PipelineError("attach", exc) from exc
    rebuilt = graph_form_stabilizer(found.graph, gf2.kernel(cm.input_block) if cm.k else np.eye(n))
    if not gf2.same_row_space(rebuilt.binary, found.support):
        raise PipelineError("attach", ValueError("input block does not reproduce the code stabilizer"))
    return PipelineRecord(
        code=code,
        cws_stabilizer=cws.codeword_stabilizer.binary,
        word_operators=tuple(to_text(w) for w in cws.word_operators),
        hadamard_set=std.hadamard_set,
        diagonal_corrections=std.diagonal_corrections,
        raw_adjacency=std.raw_adjacency,
        basis_change=std.basis_change,
        standard_graph=gamma.adjacency,
        frame_support=support,
        lc_sequence=tuple(found.sequence),
        attached_support=found.support,
        conditions=found.report,
        conditions_satisfied=found.satisfied,
        coincidence=cm,
    )


def oracle_codespace(code: StabilizerCode, cap: int = DEFAULT_CAP) -> CodeSpace:
    """Codewords of the original code, independent of the graph construction."""
    cws = realize_cws(code)
    return codespace_from_stabilizers(cws.codeword_stabilizer.generators, cws.word_operators, cap)


def run_pipeline(
    code: StabilizerCode,
    e: int = 1,
    mode: str = "strong",
    oracle: bool = False,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    max_states: int = 100_000,
) -> PipelineRecord:
    """Convert, verify, and optionally cross-validate against the oracle."""
    record = convert(code, max_states)
    try:
        record.detection = verify_correction(record.coincidence, e, mode, threads)
    except Exception as exc:
        raise PipelineError("verify", exc) from exc
    if oracle:
        try:
            cs = oracle_codespace(code, cap)
            record.agreement = cross_validate(record.coincidence, cs, e, mode)
        except Exception as exc:
            raise PipelineError("crosscheck", exc) from exc
    record.meta.update({"e": e, "mode": mode})
    return record


def replay(record: PipelineRecord) -> bool:
    """True iff converting the recorded code again reproduces every matrix bit-exactly."""
    fresh = convert(record.code)
    mine, theirs = record.matrices(), fresh.matrices()
    return (
        mine.keys() == theirs.keys()
        and all(np.array_equal(mine[k], theirs[k]) for k in mine)
        and fresh.lc_sequence == record.lc_sequence
        and fresh.hadamard_set == record.hadamard_set
    )


def words_from_record(record: PipelineRecord):
    n = record.code.n
    return [parse_pauli(w, n) for w in record.word_operators]


def gamma_of(record: PipelineRecord) -> Graph:
    return record.coincidence.gamma
