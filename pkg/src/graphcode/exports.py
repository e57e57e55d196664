"""Reading and writing coincidence matrices: plain text, JSON and DOT."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .coincidence import CoincidenceMatrix, InvalidXi

XI_SCHEMA = "graphcode.xi/1"
FORMATS = ("dot", "json", "matrix")


class UnknownFormat(ValueError):
    def __init__(self, fmt: str):
        self.fmt = fmt
        super().__init__(f"unknown export format {fmt!r}; choose one of {', '.join(FORMATS)}")


class XiFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _bits_line(row) -> str:
    return " ".join(str(int(b)) for b in row)


def format_matrix(m) -> str:
    """Plain ``0/1`` rows separated by spaces."""
    return "".join(_bits_line(r) + "\n" for r in np.atleast_2d(np.asarray(m)))


def format_xi_text(cm: CoincidenceMatrix) -> str:
    return f"{cm.k} {cm.n}\n" + format_matrix(cm.xi)


def parse_xi_text(text: str) -> CoincidenceMatrix:
    """Parse ``k n`` followed by ``n + k`` rows of 0/1 (spaces optional)."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise XiFileError("empty matrix file")
    lineno, header = lines[0]
    try:
        k, n = (int(p) for p in header.split())
    except ValueError:
        raise XiFileError(f"header must be 'k n', got {header!r}", lineno) from None
    size = k + n
    rows = lines[1:]
    if len(rows) != size:
        where = rows[size][0] if len(rows) > size else (rows[-1][0] if rows else lineno)
        raise XiFileError(f"expected {size} rows, found {len(rows)}", where)
    out = []
    for i, body in rows:
        digits = body.replace(" ", "")
        if len(digits) != size or set(digits) - {"0", "1"}:
            raise XiFileError(f"row must hold {size} binary entries", i)
        out.append([int(ch) for ch in digits])
    return CoincidenceMatrix(k, n, np.array(out, dtype=np.uint8).reshape(size, size))


def xi_to_json(cm: CoincidenceMatrix) -> dict:
    """Every block spelled out, plus the full matrix."""

    def rows(m):
        return ["".join(str(int(b)) for b in r) for r in m]

    return {
        "schema": XI_SCHEMA,
        "k": cm.k,
        "n": cm.n,
        "labels": cm.vertex_labels(),
        "blocks": {
            "input_input": rows(cm.xi[: cm.k, : cm.k]),
            "input_output": rows(cm.input_block),
            "output_output": rows(cm.gamma.adjacency),
        },
        "xi": rows(cm.xi),
    }


def xi_from_json(data: dict) -> CoincidenceMatrix:
    if data.get("schema") != XI_SCHEMA:
        raise InvalidXi(f"unsupported schema {data.get('schema')!r}")
    k, n = int(data["k"]), int(data["n"])
    try:
        xi = np.array([[int(ch) for ch in r] for r in data["xi"]], dtype=np.uint8)
    except ValueError as exc:
        raise InvalidXi(f"non-binary entry: {exc}") from None
    if xi.size == 0:
        xi = xi.reshape(k + n, k + n)
    return CoincidenceMatrix(k, n, xi)


def load_xi(path) -> CoincidenceMatrix:
    """Read a coincidence matrix from JSON (a bare Xi or a pipeline record) or text."""
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        if data.get("schema") == XI_SCHEMA:
            return xi_from_json(data)
        from .pipeline import PipelineRecord

        return PipelineRecord.from_dict(data).coincidence
    return parse_xi_text(text)


def to_dot(cm: CoincidenceMatrix, name: str = "graphcode") -> str:
    """Inputs as squares, outputs as circles; one edge per upper-triangle one."""
    labels = cm.vertex_labels()
    out = [f"graph {json.dumps(name)} {{"]
    for i, lab in enumerate(labels):
        shape = "square" if i < cm.k else "circle"
        out.append(f"  v{i} [label={json.dumps(lab)}, shape={shape}];")
    iu, ju = np.nonzero(np.triu(cm.xi))
    for i, j in zip(iu, ju):
        out.append(f"  v{i} -- v{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def dumps_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def export(cm: CoincidenceMatrix, fmt: str, name: str = "graphcode") -> str:
    if fmt == "dot":
        return to_dot(cm, name)
    if fmt == "json":
        return dumps_json(xi_to_json(cm))
    if fmt == "matrix":
        return format_xi_text(cm)
    raise UnknownFormat(fmt)
