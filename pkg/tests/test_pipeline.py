import json

import numpy as np
import pytest

from graphcode import gf2
from graphcode.codes import five_qubit_code, gottesman_8_3_3, steane_code, trivial_code
from graphcode.exports import (
    UnknownFormat,
    XiFileError,
    export,
    format_xi_text,
    parse_xi_text,
    to_dot,
    xi_from_json,
    xi_to_json,
)
from graphcode.coincidence import CoincidenceMatrix, InvalidXi, graph_form_stabilizer
from graphcode.graphs import Graph
from graphcode.pipeline import PipelineRecord, convert, replay, run_pipeline


@pytest.fixture(scope="module")
def gottesman_record():
    return run_pipeline(gottesman_8_3_3(), e=1, mode="strong", oracle=True)


def test_gottesman_pipeline(gottesman_record):
    r = gottesman_record
    assert r.coincidence.k == 3 and r.coincidence.n == 8
    assert r.detection.ok and r.detection.detected == 37
    assert r.agreement.ok
    assert not r.conditions_satisfied


def test_kernel_reproduces_stabilizer(gottesman_record):
    r = gottesman_record
    cm = r.coincidence
    sm = graph_form_stabilizer(cm.gamma, gf2.kernel(cm.input_block))
    assert gf2.same_row_space(sm.binary, r.attached_support)


def test_replay(gottesman_record):
    assert replay(gottesman_record)


def test_record_json_round_trip(gottesman_record):
    data = json.loads(json.dumps(gottesman_record.to_dict()))
    again = PipelineRecord.from_dict(data)
    assert again == gottesman_record
    assert np.array_equal(again.xi, gottesman_record.xi)


def test_record_schema_checked(gottesman_record):
    data = gottesman_record.to_dict()
    data["schema"] = "other/9"
    with pytest.raises(ValueError):
        PipelineRecord.from_dict(data)


def test_five_qubit_pipeline():
    r = run_pipeline(five_qubit_code(), e=1, oracle=True)
    assert r.conditions_satisfied
    assert r.coincidence.k == 1 and r.coincidence.n == 5
    assert r.detection.ok and r.agreement.ok


def test_steane_pipeline_weak():
    r = run_pipeline(steane_code(), e=1, mode="weak", oracle=True)
    assert r.detection.ok and r.agreement.ok


def test_trivial_code_k_zero():
    r = convert(trivial_code(3, 0))
    assert r.coincidence.k == 0


def test_determinism():
    a = convert(five_qubit_code()).to_dict()
    b = convert(five_qubit_code()).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_xi_text_round_trip(gottesman_record):
    cm = gottesman_record.coincidence
    assert np.array_equal(parse_xi_text(format_xi_text(cm)).xi, cm.xi)


def test_xi_text_errors():
    with pytest.raises(XiFileError) as info:
        parse_xi_text("1 1\n01\n12\n")
    assert info.value.line == 3
    with pytest.raises(InvalidXi):
        parse_xi_text("0 2\n00\n10\n")


def test_xi_json_round_trip(gottesman_record):
    cm = gottesman_record.coincidence
    data = xi_to_json(cm)
    assert set(data["blocks"]) == {"input_input", "input_output", "output_output"}
    assert np.array_equal(xi_from_json(data).xi, cm.xi)


def test_dot_shapes_and_edges(gottesman_record):
    cm = gottesman_record.coincidence
    dot = to_dot(cm)
    assert dot.count("shape=square") == 3 and dot.count("shape=circle") == 8
    assert dot.count(" -- ") == int(np.triu(cm.xi).sum())


def test_dot_without_inputs():
    dot = to_dot(CoincidenceMatrix.assemble(Graph.cycle(4), np.zeros((0, 4), np.uint8)))
    assert "square" not in dot and dot.count("circle") == 4


def test_unknown_format(gottesman_record):
    with pytest.raises(UnknownFormat):
        export(gottesman_record.coincidence, "svg")
