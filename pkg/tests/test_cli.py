import json

import numpy as np
import pytest

from fixtures import CODES, XI
from graphcode.cli import main
from graphcode.exports import format_xi_text
from graphcode.coincidence import CoincidenceMatrix


@pytest.fixture
def printed_xi(tmp_path):
    path = tmp_path / "printed.txt"
    path.write_text(format_xi_text(CoincidenceMatrix(3, 8, XI)))
    return path


def test_convert_writes_exports(tmp_path, capsys):
    out = tmp_path / "g"
    assert main(["convert", str(CODES / "gottesman_8_3_3.txt"), "-o", str(out)]) == 0
    for name in ["gamma.txt", "xi.txt", "xi.json", "graph.dot", "record.json"]:
        assert (out / name).exists()
    dot = (out / "graph.dot").read_text()
    assert dot.count("square") == 3 and dot.count("circle") == 8
    assert "lc sequence" in capsys.readouterr().out


def test_convert_is_byte_identical(tmp_path):
    for d in ("a", "b"):
        main(["convert", str(CODES / "five_qubit.txt"), "-o", str(tmp_path / d)])
    for name in ["xi.json", "graph.dot", "record.json"]:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_convert_five_qubit(tmp_path):
    assert main(["convert", str(CODES / "five_qubit.txt"), "-o", str(tmp_path)]) == 0
    data = json.loads((tmp_path / "xi.json").read_text())
    assert data["k"] == 1 and data["n"] == 5


def test_malformed_code_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\nXX\nXQ\nZZ\n")
    assert main(["convert", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_verify_pipeline_record(tmp_path, capsys):
    main(["convert", str(CODES / "gottesman_8_3_3.txt"), "-o", str(tmp_path)])
    report = tmp_path / "report.json"
    assert main(["verify", str(tmp_path / "record.json"), "--e", "1", "--json", str(report)]) == 0
    assert "37/37" in capsys.readouterr().out
    assert json.loads(report.read_text())["detected"] == 37


def test_verify_e2_fails_with_first_config(tmp_path, capsys):
    main(["convert", str(CODES / "gottesman_8_3_3.txt"), "-o", str(tmp_path)])
    assert main(["verify", str(tmp_path / "xi.txt"), "--e", "2"]) == 1
    assert "first failing E" in capsys.readouterr().out


def test_verify_printed_xi_fails(printed_xi, capsys):
    assert main(["verify", str(printed_xi), "--e", "1"]) == 1
    assert "21/37" in capsys.readouterr().out


def test_verify_rejects_asymmetric(tmp_path, capsys):
    m = XI.copy()
    m[0, 5] ^= 1
    path = tmp_path / "asym.txt"
    path.write_text("3 8\n" + "".join(" ".join(map(str, r)) + "\n" for r in m))
    assert main(["verify", str(path)]) == 2
    assert "symmetric" in capsys.readouterr().err


@pytest.mark.parametrize("name", ["gottesman_8_3_3.txt", "five_qubit.txt"])
def test_crosscheck(name, capsys):
    assert main(["crosscheck", str(CODES / name), "--e", "1"]) == 0
    assert "0 disagreements" in capsys.readouterr().out


def test_crosscheck_cap(tmp_path, capsys):
    code = tmp_path / "big.txt"
    lines = ["15 0"] + [f"Z{i}" for i in range(1, 16)]
    code.write_text("\n".join(lines) + "\n")
    assert main(["crosscheck", str(code)]) == 2
    assert "raise the cap" in capsys.readouterr().err


def test_export_formats(printed_xi, tmp_path, capsys):
    assert main(["export", str(printed_xi), "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.count(" -- ") == int(np.triu(XI).sum())
    out = tmp_path / "xi.json"
    assert main(["export", str(printed_xi), "--format", "json", "-o", str(out)]) == 0
    assert json.loads(out.read_text())["xi"][0] == "00011100111"
    assert main(["export", str(printed_xi), "--format", "matrix"]) == 0
    assert capsys.readouterr().out.startswith("3 8\n")


def test_export_unknown_format(printed_xi, capsys):
    assert main(["export", str(printed_xi), "--format", "svg"]) == 2
