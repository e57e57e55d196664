import numpy as np
import pytest

from graphcode.pauli import (
    BadSymbol,
    DuplicateTarget,
    IndexOutOfRange,
    LengthMismatch,
    Pauli,
    conjugate,
    parse_pauli,
    symplectic_product,
    to_sparse_text,
    to_text,
)


def test_dense_and_sparse_agree():
    assert parse_pauli("IXIIYI", 6) == parse_pauli("X2 Y5", 6)


def test_signs():
    assert parse_pauli("-i XZ", 2).phase == 3
    assert parse_pauli("+i XZ", 2).phase == 1
    assert parse_pauli("-XZ", 2).phase == 2


def test_identity_text():
    p = parse_pauli("I", 4)
    assert p == Pauli.identity(4)
    assert to_sparse_text(p) == "I"


@pytest.mark.parametrize("text", ["+XYZI", "-iZZ", "+iY"])
def test_text_round_trip(text):
    n = len(text.lstrip("+-i"))
    assert to_text(parse_pauli(text, n)) == text


@pytest.mark.parametrize(
    "text, n, exc",
    [("XQ", 2, BadSymbol), ("XYZ", 2, LengthMismatch), ("X9", 3, IndexOutOfRange), ("A1", 3, BadSymbol)],
)
def test_parse_errors(text, n, exc):
    with pytest.raises(exc):
        parse_pauli(text, n)


def test_product_phase_xz_is_minus_i_y():
    x, z = parse_pauli("X", 1), parse_pauli("Z", 1)
    assert x * z == parse_pauli("-iY", 1)
    assert z * x == parse_pauli("iY", 1)


def test_product_matches_matrices():
    a, b = parse_pauli("XYZI", 4), parse_pauli("-iYYXZ", 4)
    assert np.allclose((a * b).matrix(), a.matrix() @ b.matrix())


def test_symplectic_product():
    assert symplectic_product(parse_pauli("XX", 2), parse_pauli("ZZ", 2)) == 0
    assert symplectic_product(parse_pauli("XI", 2), parse_pauli("ZI", 2)) == 1


@pytest.mark.parametrize(
    "gate, targets, before, after",
    [
        ("H", 0, "X", "Z"),
        ("H", 0, "Y", "-Y"),
        ("P", 0, "X", "Y"),
        ("P", 0, "Y", "-X"),
        ("CNOT", (0, 1), "XI", "XX"),
        ("CNOT", (0, 1), "IZ", "ZZ"),
        ("CP", (0, 1), "XI", "XZ"),
    ],
)
def test_conjugation_table(gate, targets, before, after):
    n = len(before)
    assert conjugate(parse_pauli(before, n), gate, targets) == parse_pauli(after, n)


def test_conjugate_rejects_bad_targets():
    p = parse_pauli("XX", 2)
    with pytest.raises(DuplicateTarget):
        conjugate(p, "CNOT", (1, 1))
    with pytest.raises(IndexOutOfRange):
        conjugate(p, "H", 5)
    with pytest.raises(BadSymbol):
        conjugate(p, "T", 0)
