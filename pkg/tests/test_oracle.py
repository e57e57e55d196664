import numpy as np
import pytest

from fixtures import XI
from graphcode.codes import five_qubit_code, gottesman_8_3_3
from graphcode.coincidence import CoincidenceMatrix, attach_inputs
from graphcode.detection import configurations, detect_strong
from graphcode.graphs import Graph, local_complement
from graphcode.oracle import (
    CodeSpace,
    NotOrthogonal,
    TooManyQubits,
    apply_local,
    apply_pauli,
    codespace_from_coincidence,
    cross_validate,
    detects,
    graph_state,
    kl_check,
    lc_unitary,
    overlap,
    paulis_on,
    paulis_up_to_weight,
)
from graphcode.pauli import Pauli, parse_pauli
from graphcode.pipeline import oracle_codespace


def test_graph_state_amplitudes():
    psi = graph_state(Graph.complete(2))
    assert np.allclose(psi, np.array([1, 1, 1, -1]) / 2)


def test_apply_pauli_matches_dense_matrix():
    rng = np.random.default_rng(3)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    for text in ["XYZ", "-iZIX", "IYY"]:
        p = parse_pauli(text, 3)
        assert np.allclose(apply_pauli(psi, p), p.matrix() @ psi)


def test_graph_stabilizers():
    g = Graph.cycle(5)
    psi = graph_state(g)
    for i in range(5):
        z = g.adjacency[i].copy()
        x = np.zeros(5, np.uint8)
        x[i] = 1
        assert np.allclose(apply_pauli(psi, Pauli(z, x)), psi, atol=1e-12)


def test_lc_unitary():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    out = apply_local(graph_state(g), lc_unitary(g, 1))
    assert abs(overlap(out, graph_state(local_complement(g, 1))) - 1) < 1e-9


def test_cap():
    with pytest.raises(TooManyQubits, match="raise the cap"):
        graph_state(Graph.empty(15))


def test_not_orthogonal():
    with pytest.raises(NotOrthogonal):
        CodeSpace(np.array([[1, 0], [1, 0]], dtype=complex))


def test_pauli_counts():
    assert sum(1 for _ in paulis_up_to_weight(8, 2)) == 276
    assert sum(1 for _ in paulis_on(3, [0, 1])) == 16
    assert sum(1 for _ in paulis_on(3, [0, 1], exact=True)) == 9


def test_gottesman_distance_three():
    cs = oracle_codespace(gottesman_8_3_3())
    assert cs.dimension == 8
    assert kl_check(cs, paulis_up_to_weight(8, 2)).ok
    res = kl_check(cs, paulis_up_to_weight(8, 3))
    assert not res.ok and res.witness[0].weight == 3


def test_five_cycle_code_matches_five_qubit_code():
    cm = attach_inputs(Graph.cycle(5), np.ones((1, 5), np.uint8))
    a = codespace_from_coincidence(cm)
    b = oracle_codespace(five_qubit_code())
    for e in configurations(5, 3):
        assert detects(a, e) == detects(b, e)


def test_printed_xi_oracle_agrees_with_strong_detection():
    cm = CoincidenceMatrix(3, 8, XI)
    cs = codespace_from_coincidence(cm)
    rep = cross_validate(cm, cs, 1, "strong")
    assert rep.ok
    assert sum(not o for _, _, o in rep.rows) == 16
    assert all(detect_strong(cm, e) == o for e, _, o in rep.rows)
