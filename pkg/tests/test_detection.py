import numpy as np
import pytest

from fixtures import SYSTEM_5_7, XI
from graphcode.coincidence import CoincidenceMatrix, attach_inputs
from graphcode.detection import (
    configurations,
    constraint_system,
    detect_strong,
    detect_weak,
    detect_weak_stacked,
    verify_correction,
    wc1_rows,
)
from graphcode.graphs import Graph


@pytest.fixture(scope="module")
def printed():
    return CoincidenceMatrix(3, 8, XI)


@pytest.fixture(scope="module")
def five_cycle():
    return attach_inputs(Graph.cycle(5), np.ones((1, 5), np.uint8))


PRINTED_STRONG_FAILURES = {
    (1, 2), (1, 3), (1, 5), (1, 8), (2, 3), (2, 5), (2, 7), (2, 8),
    (3, 5), (3, 6), (3, 8), (4, 5), (4, 6), (4, 7), (5, 8), (6, 7),
}


def test_system_for_5_7(printed):
    assert np.array_equal(constraint_system(printed, [4, 6]), SYSTEM_5_7)
    assert detect_strong(printed, [4, 6])


def test_printed_xi_strong_failures(printed):
    failures = {
        tuple(v + 1 for v in e) for e in configurations(8, 2) if len(e) == 2 and not detect_strong(printed, e)
    }
    assert failures == PRINTED_STRONG_FAILURES


def test_configuration_count():
    assert len(list(configurations(8, 2))) == 37
    assert list(configurations(3, 1)) == [(), (0,), (1,), (2,)]


def test_five_cycle_corrects_one(five_cycle):
    rep = verify_correction(five_cycle, 1, "strong")
    assert rep.ok and rep.detected == 16 and rep.corrects_e == 1


def test_five_cycle_fails_two(five_cycle):
    rep = verify_correction(five_cycle, 2, "weak")
    assert not rep.ok
    assert len(rep.first_failure.config) == 3
    assert rep.corrects_e == 1


def test_weak_accepts_trivial_kernel(five_cycle):
    for e in configurations(5, 2):
        if detect_strong(five_cycle, e):
            assert detect_weak(five_cycle, e)


def test_stacked_form_is_looser(five_cycle):
    # adding the wc1 rows to the system can only shrink the kernel
    for e in configurations(5, 5):
        if detect_weak(five_cycle, e):
            assert detect_weak_stacked(five_cycle, e)


def test_wc1_rows_shape(printed):
    assert wc1_rows(printed, [0, 1]).shape == (6, 5)


def test_threads_do_not_change_order(printed):
    a = verify_correction(printed, 1, "strong", threads=1)
    b = verify_correction(printed, 1, "strong", threads=4)
    assert a.per_config == b.per_config


def test_bad_arguments(printed):
    with pytest.raises(ValueError):
        verify_correction(printed, 1, "medium")
    with pytest.raises(ValueError):
        verify_correction(printed, 5)
    with pytest.raises(IndexError):
        constraint_system(printed, [8])
