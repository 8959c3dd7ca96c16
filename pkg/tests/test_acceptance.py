"""Acceptance gate: every numbered verification criterion at full level.

One test per criterion; each prints its one-line result.  Two criteria are
genuinely red and stay red: the sharpness and puncture claims both break at
the 1x1 board, whose rook complex is a single contractible point (and whose
puncturing leaves the empty complex).  Everything else must pass.
"""

import sys

import pytest

from bbg import verify


@pytest.fixture(scope="module")
def full_run():
    vr = verify.run(level="full")
    for line in vr.lines():
        sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()
    return vr


def _result(vr, number):
    res = next(r for r in vr.results if r.number == number)
    print(res.line())
    return res


def test_criterion_01_vertex_counts(full_run):
    res = _result(full_run, 1)
    assert res.passed, res.line()


def test_criterion_02_type_table(full_run):
    res = _result(full_run, 2)
    assert res.passed, res.line()


def test_criterion_03_chessboard_connectivity(full_run):
    res = _result(full_run, 3)
    assert res.passed, res.line()


def test_criterion_04_link_structure(full_run):
    res = _result(full_run, 4)
    assert res.passed, res.line()


def test_criterion_05_punctured_connectivity(full_run):
    res = _result(full_run, 5)
    assert res.passed, res.line()


def test_criterion_06_surface_links(full_run):
    res = _result(full_run, 6)
    assert res.passed, res.line()


def test_criterion_07_connectivity_bound(full_run):
    res = _result(full_run, 7)
    assert res.passed, res.line()


def test_criterion_08_exceptional_case(full_run):
    res = _result(full_run, 8)
    assert res.passed, res.line()


def test_criterion_09_covering_identity(full_run):
    res = _result(full_run, 9)
    assert res.passed, res.line()


def test_criterion_10_floor_lemma(full_run):
    res = _result(full_run, 10)
    assert res.passed, res.line()


def test_criterion_11_flag_condition(full_run):
    res = _result(full_run, 11)
    assert res.passed, res.line()


def test_criterion_12_duality_criterion(full_run):
    res = _result(full_run, 12)
    assert res.passed, res.line()
