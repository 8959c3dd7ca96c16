"""Labelled configuration counts and the covering-space index check."""

import math

import pytest

from bbg import (
    Parameters,
    ParameterError,
    brute_force_labelled_count,
    build_conf,
    labelled_cell_count,
    verify_cover_index,
)
from bbg.covers import labelled_cell_counts


def test_labelled_zero_cells_are_arrangements():
    # d = 0: place r robots and R ghosts on T named vertices
    for r, n, N in [(2, 2, 2), (2, 3, 3), (3, 4, 5)]:
        p = Parameters.for_robots(r, n, N)
        assert labelled_cell_count(p, 0) == math.factorial(p.T)


def test_labelled_counts_known():
    p = Parameters.for_robots(2, 3, 3)
    assert [labelled_cell_count(p, d) for d in range(4)] == [720, 1728, 864, 0]
    q = Parameters.for_robots(2, 2, 2)
    assert [labelled_cell_count(q, d) for d in range(3)] == [24, 32, 8]


def test_labelled_count_vanishes_beyond_range():
    p = Parameters.for_robots(2, 3, 3)
    assert labelled_cell_count(p, 4) == 0  # 2d exceeds T
    assert labelled_cell_count(p, 50) == 0


def test_labelled_cell_counts_container():
    p = Parameters.for_robots(2, 3, 3)
    lc = labelled_cell_counts(p)
    assert lc.parameters == p
    assert lc.counts == (720, 1728, 864)
    assert labelled_cell_counts(p, dmax=1).counts == (720, 1728)


def test_brute_force_agrees():
    for r, n, N in [(2, 2, 2), (2, 2, 3), (3, 3, 3), (2, 3, 3), (3, 2, 4)]:
        p = Parameters.for_robots(r, n, N)
        for d in range(min(p.as_tuple()) + 1):
            assert brute_force_labelled_count(p, d) == labelled_cell_count(p, d), (
                p,
                d,
            )


def test_brute_force_size_cap():
    with pytest.raises(ParameterError):
        brute_force_labelled_count(Parameters.for_robots(4, 4, 5), 0)


def test_cover_identity_via_unlabelled_complexes():
    # r! R! times the unlabelled count equals the labelled count, and the
    # transpose complex gives the same numbers
    p = Parameters.for_robots(2, 3, 3)
    C = build_conf(2, 3, 3)
    deck = math.factorial(p.r) * math.factorial(p.R)
    for d, f in enumerate(C.f_vector()):
        assert deck * f == labelled_cell_count(p, d)


def test_verify_cover_index():
    check = verify_cover_index(Parameters.for_robots(2, 3, 3))
    assert check.ok
    assert [(row.d, row.labelled) for row in check.rows] == [
        (0, 720),
        (1, 1728),
        (2, 864),
    ]
    for row in check.rows:
        assert row.labelled == row.robot_side == row.transpose_side
        assert row.ok


def test_verify_cover_index_asymmetric():
    check = verify_cover_index(Parameters.for_robots(2, 2, 4))
    assert check.ok
    assert all(row.ok for row in check.rows)


def test_verify_cover_index_dmax():
    check = verify_cover_index(Parameters.for_robots(2, 3, 3), dmax=1)
    assert [row.d for row in check.rows] == [0, 1]
