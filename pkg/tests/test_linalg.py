"""Exact linear algebra: unit cases plus agreement with the naive oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_nullspace, naive_rref
from skewpairs.linalg import (
    charpoly,
    commutator,
    identity,
    invert,
    in_span,
    joint_eigenspaces,
    mat_mul,
    mat_vec,
    matrix,
    nullspace,
    rank,
    rref,
    solve,
    span_rref,
)

F = Fraction

small_entries = st.integers(min_value=-6, max_value=6)
small_matrix = st.integers(min_value=1, max_value=5).flatmap(
    lambda c: st.lists(
        st.lists(small_entries, min_size=c, max_size=c), min_size=1, max_size=5
    )
)


def test_rref_known_case():
    reduced, pivots = rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == (0, 2)
    assert reduced == ((F(1), F(2), F(0)), (F(0), F(0), F(1)))


def test_rref_rational_rows():
    # singular: the second row is 3x the first
    reduced, pivots = rref([[F(1, 2), F(1, 3)], [F(3, 2), F(1)]])
    assert pivots == (0,)
    assert reduced == ((F(1), F(2, 3)),)


@settings(max_examples=100, deadline=None)
@given(small_matrix)
def test_rref_matches_naive(rows):
    assert rref(rows) == naive_rref(rows)


@settings(max_examples=100, deadline=None)
@given(small_matrix)
def test_nullspace_annihilates_and_matches_naive(rows):
    ncols = len(rows[0])
    ours = nullspace(rows, ncols)
    assert ours == naive_nullspace(rows, ncols)
    a = matrix(rows)
    for v in ours:
        assert all(x == 0 for x in mat_vec(a, v))
    assert rank(rows) + len(ours) == ncols


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_solve_consistency_matches_naive(rows):
    ncols = len(rows[0])
    rhs = [sum(row) for row in rows]  # consistent by construction (x = all ones)
    x = solve(rows, rhs)
    assert x is not None
    a = matrix(rows)
    assert list(mat_vec(a, x)) == [F(r) for r in rhs]


def test_solve_detects_inconsistency():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_invert_round_trip():
    a = matrix([[1, 2], [3, 5]])
    assert mat_mul(a, invert(a)) == identity(2)
    with pytest.raises(ValueError):
        invert(matrix([[1, 2], [2, 4]]))


def test_span_membership():
    basis = span_rref([(1, 0, 1), (0, 1, 1)])
    assert in_span(basis, (2, 3, 5))
    assert not in_span(basis, (0, 0, 1))


def test_charpoly_companion():
    # x^2 - x - 1 companion matrix
    a = matrix([[0, 1], [1, 1]])
    assert charpoly(a) == (F(1), F(-1), F(-1))


def test_joint_eigenspaces_diagonal():
    h1 = matrix([[F(1, 2), 0], [0, F(-1, 2)]])
    h2 = matrix([[0, 0], [0, 0]])
    spaces = joint_eigenspaces(h1, h2)
    assert [key for key, _ in spaces] == [(F(-1, 2), F(0)), (F(1, 2), F(0))]


def test_joint_eigenspaces_conjugated():
    # conjugate diag(1,2) and diag(3,4) by [[1,1],[0,1]]
    t = matrix([[1, 1], [0, 1]])
    ti = invert(t)
    h1 = mat_mul(t, mat_mul(matrix([[1, 0], [0, 2]]), ti))
    h2 = mat_mul(t, mat_mul(matrix([[3, 0], [0, 4]]), ti))
    spaces = joint_eigenspaces(h1, h2)
    keys = [key for key, _ in spaces]
    assert keys == [(F(1), F(3)), (F(2), F(4))]
    for (p, q), vecs in spaces:
        for v in vecs:
            assert mat_vec(h1, v) == tuple(p * x for x in v)
            assert mat_vec(h2, v) == tuple(q * x for x in v)


def test_joint_eigenspaces_rejects_nondiagonalizable():
    nilp = matrix([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        joint_eigenspaces(nilp, matrix([[0, 0], [0, 0]]))


def test_commutator_sanity():
    e = matrix([[0, 1], [0, 0]])
    h = matrix([[F(1, 2), 0], [0, F(-1, 2)]])
    assert commutator(h, e) == e
