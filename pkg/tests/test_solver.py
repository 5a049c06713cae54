import numpy as np
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from dialgebra import COMPLEX, RATIONAL
from dialgebra.solver import (Matrix, in_span, invert, nullspace, rank, rref,
                              rref_span, solve_affine)

entry = st.integers(min_value=-4, max_value=4)


def rational_matrix(rows):
    return Matrix.from_rows([[mpq(v) for v in r] for r in rows], RATIONAL,
                            cols=len(rows[0]))


@given(st.lists(st.lists(entry, min_size=4, max_size=4), min_size=2,
                max_size=6))
@settings(max_examples=60)
def test_rank_matches_numpy(rows):
    M = rational_matrix(rows)
    expected = np.linalg.matrix_rank(np.array(rows, dtype=float))
    assert rank(M) == expected


@given(st.lists(st.lists(entry, min_size=5, max_size=5), min_size=3,
                max_size=5))
@settings(max_examples=60)
def test_rank_plus_nullity(rows):
    M = rational_matrix(rows)
    assert rank(M) + nullspace(M).dim == 5


def test_nullspace_vectors_are_in_kernel():
    M = rational_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    space = nullspace(M)
    assert space.dim == 1
    for v in space.vectors(RATIONAL):
        out = M.mul_vec(v.coords)
        assert all(x == 0 for x in out)


def test_rref_is_canonical():
    # same row space, same rref
    a = rational_matrix([[1, 2], [3, 4]])
    b = rational_matrix([[4, 6], [1, 2]])  # row ops of a
    ra, pa = rref(a)
    rb, pb = rref(b)
    assert pa == pb
    assert ra[:len(pa)] == rb[:len(pb)]


def test_complex_rref_uses_eps():
    M = Matrix.from_rows([[1.0 + 0j, 1.0 + 0j],
                          [1.0 + 1e-13j, 1.0 + 0j]], COMPLEX, cols=2)
    assert rank(M) == 1  # the perturbation is below tolerance


def test_solve_affine_consistent():
    M = rational_matrix([[1, 0], [0, 1], [1, 1]])
    particular, homogeneous = solve_affine(M, [mpq(2), mpq(3), mpq(5)])
    assert particular == [mpq(2), mpq(3)]
    assert homogeneous.dim == 0


def test_solve_affine_inconsistent():
    M = rational_matrix([[1, 0], [1, 0]])
    assert solve_affine(M, [mpq(1), mpq(2)]) is None


def test_solve_affine_underdetermined():
    M = rational_matrix([[1, 1]])
    particular, homogeneous = solve_affine(M, [mpq(4)])
    assert particular[0] + particular[1] == 4
    assert homogeneous.dim == 1


def test_invert_roundtrip():
    rows = [[mpq(2), mpq(1)], [mpq(1), mpq(1)]]
    inv = invert(rows, RATIONAL)
    prod = [[sum(rows[i][k] * inv[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_invert_singular_returns_none():
    assert invert([[mpq(1), mpq(2)], [mpq(2), mpq(4)]], RATIONAL) is None


def test_rref_span_dedupes():
    vecs = [[mpq(1), mpq(0)], [mpq(2), mpq(0)], [mpq(1), mpq(1)]]
    space = rref_span(vecs, 2, RATIONAL)
    assert space.dim == 2


def test_in_span():
    space = rref_span([[mpq(1), mpq(1), mpq(0)]], 3, RATIONAL)
    assert in_span(space, [mpq(2), mpq(2), mpq(0)], RATIONAL)
    assert not in_span(space, [mpq(1), mpq(0), mpq(0)], RATIONAL)


def test_zero_matrix_nullspace_is_everything():
    M = Matrix.from_rows([[mpq(0)] * 3], RATIONAL, cols=3)
    assert nullspace(M).dim == 3
