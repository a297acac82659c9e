import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htwist.rings import ZZ, QQ, GF
from htwist.sparse import (
    SparseMatrix,
    field_kernel_basis,
    field_rank,
    field_solve,
    invariant_factors,
    is_surjective_onto_cokernel_zero,
    kernel_basis,
    smith_normal_form,
    solve,
    z_kernel_basis,
    z_rank,
    z_solve,
)


def mat(rows, ring=ZZ):
    return SparseMatrix.from_rows(ring, rows)


def is_unimodular(U):
    # determinant +-1 via SNF of U itself: all invariant factors 1 and full rank
    facs = invariant_factors(U)
    return len(facs) == U.nrows == U.ncols and all(f == 1 for f in facs)


def test_snf_spec_examples():
    # [[2,4],[6,8]] -> diag(2,4): derived by independent row/column reduction
    D, U, V = smith_normal_form(mat([[2, 4], [6, 8]]))
    assert [D[0, 0], D[1, 1]] == [2, 4]
    assert U @ mat([[2, 4], [6, 8]]) @ V == D
    # identity stays identity
    D, _, _ = smith_normal_form(mat([[1, 0], [0, 1]]))
    assert [D[0, 0], D[1, 1]] == [1, 1]
    # zero matrix
    D, _, _ = smith_normal_form(mat([[0]]))
    assert D.is_zero()


def test_snf_divisibility_and_transforms():
    M = mat([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    D, U, V = smith_normal_form(M)
    assert U @ M @ V == D
    facs = invariant_factors(M)
    for a, b in zip(facs, facs[1:]):
        assert b % a == 0
    assert is_unimodular(U) and is_unimodular(V)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.integers(0, 10**6),
)
def test_snf_random_matches_sympy(n, m, seed):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
    M = mat(rows)
    D, U, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert is_unimodular(U) and is_unimodular(V)
    ours = invariant_factors(M)
    S = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
    theirs = sorted(abs(S[i, i]) for i in range(min(n, m)) if S[i, i] != 0)
    assert sorted(ours) == theirs


def test_z_kernel_and_solve():
    M = mat([[2, 4], [6, 8]])
    K = z_kernel_basis(M)
    assert K.ncols == 0
    M2 = mat([[1, 2, 3]])
    K2 = z_kernel_basis(M2)
    assert K2.ncols == 2
    assert (M2 @ K2).is_zero()
    # exact solve: 2x = 4 solvable, 2x = 3 not
    assert z_solve(mat([[2]]), mat([[4]])) == mat([[2]])
    assert z_solve(mat([[2]]), mat([[3]])) is None


def test_field_ops():
    M = mat([[2, 4], [6, 8]], QQ)
    assert field_rank(M) == 2
    K = field_kernel_basis(mat([[1, 2, 3]], QQ))
    assert K.ncols == 2
    X = field_solve(M, SparseMatrix.identity(QQ, 2))
    assert M @ X == SparseMatrix.identity(QQ, 2)
    M5 = mat([[2, 4], [6, 8]], GF(5))
    # det = -8 = 2 mod 5, invertible
    assert field_rank(M5) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_kernel_is_saturated_and_solve_consistent(n, m, seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
    M = mat(rows)
    K = kernel_basis(M)
    assert (M @ K).is_zero()
    assert z_rank(K) == K.ncols  # independent columns
    # rank-nullity over Q agrees
    MQ = mat(rows, QQ)
    assert K.ncols == m - field_rank(MQ)
    # anything M maps out is solvable back
    X = SparseMatrix.from_rows(ZZ, [[rng.randint(-3, 3)] for _ in range(m)])
    B = M @ X
    Y = solve(M, B)
    assert Y is not None and M @ Y == B


def test_cokernel_surjectivity():
    assert is_surjective_onto_cokernel_zero(mat([[1, 0], [0, 1]]))
    assert not is_surjective_onto_cokernel_zero(mat([[2, 0], [0, 1]]))
    assert is_surjective_onto_cokernel_zero(mat([[2, 0], [0, 1]], QQ))
    assert not is_surjective_onto_cokernel_zero(mat([[1, 1], [1, 1]], QQ))
