from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.linalg import Mat, block_matrix, kron, nullspace_basis, solve_in_basis, sparse_nullspace
from preproj.scalars import gauss

small = st.integers(-3, 3).map(Fraction)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = rows or draw(st.integers(1, 4))
    c = cols or draw(st.integers(1, 4))
    return Mat([[draw(small) for _ in range(c)] for _ in range(r)], c)


@given(matrices())
def test_nullspace_is_kernel_with_right_dimension(m):
    k = m.nullspace()
    assert (m @ k).is_zero()
    assert k.ncols == m.ncols - m.rank()


@given(matrices(3, 3))
def test_inverse(m):
    if m.is_invertible():
        assert m @ m.inverse() == Mat.identity(3)
    else:
        with pytest.raises(ArithmeticError):
            m.inverse()


@settings(max_examples=50)
@given(matrices(), matrices())
def test_sparse_nullspace_matches_dense(a, b):
    rows = [[x for x in row] for row in a.rows]
    eqs = [{j: v for j, v in enumerate(row) if v} for row in rows]
    sparse = sparse_nullspace(eqs, a.ncols)
    dense = nullspace_basis(rows, a.ncols)
    assert len(sparse) == dense.ncols
    for vec in sparse:
        for eq in eqs:
            assert sum(c * vec.get(j, 0) for j, c in eq.items()) == 0


def test_matmul_shapes_and_gaussian_entries():
    i = gauss(0, 1)
    m = Mat([[1, i], [0, 1]])
    assert (m @ m)[0, 1] == 2 * i
    with pytest.raises(ValueError):
        Mat([[1, 2]]) @ Mat([[1, 2]])
    assert Mat.zeros(0, 2).shape == (0, 2)
    assert (Mat.zeros(2, 0) @ Mat.zeros(0, 3)).is_zero()


def test_kron_and_blocks():
    a = Mat([[1, 2], [3, 4]])
    k = kron(Mat.identity(2), a)
    assert k.block(2, 4, 2, 4) == a
    assert k.block(0, 2, 2, 4).is_zero()
    b = block_matrix({(0, 0): a, (1, 1): Mat([[5]])}, [2, 1], [2, 1])
    assert b[2, 2] == 5 and b[0, 2] == 0


def test_solve_in_basis():
    basis = Mat([[1, 0], [1, 1], [0, 1]])
    target = Mat([[2], [5], [3]])
    coeffs = solve_in_basis(basis, target)
    assert basis @ coeffs == target
