import random

import pytest

from hullcodes.gf import Field
from hullcodes.linalg import (
    LinalgError,
    Matrix,
    determinant,
    dual_generator,
    interpolate,
    nullspace,
    poly_add,
    poly_deg,
    poly_eval,
    poly_from_roots,
    poly_mul,
    poly_pow,
    rank,
    row_space_equal,
    rref,
)

F5 = Field(5)
F13 = Field(13)


def test_rref_and_rank():
    M = Matrix(F5, [[1, 2, 3], [2, 4, 1], [0, 0, 2]])
    R, rk, pivots = rref(M)
    assert rk == 2
    assert pivots == (0, 2)
    assert R.rows[0] == (1, 2, 0)
    assert R.rows[1] == (0, 0, 1)
    assert rank(Matrix.identity(F5, 4)) == 4


def test_nullspace_annihilates():
    rng = random.Random(7)
    for _ in range(20):
        nr, nc = rng.randint(1, 5), rng.randint(1, 6)
        M = Matrix(F13, [[rng.randrange(13) for _ in range(nc)] for _ in range(nr)])
        N = nullspace(M)
        assert N.nrows == nc - rank(M)
        for row in N.rows:
            prod = M.matmul(Matrix(F13, [row], ncols=nc).transpose())
            assert all(x == 0 for r in prod.rows for x in r)


def test_dual_generator_orthogonality():
    G = Matrix(F13, [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]])
    H = dual_generator(G)
    assert H.nrows == 3
    prod = G.matmul(H.transpose())
    assert all(x == 0 for r in prod.rows for x in r)
    with pytest.raises(LinalgError):
        dual_generator(Matrix(F13, [[1, 2], [2, 4]]))


def test_row_space_equal():
    A = Matrix(F5, [[1, 2, 3], [0, 1, 1]])
    B = Matrix(F5, [[2, 4, 1], [1, 3, 4]])  # row ops of A
    C = Matrix(F5, [[1, 0, 0], [0, 1, 0]])
    assert row_space_equal(A, B)
    assert not row_space_equal(A, C)


def test_determinant():
    assert determinant(Matrix(F5, [[2, 1], [3, 4]])) == (2 * 4 - 1 * 3) % 5
    assert determinant(Matrix(F5, [[1, 2], [2, 4]])) == 0
    # swap changes sign
    assert determinant(Matrix(F5, [[3, 4], [2, 1]])) == (-(2 * 4 - 3)) % 5
    with pytest.raises(LinalgError):
        determinant(Matrix(F5, [[1, 2, 3]]))


def test_poly_basics():
    f = F13
    a = [1, 2, 3]  # 3x^2 + 2x + 1
    b = [12, 1]  # x - 1
    assert poly_deg([]) == -1
    assert poly_add(f, a, [12, 11, 10]) == []
    prod = poly_mul(f, a, b)
    for x in range(13):
        assert poly_eval(f, prod, x) == f.mul(poly_eval(f, a, x), poly_eval(f, b, x))
    assert poly_pow(f, b, 3) == poly_mul(f, b, poly_mul(f, b, b))
    roots = poly_from_roots(f, [2, 5])
    assert poly_eval(f, roots, 2) == 0 and poly_eval(f, roots, 5) == 0
    assert roots[-1] == 1  # monic


def test_interpolation():
    f = F13
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 8)
        xs = rng.sample(range(13), n)
        ys = [rng.randrange(13) for _ in range(n)]
        p = interpolate(f, list(zip(xs, ys)))
        assert poly_deg(p) <= n - 1
        for x, y in zip(xs, ys):
            assert poly_eval(f, p, x) == y
    with pytest.raises(LinalgError):
        interpolate(f, [(1, 2), (1, 3)])
    with pytest.raises(LinalgError):
        interpolate(f, [])


def test_empty_matrix_needs_ncols():
    with pytest.raises(LinalgError):
        Matrix(F5, [])
    M = Matrix(F5, [], ncols=3)
    assert M.nrows == 0 and M.ncols == 3
    assert rank(M) == 0
