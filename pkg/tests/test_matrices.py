"""Polynomial matrices and exact Fraction linear algebra."""

from fractions import Fraction as F

from bc2mvop.matrices import (PolyMatrix, conjugate_flip, flip_matrix, frac_det,
                              frac_identity, frac_invert, frac_matmul, frac_rank,
                              nullspace_dim, solve_linear)
from bc2mvop.poly import MultiPoly

V = ("x1", "x2")


def x_vars():
    return MultiPoly.var(V, "x1"), MultiPoly.var(V, "x2")


def test_matmul_and_transpose():
    x1, x2 = x_vars()
    A = PolyMatrix.from_rows([[x1, x2], [MultiPoly.zero(V), x1]])
    B = PolyMatrix.from_rows([[MultiPoly.one(V), MultiPoly.zero(V)],
                              [x1, MultiPoly.one(V)]])
    P = A @ B
    assert P.entry(0, 0) == x1 + x2 * x1
    assert P.entry(0, 1) == x2
    assert A.transpose().entry(1, 0) == x2


def test_from_scalar_rows():
    M = PolyMatrix.from_scalar_rows(V, [[1, F(1, 2)], [0, -3]])
    assert M.entry(0, 1) == MultiPoly.const(V, F(1, 2))
    assert M.entry(1, 1) == MultiPoly.const(V, -3)


def test_det_two_by_two():
    x1, x2 = x_vars()
    M = PolyMatrix.from_rows([[x1, x2], [MultiPoly.one(V), x1]])
    assert M.det() == x1 * x1 - x2


def test_scale_add_sub():
    x1, x2 = x_vars()
    M = PolyMatrix.from_rows([[x1]])
    assert (M + M).entry(0, 0) == 2 * x1
    assert (M - M).entry(0, 0).is_zero
    assert M.scale(x2).entry(0, 0) == x1 * x2


def test_substitute_and_evaluate():
    x1, x2 = x_vars()
    M = PolyMatrix.from_rows([[x1 + x2, x1 * x2]])
    vals = M.evaluate({"x1": F(2), "x2": F(3)})
    assert vals == [[F(5), F(6)]]
    sw = M.substitute({"x1": x2, "x2": x1}, V)
    assert sw.entry(0, 0) == x1 + x2
    assert sw.entry(0, 1) == x1 * x2


def test_flip_matrix_is_involution():
    J = flip_matrix(3, V)
    assert J @ J == PolyMatrix.from_scalar_rows(V, frac_identity(3))
    assert J.entry(0, 2) == MultiPoly.one(V)
    assert J.entry(0, 0).is_zero


def test_conjugate_flip_reverses_both_indices():
    rows = [[MultiPoly.const(V, i * 10 + j) for j in range(3)] for i in range(3)]
    M = PolyMatrix.from_rows(rows)
    C = conjugate_flip(M)
    for i in range(3):
        for j in range(3):
            assert C.entry(i, j) == M.entry(2 - i, 2 - j)


def test_frac_invert_known_inverse():
    A = [[F(1), F(2)], [F(3), F(4)]]
    Ainv = frac_invert(A)
    assert Ainv == [[F(-2), F(1)], [F(3, 2), F(-1, 2)]]
    assert frac_matmul(A, Ainv) == frac_identity(2)


def test_frac_det_and_rank():
    assert frac_det([[F(1), F(2)], [F(3), F(4)]]) == F(-2)
    assert frac_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert nullspace_dim([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert nullspace_dim([[F(1), F(0)], [F(0), F(1)]]) == 0


def test_solve_linear_unique_and_degenerate():
    A = [[F(1), F(0)], [F(0), F(2)]]
    assert solve_linear(A, [F(3), F(4)]) == [F(3), F(2)]
    # underdetermined and inconsistent both yield no unique answer
    assert solve_linear([[F(1), F(1)]], [F(2)]) is None
    assert solve_linear([[F(1)], [F(1)]], [F(1), F(2)]) is None
    # overdetermined but consistent is fine
    assert solve_linear([[F(1)], [F(2)]], [F(3), F(6)]) == [F(3)]


def test_polymatrix_json_round_trip():
    x1, x2 = x_vars()
    M = PolyMatrix.from_rows([[x1 * x2, MultiPoly.zero(V)],
                              [MultiPoly.const(V, F(5, 7)), x1 ** 3]])
    assert PolyMatrix.from_json(M.to_json()) == M
