"""Exact Gaussian elimination: solve, inverse, nullspace."""

from fractions import Fraction

import pytest

from qgfourier import linalg
from qgfourier.scalars import EXACT, zeta


def test_solve_exact():
    a = [[2, 1], [1, 3]]
    x = linalg.solve(a, [5, 10], EXACT)
    assert x == [Fraction(1), Fraction(3)]


def test_solve_rectangular_consistent():
    # three equations, two unknowns, consistent
    a = [[1, 0], [0, 1], [1, 1]]
    assert linalg.solve(a, [2, 3, 5], EXACT) == [Fraction(2), Fraction(3)]


def test_solve_inconsistent():
    with pytest.raises(linalg.InconsistentSystemError):
        linalg.solve([[1, 0], [1, 0]], [1, 2], EXACT)


def test_solve_underdetermined():
    with pytest.raises(linalg.SingularMatrixError):
        linalg.solve([[1, 1], [2, 2]], [1, 2], EXACT)


def test_inverse_round_trip():
    a = [[1, 2, 0], [0, 1, 4], [1, 0, 1]]
    inv = linalg.inverse(a, EXACT)
    prod = linalg.mat_mul(a, inv)
    assert prod == [[1 if i == j else 0 for j in range(3)] for i in range(3)]


def test_inverse_with_cyclotomic_entries():
    w = zeta(3)
    a = [[1, 1], [1, w]]
    inv = linalg.inverse(a, EXACT)
    prod = linalg.mat_mul(a, inv)
    assert all(EXACT.is_zero(prod[i][j] - (1 if i == j else 0)) for i in range(2) for j in range(2))


def test_singular_inverse():
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse([[1, 2], [2, 4]], EXACT)


def test_nullspace():
    basis = linalg.nullspace([[1, 2, 3]], EXACT)
    assert len(basis) == 2
    for v in basis:
        assert sum(c * x for c, x in zip([1, 2, 3], v)) == 0
    assert linalg.nullspace([[1, 0], [0, 1]], EXACT) == []
