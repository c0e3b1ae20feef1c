from fractions import Fraction

import pytest

from src.exactnum import (
    RatMatrix,
    lift,
    negative_part,
    positive_part,
    primitive,
    rank,
    restrict,
    row_space_basis,
    solve,
)
from src.exceptions import InputError


class TestPrimitive:

    def test_divides_by_gcd(self):
        assert primitive((2, 4, 6)) == (1, 2, 3)

    def test_already_primitive(self):
        assert primitive((1, 0, 1)) == (1, 0, 1)

    def test_keeps_sign(self):
        assert primitive((0, -4, 2)) == (0, -2, 1)

    def test_idempotent(self):
        for v in [(6, -9, 12), (0, 0, 5), (-3, -3), (7,)]:
            assert primitive(primitive(v)) == primitive(v)

    def test_zero_vector_rejected(self):
        with pytest.raises(InputError, match="zero vector has no primitive form"):
            primitive((0, 0, 0))


class TestRank:

    def test_triangle_exponents(self):
        assert rank(RatMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 3

    def test_identity(self):
        assert rank(RatMatrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])) == 4

    def test_zero_matrix(self):
        assert rank(RatMatrix.from_rows([[0, 0], [0, 0], [0, 0]])) == 0

    def test_matches_transpose(self):
        rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]]
        m = RatMatrix.from_rows(rows)
        assert rank(m) == rank(m.transpose()) == 2

    def test_rational_entries(self):
        m = RatMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
        assert rank(m) == 1

    def test_ragged_rows_rejected(self):
        with pytest.raises(InputError):
            RatMatrix.from_rows([[1, 2], [3]])


class TestSolve:

    def test_unique_solution(self):
        assert solve(RatMatrix.from_rows([[1, 1], [1, -1]]), [2, 0]) == (1, 1)

    def test_inconsistent(self):
        assert solve(RatMatrix.from_rows([[0]]), [1]) is None

    def test_underdetermined_solution_checks_out(self):
        m = RatMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
        x = solve(m, [1, 1])
        assert x is not None
        assert m.apply(x) == (1, 1)

    def test_rational_solution(self):
        x = solve(RatMatrix.from_rows([[2, 0], [0, 3]]), [1, 1])
        assert x == (Fraction(1, 2), Fraction(1, 3))

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            solve(RatMatrix.from_rows([[1, 0], [0, 1]]), [1, 2, 3])


class TestLinearHelpers:

    def test_row_space_basis_is_canonical(self):
        a = row_space_basis([[2, 2, 0], [0, 1, 1]], 3)
        b = row_space_basis([[1, 2, 1], [1, 1, 0], [0, 3, 3]], 3)
        assert a == b

    def test_sign_parts(self):
        assert positive_part((1, -2, 0, 3)) == (1, 0, 0, 3)
        assert negative_part((1, -2, 0, 3)) == (0, 2, 0, 0)

    def test_restrict_and_lift(self):
        v = (5, 6, 7, 8)
        assert restrict(v, (1, 3)) == (6, 8)
        assert lift((6, 8), (1, 3), 4) == (0, 6, 0, 8)
