from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from src.exceptions import InputError
from .vectors import RatVec, primitive_rational


@dataclass(frozen=True)
class RatMatrix:
    """
    Rectangular matrix of exact rationals.

    Rows are stored as tuples of Fraction; a matrix with no rows still
    records its column count.
    """

    rows: tuple[RatVec, ...]
    cols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RatMatrix":
        """
        Build a matrix from any nested sequence of ints or Fractions.

        Parameters
        ----------
        rows : Sequence[Sequence]
            Row entries
        cols : int, optional
            Column count; required when rows is empty

        Returns
        -------
        RatMatrix
            The exact matrix
        """
        converted = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if cols is None:
            if not converted:
                raise InputError("column count required for a matrix without rows")
            cols = len(converted[0])
        for row in converted:
            if len(row) != cols:
                raise InputError(f"ragged matrix: row of length {len(row)} in a {cols}-column matrix")
        return cls(rows=converted, cols=cols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            rows=tuple(tuple(row[j] for row in self.rows) for j in range(self.cols)),
            cols=len(self.rows),
        )

    def apply(self, x: Sequence) -> RatVec:
        if len(x) != self.cols:
            raise InputError(f"vector of length {len(x)} does not match {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.rows)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in m.rows:
        k = 1
        for x in row:
            k = lcm(k, x.denominator)
        out.append([int(x * k) for x in row])
    return out


def rank(m: RatMatrix) -> int:
    """
    Exact rank by fraction-free (Bareiss) elimination.

    Parameters
    ----------
    m : RatMatrix
        Input matrix

    Returns
    -------
    int
        Rank over the rationals
    """
    a = _integer_rows(m)
    n_rows, n_cols = len(a), m.cols
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            a[i] = [(p * a[i][j] - f * a[r][j]) // prev for j in range(n_cols)]
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rank_of(vectors: Sequence[Sequence], cols: int) -> int:
    """Rank of a list of row vectors of the given length."""
    if not vectors:
        return 0
    return rank(RatMatrix.from_rows(vectors, cols=cols))


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(row) for row in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def solve(m: RatMatrix, b: Sequence) -> Optional[RatVec]:
    """
    One exact solution of M x = b.

    Parameters
    ----------
    m : RatMatrix
        Coefficient matrix
    b : Sequence
        Right-hand side, one entry per row

    Returns
    -------
    Optional[RatVec]
        A solution with free variables set to zero, or None if inconsistent
    """
    if len(b) != len(m.rows):
        raise InputError(f"right-hand side of length {len(b)} for {len(m.rows)} equations")
    augmented = RatMatrix.from_rows(
        [list(row) + [Fraction(x)] for row, x in zip(m.rows, b)], cols=m.cols + 1
    )
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for row, c in zip(reduced, pivots):
        x[c] = row[m.cols]
    return tuple(x)


def row_space_basis(vectors: Sequence[Sequence], cols: int) -> list[tuple[int, ...]]:
    """Canonical integer basis of the row space: primitive rows of the RREF."""
    if not vectors:
        return []
    reduced, _ = rref(RatMatrix.from_rows(vectors, cols=cols))
    return [primitive_rational(row) for row in reduced]
