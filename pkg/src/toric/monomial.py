from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from src.exactnum import IntVec, int_vec
from src.exceptions import InputError
from .binomial import format_monomial, monomial_value


@dataclass(frozen=True)
class MonomialMap:
    """
    Coordinatewise monomial map [0,1]^d -> [0,1]^n.

    Row j of ``exponents`` is the exponent vector of the j-th output
    coordinate t^{a_j}. Zero rows (constant 1) and zero columns (unused
    parameters) are allowed.
    """

    n: int
    d: int
    exponents: tuple[IntVec, ...]

    def __post_init__(self):
        rows = tuple(int_vec(r) for r in self.exponents)
        if len(rows) != self.n:
            raise InputError(f"exponents has {len(rows)} rows, expected n={self.n}")
        for j, row in enumerate(rows):
            if len(row) != self.d:
                raise InputError(f"exponent row {j} has {len(row)} entries, expected d={self.d}")
            if any(x < 0 for x in row):
                raise InputError(f"exponent row {j} has a negative entry")
        object.__setattr__(self, "exponents", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], d: Optional[int] = None) -> "MonomialMap":
        if d is None:
            if not rows:
                raise InputError("parameter count d required for a map without rows")
            d = len(rows[0])
        return cls(n=len(rows), d=d, exponents=tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence[int]]) -> "MonomialMap":
        return cls(n=n, d=len(columns), exponents=tuple(tuple(c[j] for c in columns) for j in range(n)))

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(n=n, d=n, exponents=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> tuple[IntVec, ...]:
        return self.exponents

    @property
    def columns(self) -> tuple[IntVec, ...]:
        return tuple(tuple(row[k] for row in self.exponents) for k in range(self.d))

    def evaluate(self, t: Sequence) -> tuple[Fraction, ...]:
        """
        Exact image of a parameter point.

        Parameters
        ----------
        t : Sequence
            d rationals in [0,1]

        Returns
        -------
        tuple[Fraction, ...]
            (t^{a_1}, ..., t^{a_n}) with 0^0 = 1
        """
        if len(t) != self.d:
            raise InputError(f"parameter point of length {len(t)}, expected d={self.d}")
        t = tuple(Fraction(x) for x in t)
        for k, x in enumerate(t):
            if not 0 <= x <= 1:
                raise InputError(f"parameter t[{k}] = {x} outside [0,1]")
        return tuple(monomial_value(t, row) for row in self.exponents)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(row) for row in self.exponents) + ")"
