import re
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, BeforeValidator, Field, model_validator

from src.toric import BinomialInequality, BinomialSystem, MonomialMap

_DECIMAL = re.compile(r"-?\d+")


def _parse_int(value):
    """Accept JSON integers and decimal strings; reject booleans and floats."""
    if isinstance(value, bool):
        raise ValueError("booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.fullmatch(value.strip()):
        return int(value.strip())
    raise ValueError(f"expected an integer or a decimal string, got {value!r}")


Exponent = Annotated[int, BeforeValidator(_parse_int), Field(ge=0)]


class InequalitySchema(BaseModel):
    """x^u <= x^v."""

    u: list[Exponent] = Field(..., description="Exponents of the smaller monomial")
    v: list[Exponent] = Field(..., description="Exponents of the larger monomial")

    @classmethod
    def from_inequality(cls, ineq: BinomialInequality) -> "InequalitySchema":
        return cls(u=list(ineq.u), v=list(ineq.v))


class BinomialSystemSchema(BaseModel):
    """Binomial inequalities on [0,1]^n."""

    n: int = Field(..., ge=0, description="Number of variables")
    inequalities: list[InequalitySchema] = Field(default_factory=list)

    @classmethod
    def from_system(cls, s: BinomialSystem) -> "BinomialSystemSchema":
        return cls(n=s.n, inequalities=[InequalitySchema.from_inequality(i) for i in s])

    def to_system(self) -> BinomialSystem:
        return BinomialSystem.from_pairs(self.n, [(i.u, i.v) for i in self.inequalities])


class MonomialMapSchema(BaseModel):
    """Exponent matrix of a monomial map, one row per output coordinate."""

    n: int = Field(..., ge=0, description="Number of output coordinates")
    d: int = Field(..., ge=0, description="Number of parameters")
    exponents: list[list[Exponent]] = Field(..., description="n rows of d exponents")

    @classmethod
    def from_map(cls, m: MonomialMap) -> "MonomialMapSchema":
        return cls(n=m.n, d=m.d, exponents=[list(r) for r in m.rows])

    def to_map(self) -> MonomialMap:
        return MonomialMap(n=self.n, d=self.d, exponents=tuple(tuple(r) for r in self.exponents))


class ProblemFile(BaseModel):
    """
    Input of every command.

    A monomial map carries ``d`` and ``exponents``; a binomial system
    carries ``inequalities``.
    """

    kind: Literal["monomial_map", "binomial_system"] = Field(..., description="Problem type")
    n: int = Field(..., ge=0, description="Ambient dimension")
    d: Optional[int] = Field(default=None, ge=0, description="Number of parameters (maps only)")
    exponents: Optional[list[list[Exponent]]] = Field(default=None, description="Exponent rows (maps only)")
    inequalities: Optional[list[InequalitySchema]] = Field(
        default=None, description="Inequalities x^u <= x^v (systems only)"
    )

    @model_validator(mode="after")
    def check_shape(self) -> "ProblemFile":
        if self.kind == "monomial_map":
            if self.d is None or self.exponents is None:
                raise ValueError("monomial_map needs both 'd' and 'exponents'")
            if len(self.exponents) != self.n:
                raise ValueError(f"'exponents' has {len(self.exponents)} rows, expected n={self.n}")
            for j, row in enumerate(self.exponents):
                if len(row) != self.d:
                    raise ValueError(f"'exponents' row {j} has {len(row)} entries, expected d={self.d}")
        else:
            if self.inequalities is None:
                raise ValueError("binomial_system needs 'inequalities'")
            for k, ineq in enumerate(self.inequalities):
                if len(ineq.u) != self.n or len(ineq.v) != self.n:
                    raise ValueError(f"'inequalities' entry {k} does not have length n={self.n}")
        return self

    def to_map(self) -> MonomialMap:
        return MonomialMapSchema(n=self.n, d=self.d, exponents=self.exponents).to_map()

    def to_system(self) -> BinomialSystem:
        return BinomialSystemSchema(n=self.n, inequalities=self.inequalities).to_system()
