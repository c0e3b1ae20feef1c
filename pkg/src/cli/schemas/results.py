from typing import Optional

from pydantic import BaseModel, Field


class IsCubeResponse(BaseModel):
    is_cube: bool


class StratumSchema(BaseModel):
    """Presence of one support and, when present, the rays of its cone."""

    support: list[int] = Field(..., description="0-based positive coordinates")
    present: bool
    rays: Optional[list[list[int]]] = Field(default=None, description="Rays of the stratum cone in R^support")


class StrataResponse(BaseModel):
    n: int
    strata: list[StratumSchema]


class CellSchema(BaseModel):
    id: int = Field(..., description="1-based cell id")
    support: list[int]
    dim: int
    rays: list[list[int]] = Field(..., description="Rays of the cell cone in R^support")


class CharacteristicDomainSchema(BaseModel):
    """Barycentric data of one cell cone."""

    cell_id: int
    rays: list[list[int]] = Field(..., description="Extreme rays, rescaled when requested")
    poset: list[list[int]] = Field(..., description="Faces as 0-based ray index sets, graded order")
    sigma_rays: list[list[int]] = Field(..., description="Sum of the rays of each poset element")
    chains: list[list[list[int]]] = Field(..., description="Maximal chains, bottom-up")
    sd_exponents: list[list[int]] = Field(..., description="Exponent rows of the subdivided map")


class CWResponse(BaseModel):
    cells: list[CellSchema]
    edges: list[list[int]] = Field(..., description="Cover relation as [lower id, upper id]")
    f_vector: list[int]
    euler_characteristic: int
    refinements: int = Field(default=0, description="Refinement steps triggered while building")
    characteristic_domains: Optional[list[CharacteristicDomainSchema]] = None


class PosetResponse(BaseModel):
    edges: list[list[int]] = Field(..., description="Cover relation as [lower id, upper id]")


class CellRegularitySchema(BaseModel):
    id: int
    dim: int
    closure_euler: int
    boundary_euler: int


class RegularityResponse(BaseModel):
    passed: bool
    euler_characteristic: int
    checks: dict[str, bool]
    failures: dict[str, list]
    cells: list[CellRegularitySchema]


class VerifyResponse(BaseModel):
    passed: bool
    res: int
    checks: dict[str, bool]
    details: dict[str, list] = Field(default_factory=dict, description="Offending items per failed check")


class ErrorResponse(BaseModel):
    error: str
    detail: str
