from .problem import (
    BinomialSystemSchema,
    InequalitySchema,
    MonomialMapSchema,
    ProblemFile,
)
from .results import (
    CellRegularitySchema,
    CellSchema,
    CharacteristicDomainSchema,
    CWResponse,
    ErrorResponse,
    IsCubeResponse,
    PosetResponse,
    RegularityResponse,
    StrataResponse,
    StratumSchema,
    VerifyResponse,
)

__all__ = [
    "BinomialSystemSchema",
    "InequalitySchema",
    "MonomialMapSchema",
    "ProblemFile",
    "CellRegularitySchema",
    "CellSchema",
    "CharacteristicDomainSchema",
    "CWResponse",
    "ErrorResponse",
    "IsCubeResponse",
    "PosetResponse",
    "RegularityResponse",
    "StrataResponse",
    "StratumSchema",
    "VerifyResponse",
]
