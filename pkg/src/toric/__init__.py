from .binomial import BinomialInequality, BinomialSystem
from .monomial import MonomialMap
from .logcone import cone_of_system, log_cone_of_map, member, stratum_restriction
from .cube import Stratum, Support, ToricCube, strata, supports
from .algebra import cubify, implicitize, intersect_interiors, is_cube, parametrize, system_equiv

__all__ = [
    "BinomialInequality",
    "BinomialSystem",
    "MonomialMap",
    "cone_of_system",
    "log_cone_of_map",
    "member",
    "stratum_restriction",
    "Stratum",
    "Support",
    "ToricCube",
    "strata",
    "supports",
    "cubify",
    "implicitize",
    "intersect_interiors",
    "is_cube",
    "parametrize",
    "system_equiv",
]
