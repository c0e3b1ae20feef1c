import logging
from typing import Optional

from src.cone import cone_equal, relints_meet
from src.exceptions import InputError
from .binomial import BinomialInequality, BinomialSystem
from .cube import ToricCube, supports
from .logcone import cone_of_system, log_cone_of_map, stratum_restriction
from .monomial import MonomialMap

logger = logging.getLogger(__name__)


def cubify(s: BinomialSystem, max_support_dim: Optional[int] = None) -> BinomialSystem:
    """
    Binomial system cutting out the closure of the positive part of s.

    Parameters
    ----------
    s : BinomialSystem
        System of a toric precube
    max_support_dim : int, optional
        Override of the cap on support enumeration

    Returns
    -------
    BinomialSystem
        A cube system; equal to s up to system_equiv when s is a cube
    """
    result = ToricCube.from_system(s).implicit_system(max_support_dim)
    logger.info(f"cubified {len(s)} inequalities into {len(result)}")
    return result


def implicitize(m: MonomialMap, max_support_dim: Optional[int] = None) -> BinomialSystem:
    """Binomial inequalities whose solution set is the image of the map."""
    d = log_cone_of_map(m)
    facets = BinomialSystem(
        m.n, tuple(BinomialInequality.from_log_normal(w) for w in d.facets if any(x < 0 for x in w))
    )
    return cubify(facets, max_support_dim)


def parametrize(s: BinomialSystem) -> MonomialMap:
    """
    Monomial map whose image is the closure of the positive part of s.

    The columns are the extreme rays of the log-cone, primitive and sorted.
    """
    rays = cone_of_system(s).rays
    return MonomialMap.from_columns(s.n, rays)


def system_equiv(s1: BinomialSystem, s2: BinomialSystem, max_support_dim: Optional[int] = None) -> bool:
    """
    Equality of solution sets in [0,1]^n, checked support by support.

    Raises
    ------
    InputError
        If the systems live in different dimensions
    """
    if s1.n != s2.n:
        raise InputError(f"dimension mismatch: {s1.n} vs {s2.n}")
    for support in supports(s1.n, max_support_dim):
        a = stratum_restriction(s1, support)
        b = stratum_restriction(s2, support)
        if a is None and b is None:
            continue
        if a is None or b is None or not cone_equal(a, b):
            logger.debug(f"systems differ on support {support}")
            return False
    return True


def is_cube(s: BinomialSystem, max_support_dim: Optional[int] = None) -> bool:
    return system_equiv(s, cubify(s, max_support_dim), max_support_dim)


def intersect_interiors(c1: ToricCube, c2: ToricCube) -> Optional[ToricCube]:
    """
    Toric cube whose interior is the intersection of two interiors.

    Returns None when the relative interiors of the log-cones are disjoint.
    """
    if c1.n != c2.n:
        raise InputError(f"dimension mismatch: {c1.n} vs {c2.n}")
    if not relints_meet(c1.log_cone, c2.log_cone):
        return None
    return ToricCube(c1.log_cone.intersection(c2.log_cone))
