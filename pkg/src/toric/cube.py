import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from configs import get_settings
from src.cone import (
    Cone,
    check_indices,
    cone_equal,
    killer_certificate,
    project,
    require_nonnegative,
    uncovered_coordinates,
)
from src.exactnum import lift
from src.exceptions import ContractViolation, InputError
from .binomial import BinomialInequality, BinomialSystem
from .logcone import cone_of_system, log_cone_of_map, member, stratum_restriction
from .monomial import MonomialMap

logger = logging.getLogger(__name__)

Support = tuple[int, ...]


def supports(n: int, max_support_dim: Optional[int] = None) -> list[Support]:
    """
    All subsets of {0..n-1}, by cardinality and then lexicographically.

    Raises
    ------
    InputError
        If n exceeds the configured cap on support enumeration
    """
    cap = get_settings().max_support_dim if max_support_dim is None else max_support_dim
    if n > cap:
        raise InputError(f"n={n} exceeds max_support_dim={cap}; 2^n supports would be enumerated")
    return [s for k in range(n + 1) for s in combinations(range(n), k)]


@dataclass(frozen=True)
class Stratum:
    """Points of a toric cube with support exactly ``support``; ``cone`` lives in R^|support|."""

    support: Support
    present: bool
    cone: Optional[Cone] = None


def _from_normals(normals: Iterable[Sequence[int]]) -> list[BinomialInequality]:
    """Binomials of the given log normals, minus those implied by 0 <= x <= 1."""
    return [i for i in map(BinomialInequality.from_log_normal, normals) if not i.is_trivial]


class ToricCube:
    """
    A toric cube, stored as the log-cone D of its strictly positive points.

    The cube is the closure of exp(-D) inside [0,1]^n. Which boundary
    strata appear is decided from the generators of D: the support S is
    present iff the generators vanishing on S together reach every
    coordinate outside S, and then its log-image is the projection of D
    onto the S coordinates.

    Parameters
    ----------
    log_cone : Cone
        Cone contained in the non-negative orthant
    """

    def __init__(self, log_cone: Cone):
        require_nonnegative(log_cone)
        self.log_cone = log_cone

    @classmethod
    def from_map(cls, m: MonomialMap) -> "ToricCube":
        """The image of [0,1]^d under a monomial map."""
        return cls(log_cone_of_map(m))

    @classmethod
    def from_system(cls, s: BinomialSystem) -> "ToricCube":
        """The closure of the positive part of the precube cut out by s."""
        return cls(cone_of_system(s))

    @property
    def n(self) -> int:
        return self.log_cone.ambient_dim

    @property
    def dim(self) -> int:
        return self.log_cone.dim

    def is_present(self, indices: Iterable[int]) -> bool:
        s = check_indices(self.n, indices)
        return not uncovered_coordinates(self.log_cone.generators, s, self.n)

    def stratum(self, indices: Iterable[int]) -> Stratum:
        s = check_indices(self.n, indices)
        if not self.is_present(s):
            return Stratum(support=s, present=False)
        return Stratum(support=s, present=True, cone=project(self.log_cone, s))

    def strata(self, max_support_dim: Optional[int] = None) -> list[Stratum]:
        out = [self.stratum(s) for s in supports(self.n, max_support_dim)]
        logger.info(f"{sum(st.present for st in out)} of {len(out)} strata present")
        return out

    def present_strata(self, max_support_dim: Optional[int] = None) -> list[Stratum]:
        return [st for st in self.strata(max_support_dim) if st.present]

    def implicit_system(self, max_support_dim: Optional[int] = None) -> BinomialSystem:
        """
        Binomial inequalities cutting out exactly this cube.

        Starts from the facets of the log-cone, then walks the supports:
        an absent stratum not yet excluded gets its killer inequality, and a
        present stratum whose restriction is still too large gets the lifted
        facets of its projected cone. Inequalities implied by 0 <= x <= 1
        are omitted.

        Returns
        -------
        BinomialSystem
            A valid, non-canonical description of the cube
        """
        n = self.n
        system = BinomialSystem(n, tuple(_from_normals(self.log_cone.facets)))
        for st in self.strata(max_support_dim):
            current = stratum_restriction(system, st.support)
            if not st.present:
                if current is None:
                    continue
                w = killer_certificate(self.log_cone, st.support)
                system = system.extended([BinomialInequality.from_log_normal(w)])
                logger.debug(f"support {st.support} absent, killed by {system.inequalities[-1]}")
                continue
            if current is None:
                logger.error(f"present support {st.support} excluded by valid inequalities")
                raise ContractViolation(f"present support {st.support} was excluded")
            if cone_equal(current, st.cone):
                continue
            lifted = [lift(w, st.support, n) for w in st.cone.facets]
            additions = _from_normals(lifted)
            system = system.extended(a for a in additions if a not in system.inequalities)
            current = stratum_restriction(system, st.support)
            if current is None or not cone_equal(current, st.cone):
                logger.error(f"support {st.support}: lifted facets do not cut out the stratum")
                raise ContractViolation(f"stratum {st.support} not cut out by its lifted facets")
        return system

    @cached_property
    def system(self) -> BinomialSystem:
        return self.implicit_system()

    def support_of(self, point: Sequence) -> Support:
        if len(point) != self.n:
            raise InputError(f"point of length {len(point)}, expected {self.n}")
        return tuple(i for i, x in enumerate(point) if Fraction(x) != 0)

    def contains(self, point: Sequence) -> bool:
        if not self.is_present(self.support_of(point)):
            return False
        return member(point, self.system)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ToricCube):
            return NotImplemented
        return cone_equal(self.log_cone, other.log_cone)

    def __hash__(self) -> int:
        return hash(self.log_cone)

    def __repr__(self) -> str:
        return f"ToricCube(n={self.n}, rays={list(self.log_cone.rays)})"


def strata(cube: ToricCube, max_support_dim: Optional[int] = None) -> list[Stratum]:
    return cube.strata(max_support_dim)
