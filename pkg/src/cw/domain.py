import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from src.cone import Cone, FacePoset, face_lattice
from src.exactnum import IntVec
from src.exceptions import InputError
from src.toric import MonomialMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacteristicDomain:
    """
    Barycentric data of a pointed cone.

    ``rays[i]`` is the i-th extreme ray (rescaled when requested) and the
    poset elements are sets of such indices. For every element sigma the
    ray r_sigma is the sum of its rays; these are the columns of the
    subdivided map, in poset order.
    """

    ambient_dim: int
    rays: tuple[IntVec, ...]
    poset: FacePoset
    sigma_rays: tuple[IntVec, ...]
    chains: tuple[tuple[frozenset[int], ...], ...]

    @property
    def base_map(self) -> MonomialMap:
        """The map t -> (prod_i t_i^{r_i . e_j})_j with one parameter per ray."""
        return MonomialMap.from_columns(self.ambient_dim, self.rays)

    @property
    def sd_map(self) -> MonomialMap:
        """The subdivided map with one parameter per poset element."""
        return MonomialMap.from_columns(self.ambient_dim, self.sigma_rays)

    def sigma_ray(self, element: Sequence[int]) -> IntVec:
        return self.sigma_rays[self.poset.index(element)]

    @property
    def substitution(self) -> tuple[tuple[int, ...], ...]:
        """For each ray index i, the poset positions of the elements containing i."""
        return tuple(
            tuple(k for k, e in enumerate(self.poset.elements) if i in e) for i in range(len(self.rays))
        )

    def compose(self, t_sd: Sequence) -> tuple[Fraction, ...]:
        """
        Original parameters t_i = prod over sigma containing i of t_sigma.

        With these parameters the base map agrees with the subdivided map
        evaluated at ``t_sd``.
        """
        if len(t_sd) != len(self.poset):
            raise InputError(f"expected {len(self.poset)} subdivided parameters, got {len(t_sd)}")
        out = []
        for positions in self.substitution:
            value = Fraction(1)
            for k in positions:
                value *= Fraction(t_sd[k])
            out.append(value)
        return tuple(out)

    def polytope_vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertices of {y in the cone : y . 1 <= 1}: the origin and r / (r . 1) per ray."""
        origin = tuple(Fraction(0) for _ in range(self.ambient_dim))
        return [origin] + sorted(tuple(Fraction(x, sum(r)) for x in r) for r in self.rays)


def characteristic_domain(cone: Cone, rays_scaled: bool = False) -> CharacteristicDomain:
    """
    Face poset, barycentric rays and subdivided map of a pointed cone.

    Parameters
    ----------
    cone : Cone
        Pointed cone of dimension at least 1 in the non-negative orthant
    rays_scaled : bool
        Rescale the extreme rays to a common coordinate sum before summing

    Returns
    -------
    CharacteristicDomain
        Poset, r_sigma per element, maximal chains in lexicographic order
    """
    if not cone.is_pointed:
        raise InputError("characteristic domain requires a pointed cone")
    if cone.dim < 1:
        raise InputError("characteristic domain requires a cone of dimension at least 1")
    poset = face_lattice(cone)
    rays = poset.rays
    if rays_scaled:
        if any(sum(r) <= 0 for r in rays):
            raise InputError("ray rescaling needs rays with positive coordinate sum")
        common = 1
        for r in rays:
            common = lcm(common, sum(r))
        rays = tuple(tuple(x * (common // sum(r)) for x in r) for r in rays)
    sigma_rays = tuple(
        tuple(sum(rays[i][j] for i in element) for j in range(cone.ambient_dim)) for element in poset.elements
    )
    chains = tuple(poset.maximal_chains())
    logger.debug(f"characteristic domain: {len(poset)} poset elements, {len(chains)} maximal chains")
    return CharacteristicDomain(
        ambient_dim=cone.ambient_dim, rays=rays, poset=poset, sigma_rays=sigma_rays, chains=chains
    )
