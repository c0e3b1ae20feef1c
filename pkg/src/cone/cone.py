import logging
from functools import cached_property
from typing import Iterable, Optional, Sequence

from src.exactnum import IntVec, dot, int_vec, is_zero, primitive, rank_of, restrict
from src.exceptions import InputError
from .dd import extreme_rays, facet_normals

logger = logging.getLogger(__name__)


def _canonical_vectors(n: int, vectors: Iterable[Sequence[int]], what: str) -> tuple[IntVec, ...]:
    out = set()
    for v in vectors:
        v = int_vec(v)
        if len(v) != n:
            raise InputError(f"{what} {v} has length {len(v)}, expected {n}")
        if not is_zero(v):
            out.add(primitive(v))
    return tuple(sorted(out))


def check_indices(n: int, indices: Iterable[int]) -> tuple[int, ...]:
    """Validate a coordinate index set and return it sorted."""
    out = sorted(set(indices))
    for i in out:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < n:
            raise InputError(f"index {i!r} out of range for dimension {n}")
    return tuple(out)


class Cone:
    """
    Rational polyhedral cone with a lazily completed double description.

    A cone is created from generators (V-representation) or from inequalities
    w . y >= 0 (H-representation); the other side is computed on first use
    and memoised. All stored vectors are primitive integer vectors.

    Parameters
    ----------
    ambient_dim : int
        Dimension n of the ambient space
    rays : Iterable, optional
        Generators; zero vectors are ignored
    inequalities : Iterable, optional
        Normals w of the inequalities w . y >= 0
    """

    def __init__(
        self,
        ambient_dim: int,
        rays: Optional[Iterable[Sequence[int]]] = None,
        inequalities: Optional[Iterable[Sequence[int]]] = None,
    ):
        if (rays is None) == (inequalities is None):
            raise InputError("a cone needs exactly one of rays or inequalities")
        if ambient_dim < 0:
            raise InputError(f"negative ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        self._given_rays = None if rays is None else _canonical_vectors(ambient_dim, rays, "ray")
        self._given_inequalities = (
            None if inequalities is None else _canonical_vectors(ambient_dim, inequalities, "inequality")
        )

    @classmethod
    def from_rays(cls, ambient_dim: int, rays: Iterable[Sequence[int]]) -> "Cone":
        return cls(ambient_dim, rays=rays)

    @classmethod
    def from_inequalities(cls, ambient_dim: int, inequalities: Iterable[Sequence[int]]) -> "Cone":
        return cls(ambient_dim, inequalities=inequalities)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Cone":
        return cls(ambient_dim, rays=[])

    @classmethod
    def orthant(cls, ambient_dim: int) -> "Cone":
        return cls(ambient_dim, rays=[tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)])

    # --- double description -------------------------------------------------

    @cached_property
    def _v_description(self) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
        if self._given_inequalities is not None:
            return extreme_rays(self.ambient_dim, self._given_inequalities)
        return extreme_rays(self.ambient_dim, self.facets)

    @cached_property
    def _h_description(self) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
        if self._given_rays is not None:
            return facet_normals(self.ambient_dim, self._given_rays)
        return facet_normals(self.ambient_dim, self.rays)

    @property
    def generators(self) -> tuple[IntVec, ...]:
        """The rays the cone was built from, or its canonical rays."""
        if self._given_rays is not None:
            return self._given_rays
        return self.rays

    @cached_property
    def rays(self) -> tuple[IntVec, ...]:
        """Extreme rays plus both signs of a lineality basis, sorted."""
        pointed, lineality = self._v_description
        signed = list(pointed) + list(lineality) + [tuple(-x for x in v) for v in lineality]
        return tuple(sorted(signed))

    @cached_property
    def facets(self) -> tuple[IntVec, ...]:
        """Irredundant facet normals plus both signs of the implicit equations, sorted."""
        proper, equations = self._h_description
        signed = list(proper) + list(equations) + [tuple(-x for x in v) for v in equations]
        return tuple(sorted(signed))

    @property
    def extreme_rays(self) -> tuple[IntVec, ...]:
        return self._v_description[0]

    @property
    def lineality(self) -> tuple[IntVec, ...]:
        return self._v_description[1]

    @property
    def proper_facets(self) -> tuple[IntVec, ...]:
        """Facet normals that are not implicit equalities."""
        return self._h_description[0]

    @property
    def equations(self) -> tuple[IntVec, ...]:
        return self._h_description[1]

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @cached_property
    def dim(self) -> int:
        return rank_of(self.generators, self.ambient_dim)

    @property
    def key(self) -> tuple:
        """Hashable canonical form: ambient dimension and sorted rays."""
        return (self.ambient_dim, self.rays)

    # --- point and cone tests -----------------------------------------------

    def _check_point(self, point: Sequence) -> None:
        if len(point) != self.ambient_dim:
            raise InputError(f"point of length {len(point)} in a cone of dimension {self.ambient_dim}")

    def contains(self, point: Sequence) -> bool:
        self._check_point(point)
        return all(dot(w, point) >= 0 for w in self.facets)

    def relint_contains(self, point: Sequence) -> bool:
        """Membership in the relative interior: equations tight, proper facets strict."""
        self._check_point(point)
        if any(dot(w, point) != 0 for w in self.equations):
            return False
        return all(dot(w, point) > 0 for w in self.proper_facets)

    def contains_cone(self, other: "Cone") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise InputError(f"dimension mismatch: {other.ambient_dim} vs {self.ambient_dim}")
        return all(self.contains(r) for r in other.generators)

    def intersection(self, other: "Cone") -> "Cone":
        if other.ambient_dim != self.ambient_dim:
            raise InputError(f"dimension mismatch: {other.ambient_dim} vs {self.ambient_dim}")
        return Cone.from_inequalities(self.ambient_dim, self.facets + other.facets)

    def with_inequalities(self, inequalities: Iterable[Sequence[int]]) -> "Cone":
        return Cone.from_inequalities(self.ambient_dim, list(self.facets) + list(inequalities))

    def interior_point(self) -> IntVec:
        """Sum of the rays, a point of the relative interior."""
        total = [0] * self.ambient_dim
        for r in self.rays:
            total = [a + b for a, b in zip(total, r)]
        return tuple(total)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return cone_equal(self, other)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self._given_rays is not None:
            return f"Cone(ambient_dim={self.ambient_dim}, rays={list(self._given_rays)})"
        return f"Cone(ambient_dim={self.ambient_dim}, inequalities={list(self._given_inequalities)})"


def rays_to_facets(c: Cone) -> tuple[IntVec, ...]:
    return c.facets


def facets_to_rays(c: Cone) -> tuple[IntVec, ...]:
    return c.rays


def dim(c: Cone) -> int:
    return c.dim


def cone_equal(c1: Cone, c2: Cone) -> bool:
    """
    Point-set equality by mutual inclusion.

    Every ray of each cone must satisfy every facet inequality of the other.

    Raises
    ------
    InputError
        If the ambient dimensions differ
    """
    if c1.ambient_dim != c2.ambient_dim:
        raise InputError(f"dimension mismatch: {c1.ambient_dim} vs {c2.ambient_dim}")
    return c1.contains_cone(c2) and c2.contains_cone(c1)


def require_nonnegative(c: Cone) -> None:
    for r in c.generators:
        if any(x < 0 for x in r):
            raise InputError(f"cone is not inside the non-negative orthant: generator {r}")


def face_zero(c: Cone, indices: Iterable[int]) -> Cone:
    """
    Face of a cone in the non-negative orthant where the given coordinates vanish.

    Parameters
    ----------
    c : Cone
        Cone contained in R^n_{>=0}
    indices : Iterable[int]
        Coordinates S forced to zero

    Returns
    -------
    Cone
        Cone generated by the generators r with r_i = 0 for all i in S
    """
    s = check_indices(c.ambient_dim, indices)
    require_nonnegative(c)
    return Cone.from_rays(c.ambient_dim, [r for r in c.generators if all(r[i] == 0 for i in s)])


def project(c: Cone, indices: Iterable[int]) -> Cone:
    """Coordinate projection onto the listed coordinates (in increasing order)."""
    s = check_indices(c.ambient_dim, indices)
    return Cone.from_rays(len(s), [restrict(r, s) for r in c.generators])


def relints_meet(c1: Cone, c2: Cone) -> bool:
    """Whether the relative interiors of two cones intersect."""
    point = c1.intersection(c2).interior_point()
    return c1.relint_contains(point) and c2.relint_contains(point)
