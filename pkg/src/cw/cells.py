from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from src.cone import Cone, project, uncovered_coordinates
from src.toric import Support, ToricCube


@dataclass(frozen=True)
class OpenCell:
    """
    exp(-relint G) placed in the coordinate face with positive coordinates ``support``.

    ``cone`` lives in R^|support|; the apex of a stratum cone is a 0-cell.
    """

    id: int
    support: Support
    cone: Cone

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def key(self) -> tuple:
        return (self.support, self.cone.rays)

    @property
    def rays(self):
        return self.cone.rays

    def contains_log_point(self, support: Support, y) -> bool:
        """Whether the point with the given support and negated-log coordinates y lies in the cell."""
        return tuple(support) == self.support and self.cone.relint_contains(y)

    def __repr__(self) -> str:
        return f"OpenCell(id={self.id}, support={self.support}, dim={self.dim}, rays={list(self.rays)})"


@dataclass(frozen=True)
class CellCube:
    """A toric cube in the coordinate face of ``support``, given by its log-cone in R^|support|."""

    support: Support
    cone: Cone

    @classmethod
    def from_cube(cls, cube: ToricCube) -> "CellCube":
        return cls(tuple(range(cube.n)), cube.log_cone)

    @property
    def key(self) -> tuple:
        return (self.support, self.cone.rays)


def boundary_cubes(support: Support, cone: Cone) -> Iterator[CellCube]:
    """
    Lower-support parts of the closure of a cell.

    For every proper subset S' of the support whose stratum is present in
    the toric cube with log-cone ``cone``, yields the projection of the cone
    onto S'. Subsets come by cardinality, then lexicographically.
    """
    k = len(support)
    for size in range(k):
        for local in combinations(range(k), size):
            if uncovered_coordinates(cone.generators, local, k):
                continue
            yield CellCube(tuple(support[i] for i in local), project(cone, local))
