import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from configs import get_settings
from src.exceptions import InputError
from src.toric import BinomialSystem, MonomialMap, Support, member

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSample:
    """Exact images of a parameter grid; ``points[k]`` is the image of ``parameters[k]``."""

    res: int
    parameters: tuple[tuple[Fraction, ...], ...]
    points: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(zip(self.parameters, self.points))

    def supports(self) -> set[Support]:
        return {tuple(i for i, x in enumerate(p) if x != 0) for p in self.points}


@dataclass(frozen=True)
class Violation:
    parameters: tuple[Fraction, ...]
    point: tuple[Fraction, ...]


def grid_image(m: MonomialMap, res: int, max_points: Optional[int] = None) -> GridSample:
    """
    f(t) for every t in {0, 1/res, ..., 1}^d.

    Parameters
    ----------
    m : MonomialMap
        The map
    res : int
        Grid resolution, at least 1
    max_points : int, optional
        Cap on the number of grid points; defaults to the configured value

    Returns
    -------
    GridSample
        Parameters and exact images, in lexicographic parameter order
    """
    if res < 1:
        raise InputError(f"grid resolution must be at least 1, got {res}")
    cap = get_settings().max_grid_points if max_points is None else max_points
    if (res + 1) ** m.d > cap:
        raise InputError(f"grid of {(res + 1) ** m.d} points exceeds max_grid_points={cap}")
    axis = [Fraction(k, res) for k in range(res + 1)]
    parameters = tuple(product(axis, repeat=m.d))
    points = tuple(m.evaluate(t) for t in parameters)
    logger.debug(f"grid image: {len(points)} points at resolution {res}")
    return GridSample(res=res, parameters=parameters, points=points)


def achievable_supports(m: MonomialMap) -> set[Support]:
    """
    Supports of the image points.

    Coordinate j of f(t) is positive iff the support of row j lies inside
    the support T of t; enumerates all 2^d choices of T.
    """
    row_supports = [frozenset(k for k, a in enumerate(row) if a) for row in m.rows]
    out = set()
    for size in range(m.d + 1):
        for t in combinations(range(m.d), size):
            chosen = set(t)
            out.add(tuple(j for j, s in enumerate(row_supports) if s <= chosen))
    return out


def check_sample(s: BinomialSystem, g: GridSample) -> list[Violation]:
    """Sample points that fail the system; empty means the sample passes."""
    violations = [Violation(parameters=t, point=p) for t, p in g if not member(p, s)]
    if violations:
        logger.warning(f"{len(violations)} of {len(g)} sample points violate the system")
    return violations


def contraction_path(m: MonomialMap, t: Sequence, steps: int) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """
    Points f(s t) for s = 1, (steps-1)/steps, ..., 0.

    The path contracts f(t) to f(0) inside the image, witnessing that the
    image is contractible.
    """
    if steps < 1:
        raise InputError(f"steps must be at least 1, got {steps}")
    t = tuple(Fraction(x) for x in t)
    path = []
    for k in range(steps, -1, -1):
        s = Fraction(k, steps)
        path.append((s, m.evaluate(tuple(s * x for x in t))))
    return path
