import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.toric import BinomialSystem, MonomialMap, ToricCube

PROBLEMS_DIR = Path(__file__).parent / "data" / "problems"


@pytest.fixture
def problems_dir() -> Path:
    return PROBLEMS_DIR


@pytest.fixture
def triangle_map():
    """(xy, yz, xz): its image is cut out by a >= bc, b >= ac, c >= ab."""
    return MonomialMap.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


@pytest.fixture
def triangle_rays():
    return [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


@pytest.fixture
def triangle_system():
    return BinomialSystem.parse(3, ["bc <= a", "ac <= b", "ab <= c"])


@pytest.fixture
def triangle_cube(triangle_map):
    return ToricCube.from_map(triangle_map)


@pytest.fixture
def precube_system():
    """Not a toric cube: the face {a = b = 0} is all of [0,1]^2."""
    return BinomialSystem.parse(4, ["bd <= ac", "ad <= bc"])


@pytest.fixture
def precube_rays():
    return [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 0, 0)]


@pytest.fixture
def quadrilateral_map():
    """(t1 t2 t4, t2 t3, t3 t4): the log-cone has four rays and a square cross-section."""
    return MonomialMap.from_rows([[1, 1, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1]])


@pytest.fixture
def quadrilateral_rays():
    return [(0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)]


@pytest.fixture
def plane_maps():
    """Monomial maps into [0,1]^2 with their implicit inequalities."""
    return [
        (MonomialMap.from_rows([[1, 0], [2, 1]]), ["b <= a^2"]),
        (MonomialMap.from_rows([[1, 0], [1, 2]]), ["b <= a"]),
        (MonomialMap.from_rows([[2, 1], [3, 2]]), ["a^2 <= b", "b^2 <= a^3"]),
        (MonomialMap.from_rows([[2, 1], [1, 2]]), ["a^2 <= b", "b^2 <= a"]),
    ]
