from .cells import CellCube, OpenCell, boundary_cubes
from .complex import (
    CWComplex,
    build_cw,
    cell_closure,
    locate,
    refine_complex,
    tuffley_fans,
    tuffley_partition,
)
from .domain import CharacteristicDomain, characteristic_domain
from .regularity import CellRegularity, RegularityReport, euler, regularity_report

__all__ = [
    "CellCube",
    "OpenCell",
    "boundary_cubes",
    "CWComplex",
    "build_cw",
    "cell_closure",
    "locate",
    "refine_complex",
    "tuffley_fans",
    "tuffley_partition",
    "CharacteristicDomain",
    "characteristic_domain",
    "CellRegularity",
    "RegularityReport",
    "euler",
    "regularity_report",
]
