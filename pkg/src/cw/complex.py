import logging
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Union

import networkx as nx

from src.cone import Cone, Fan, all_faces, relints_meet
from src.exceptions import InputError
from src.toric import Support, ToricCube, supports
from .cells import CellCube, OpenCell, boundary_cubes

logger = logging.getLogger(__name__)


class CWComplex:
    """
    Cell decomposition of a toric cube, stored as one fan per support.

    Every fan is closed under faces; each of its cones contributes the
    open cell exp(-relint G). Cell ids are 1-based and follow the support
    order of ``supports``, then face dimension, then the sorted rays.

    Parameters
    ----------
    cube : ToricCube
        The decomposed cube
    fans : Mapping[Support, Sequence[Cone]]
        Cones per support, closed under faces
    refinements : int
        Number of refinement steps that were needed to build the complex
    """

    def __init__(self, cube: ToricCube, fans: Mapping[Support, Sequence[Cone]], refinements: int = 0):
        self.cube = cube
        self.refinements = refinements
        order = {s: k for k, s in enumerate(supports(cube.n))}
        for s in fans:
            if s not in order:
                raise InputError(f"support {s} outside dimension {cube.n}")
        self.fans = {s: tuple(fans[s]) for s in sorted(fans, key=order.__getitem__)}
        cells = []
        for s, cones in self.fans.items():
            for c in sorted(cones, key=lambda c: (c.dim, c.rays)):
                cells.append(OpenCell(id=len(cells) + 1, support=s, cone=c))
        self.cells: tuple[OpenCell, ...] = tuple(cells)
        self._by_key = {c.key: c for c in self.cells}

    @property
    def n(self) -> int:
        return self.cube.n

    def __len__(self) -> int:
        return len(self.cells)

    def cell(self, cell_id: int) -> OpenCell:
        if not 1 <= cell_id <= len(self.cells):
            raise InputError(f"no cell with id {cell_id}")
        return self.cells[cell_id - 1]

    def find(self, support: Iterable[int], rays: Iterable[Sequence[int]]) -> OpenCell:
        """The cell with the given support whose cone is generated by ``rays``."""
        s = tuple(sorted(support))
        cone = Cone.from_rays(len(s), rays)
        cell = self._by_key.get((s, cone.rays))
        if cell is None:
            raise InputError(f"no cell with support {s} and rays {list(cone.rays)}")
        return cell

    def supports(self) -> list[Support]:
        """Supports of the cells, in the order used to build the complex."""
        return list(self.fans)

    @property
    def dimension(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    @property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    @cached_property
    def closures(self) -> dict[int, tuple[int, ...]]:
        """Cell id -> ids of the cells in its closure, itself included."""
        return {c.id: tuple(sorted(h.id for h in cell_closure(c, self))) for c in self.cells}

    @cached_property
    def closure_graph(self) -> nx.DiGraph:
        """Edge (h, c) whenever cell h lies in the closure of a different cell c."""
        g = nx.DiGraph()
        g.add_nodes_from(c.id for c in self.cells)
        g.add_edges_from((h, c) for c, below in self.closures.items() for h in below if h != c)
        return g

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Cover relation of the closure poset as sorted (lower, upper) id pairs."""
        return sorted(nx.transitive_reduction(self.closure_graph).edges)

    def __repr__(self) -> str:
        return f"CWComplex(n={self.n}, cells={len(self.cells)}, f_vector={self.f_vector})"


CubeLike = Union[CellCube, ToricCube]


def tuffley_fans(cube: ToricCube) -> dict[Support, list[Cone]]:
    """All faces of every present stratum cone, by support."""
    return {st.support: all_faces(st.cone) for st in cube.present_strata()}


def tuffley_partition(cube: ToricCube) -> list[OpenCell]:
    """
    Open cells of the relative interiors of all faces of the present strata.

    Returns
    -------
    list[OpenCell]
        The cells of the partition, including one 0-cell per stratum apex
    """
    return list(CWComplex(cube, tuffley_fans(cube)).cells)


def cell_closure(cell: OpenCell, complex: CWComplex) -> list[OpenCell]:
    """
    Cells whose union is the topological closure of ``cell``.

    Same-support cells inside the cell's cone, plus, for every lower support
    reached by the closure, the cells of that stratum inside the projected
    cone.

    Raises
    ------
    InputError
        If the cell is not a cell of the complex
    """
    if complex._by_key.get(cell.key) is None:
        raise InputError(f"cell with support {cell.support} and rays {list(cell.rays)} is not in the partition")
    targets = [CellCube(cell.support, cell.cone), *boundary_cubes(cell.support, cell.cone)]
    out = []
    for target in targets:
        for cone in complex.fans.get(target.support, ()):
            if target.cone.contains_cone(cone):
                out.append(complex._by_key[(target.support, cone.rays)])
    return sorted(out, key=lambda c: c.id)


def locate(complex: CWComplex, support: Iterable[int], log_point: Sequence) -> list[OpenCell]:
    """
    Cells containing the point with the given support.

    Parameters
    ----------
    complex : CWComplex
        The complex
    support : Iterable[int]
        Positive coordinates of the point
    log_point : Sequence
        Negated logarithms of the positive coordinates, in support order

    Returns
    -------
    list[OpenCell]
        Exactly one cell for a point of the cube when the complex is a partition
    """
    s = tuple(sorted(support))
    if len(log_point) != len(s):
        raise InputError(f"log point of length {len(log_point)} for support {s}")
    return [c for c in complex.cells if c.contains_log_point(s, log_point)]


class _Refiner:
    """Worklist that cuts stratum fans until given cubes are unions of cells."""

    def __init__(self, n: int, fans: Mapping[Support, Sequence[Cone]]):
        self.n = n
        self.fans = {s: Fan(len(s), tuple(cones)) for s, cones in fans.items()}
        self.pending: dict[Support, list[Cone]] = {}
        self.seen: set[tuple] = set()
        self.steps = 0

    def push(self, cube: CellCube) -> None:
        if cube.support not in self.fans:
            raise InputError(f"cube with support {cube.support} lies outside the complex")
        if cube.key in self.seen:
            return
        self.seen.add(cube.key)
        self.pending.setdefault(cube.support, []).append(cube.cone)

    def _compatible(self, fan: Fan, target: Cone) -> bool:
        if target.key in fan.keys():
            return True
        for face in all_faces(target):
            for h in fan:
                if not face.contains_cone(h) and relints_meet(h, face):
                    return False
        return True

    def run(self) -> dict[Support, tuple[Cone, ...]]:
        while self.pending:
            support = max(self.pending, key=lambda s: (len(s), s))
            targets = self.pending.pop(support)
            for target in targets:
                fan = self.fans[support]
                if self._compatible(fan, target):
                    continue
                before = fan.keys()
                hyperplanes = []
                for w in target.facets:
                    if tuple(-x for x in w) not in hyperplanes:
                        hyperplanes.append(w)
                fan = fan.split(hyperplanes)
                self.fans[support] = fan
                self.steps += 1
                fresh = [c for c in fan if c.key not in before]
                logger.warning(
                    f"refinement on support {support}: {len(before)} -> {len(fan)} cones"
                )
                for c in fresh:
                    for b in boundary_cubes(support, c):
                        self.push(b)
        return {s: fan.cones for s, fan in self.fans.items()}


def refine_complex(complex: CWComplex, cubes: Iterable[CubeLike]) -> CWComplex:
    """
    Subdivide cells until every given cube interior is a union of cells.

    Strata are processed from the largest support down; cutting a stratum
    fan queues the lower-support closures of its new cones, so closures of
    cells stay subcomplexes.

    Parameters
    ----------
    complex : CWComplex
        Complex to refine
    cubes : Iterable[CellCube | ToricCube]
        Cubes inside the same ambient cube; a ToricCube stands for its
        full-support interior

    Returns
    -------
    CWComplex
        Complex on the same point set; unchanged when nothing needs cutting
    """
    refiner = _Refiner(complex.n, complex.fans)
    for cube in cubes:
        if isinstance(cube, ToricCube):
            if cube.n != complex.n:
                raise InputError(f"cube of dimension {cube.n} in a complex of dimension {complex.n}")
            cube = CellCube.from_cube(cube)
        elif any(not 0 <= i < complex.n for i in cube.support):
            raise InputError(f"cube support {cube.support} outside dimension {complex.n}")
        refiner.push(cube)
    fans = refiner.run()
    return CWComplex(complex.cube, fans, complex.refinements + refiner.steps)


def build_cw(cube: ToricCube, max_support_dim: Optional[int] = None) -> CWComplex:
    """
    CW decomposition whose cells are interiors of toric cubes.

    Supports are added in increasing order. Before the Tuffley cells of a
    support are attached, the complex built so far is refined so that the
    lower-support closure of each new cell is a union of existing cells.

    Parameters
    ----------
    cube : ToricCube
        The cube to decompose
    max_support_dim : int, optional
        Override of the cap on support enumeration

    Returns
    -------
    CWComplex
        Equal to the Tuffley partition when no refinement is triggered
    """
    complex = CWComplex(cube, {})
    for st in cube.present_strata(max_support_dim):
        tuffley = all_faces(st.cone)
        boundary = [b for g in tuffley for b in boundary_cubes(st.support, g)]
        if boundary:
            complex = refine_complex(complex, boundary)
        complex = CWComplex(cube, {**complex.fans, st.support: tuffley}, complex.refinements)
    logger.info(
        f"built CW complex: {len(complex)} cells, f-vector {complex.f_vector}, {complex.refinements} refinements"
    )
    return complex
