import logging
from dataclasses import dataclass, field
from typing import Iterable, Union

import networkx as nx

from .cells import OpenCell
from .complex import CWComplex

logger = logging.getLogger(__name__)


def euler(cells: Union[CWComplex, Iterable[OpenCell], Iterable[int]]) -> int:
    """
    Alternating count sum_k (-1)^k f_k.

    Accepts a complex, a collection of cells, or an f-vector.
    """
    if isinstance(cells, CWComplex):
        cells = cells.cells
    total = 0
    items = list(cells)
    if items and not isinstance(items[0], OpenCell):
        return sum((-1) ** k * f for k, f in enumerate(items))
    for c in items:
        total += (-1) ** c.dim
    return total


@dataclass
class CellRegularity:
    id: int
    dim: int
    closure_euler: int
    boundary_euler: int

    @property
    def expected_boundary_euler(self) -> int:
        return 0 if self.dim == 0 else 1 + (-1) ** (self.dim - 1)

    @property
    def ok(self) -> bool:
        return self.closure_euler == 1 and self.boundary_euler == self.expected_boundary_euler


@dataclass
class RegularityReport:
    """Outcome of the regularity checks; ``failures`` maps a check name to offending cell ids."""

    cells: list[CellRegularity]
    euler_characteristic: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def regularity_report(complex: CWComplex) -> RegularityReport:
    """
    Testable proxies for regularity of a CW complex of toric cubes.

    Checks that every closed cell has Euler characteristic 1 and every
    k-cell boundary that of a (k-1)-sphere, that the whole complex has
    Euler characteristic 1, that covers raise dimension by one, that
    every interval of length two is a diamond, that each 1-cell has two
    vertices, and that closures only add lower-dimensional cells.

    Parameters
    ----------
    complex : CWComplex
        The complex to inspect

    Returns
    -------
    RegularityReport
        Per-cell Euler data and a pass/fail flag per check
    """
    by_id = {c.id: c for c in complex.cells}
    closures = complex.closures
    graph = complex.closure_graph

    per_cell = []
    for c in complex.cells:
        closed = [by_id[i] for i in closures[c.id]]
        chi = euler(closed)
        per_cell.append(CellRegularity(id=c.id, dim=c.dim, closure_euler=chi, boundary_euler=chi - (-1) ** c.dim))

    failures: dict[str, list] = {
        "closed_cell_euler": [r.id for r in per_cell if r.closure_euler != 1],
        "boundary_euler": [r.id for r in per_cell if r.boundary_euler != r.expected_boundary_euler],
        "graded": [],
        "diamond": [],
        "edge_vertices": [],
        "boundary_subcomplex": [],
    }

    covers = nx.transitive_reduction(graph).edges
    failures["graded"] = sorted((h, c) for h, c in covers if by_id[c].dim != by_id[h].dim + 1)

    for c in complex.cells:
        below = [by_id[i] for i in closures[c.id]]
        if any(h.id != c.id and h.dim >= c.dim for h in below):
            failures["boundary_subcomplex"].append(c.id)
        if c.dim == 1 and sum(1 for h in below if h.dim == 0) != 2:
            failures["edge_vertices"].append(c.id)
        for h in below:
            if h.dim != c.dim - 2:
                continue
            middle = [m for m in below if m.dim == c.dim - 1 and h.id in closures[m.id]]
            if len(middle) != 2:
                failures["diamond"].append((h.id, c.id))

    total = euler(complex)
    checks = {name: not bad for name, bad in failures.items()}
    checks["total_euler"] = total == 1
    report = RegularityReport(cells=per_cell, euler_characteristic=total, checks=checks, failures=failures)
    if not report.passed:
        logger.warning(f"regularity checks failed: {[k for k, v in checks.items() if not v]}")
    return report
