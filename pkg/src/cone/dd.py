import logging
from functools import lru_cache
from typing import Sequence

from src.exactnum import (
    IntVec,
    RatMatrix,
    combine,
    dot,
    is_zero,
    primitive,
    primitive_rational,
    row_space_basis,
    solve,
    unit,
)

logger = logging.getLogger(__name__)


def double_description(
    n: int, inequalities: Sequence[IntVec]
) -> tuple[list[IntVec], list[IntVec]]:
    """
    Incremental double description of {y : w . y >= 0 for all w}.

    Starts from the whole space (lineality = unit vectors, no rays) and adds
    one inequality at a time. While the inequality is not orthogonal to the
    current lineality space, one lineality direction is turned into a ray;
    afterwards the classical positive/negative split is used, combining only
    adjacent pairs (combinatorial adjacency test on tight-constraint sets).

    Parameters
    ----------
    n : int
        Ambient dimension
    inequalities : Sequence[IntVec]
        Integer normals w

    Returns
    -------
    tuple[list[IntVec], list[IntVec]]
        Extreme rays modulo lineality and a lineality basis, both primitive
    """
    lineality: list[IntVec] = [unit(n, i) for i in range(n)]
    rays: list[tuple[IntVec, frozenset[int]]] = []
    processed: list[int] = []

    for k, w in enumerate(inequalities):
        if is_zero(w):
            continue
        values = [dot(w, v) for v in lineality]
        j = next((i for i, v in enumerate(values) if v != 0), None)

        if j is not None:
            l0, v0 = lineality[j], values[j]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lineality = []
            for i, v in enumerate(lineality):
                if i == j:
                    continue
                shifted = combine(v0, v, -values[i], l0)
                if not is_zero(shifted):
                    new_lineality.append(primitive(shifted))
            new_rays = []
            for r, zeros in rays:
                shifted = combine(v0, r, -dot(w, r), l0)
                if not is_zero(shifted):
                    new_rays.append((primitive(shifted), zeros | {k}))
            new_rays.append((primitive(l0), frozenset(processed)))
            lineality, rays = new_lineality, new_rays
        else:
            scored = [(r, zeros, dot(w, r)) for r, zeros in rays]
            positive = [(r, z, s) for r, z, s in scored if s > 0]
            negative = [(r, z, s) for r, z, s in scored if s < 0]
            new_rays = [(r, z) for r, z, s in scored if s > 0]
            new_rays += [(r, z | {k}) for r, z, s in scored if s == 0]
            for p, zp, sp in positive:
                for q, zq, sq in negative:
                    common = zp & zq
                    if not _adjacent(common, p, q, rays):
                        continue
                    r = primitive(combine(sp, q, -sq, p))
                    new_rays.append((r, common | {k}))
            rays = new_rays
        processed.append(k)

    logger.debug(f"DD in dimension {n}: {len(rays)} rays, lineality {len(lineality)}")
    return [r for r, _ in rays], lineality


def _adjacent(common: frozenset[int], p: IntVec, q: IntVec, rays) -> bool:
    for t, zt in rays:
        if t == p or t == q:
            continue
        if common <= zt:
            return False
    return True


def _project_off(vectors: list[IntVec], basis: list[IntVec], n: int) -> list[IntVec]:
    """Orthogonal projection of each vector onto the complement of span(basis)."""
    if not basis:
        return vectors
    gram = RatMatrix.from_rows([[dot(a, b) for b in basis] for a in basis], cols=len(basis))
    spanning = RatMatrix.from_rows(basis, cols=n).transpose()
    out = []
    for v in vectors:
        coef = solve(gram, [dot(a, v) for a in basis])
        projected = [x - s for x, s in zip(v, spanning.apply(coef))]
        if any(x != 0 for x in projected):
            out.append(primitive_rational(projected))
    return out


def _canonical(n: int, rays: list[IntVec], lineality: list[IntVec]) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
    basis = row_space_basis(lineality, n)
    pointed = sorted(set(_project_off(rays, basis, n)))
    return tuple(pointed), tuple(basis)


@lru_cache(maxsize=65536)
def extreme_rays(n: int, inequalities: tuple[IntVec, ...]) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
    """
    Canonical generators of an H-described cone.

    Returns
    -------
    tuple
        (pointed extreme rays orthogonal to the lineality space, lineality
        basis in primitive reduced echelon form); both sorted
    """
    rays, lineality = double_description(n, inequalities)
    return _canonical(n, rays, lineality)


@lru_cache(maxsize=65536)
def facet_normals(n: int, generators: tuple[IntVec, ...]) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
    """
    Canonical irredundant H-description of cone(generators).

    Computed as the extreme rays of the dual cone {w : w . r >= 0}.

    Returns
    -------
    tuple
        (facet normals inside span(generators), basis of the equations
        orthogonal to span(generators))
    """
    return extreme_rays(n, generators)
