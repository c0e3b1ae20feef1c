from fractions import Fraction
from typing import Iterable, Optional, Sequence

from src.cone import Cone, check_indices
from src.exactnum import restrict, support, unit
from src.exceptions import InputError
from .binomial import BinomialSystem
from .monomial import MonomialMap


def log_cone_of_map(m: MonomialMap) -> Cone:
    """The cone generated by the columns of the exponent matrix."""
    return Cone.from_rays(m.n, m.columns)


def cone_of_system(s: BinomialSystem) -> Cone:
    """
    Log-cone of the positive part of a precube.

    Each x^u <= x^v becomes (u - v) . y >= 0 with y = -log x, intersected
    with the non-negative orthant.
    """
    normals = [unit(s.n, i) for i in range(s.n)]
    normals += [ineq.log_normal for ineq in s]
    return Cone.from_inequalities(s.n, normals)


def member(x: Sequence, s: BinomialSystem) -> bool:
    """
    Exact membership of a rational point of [0,1]^n in the solution set.

    Raises
    ------
    InputError
        If the point has the wrong length or a coordinate outside [0,1]
    """
    if len(x) != s.n:
        raise InputError(f"point of length {len(x)}, expected {s.n}")
    point = tuple(Fraction(c) for c in x)
    for i, c in enumerate(point):
        if not 0 <= c <= 1:
            raise InputError(f"coordinate x[{i}] = {c} outside [0,1]")
    return all(ineq.holds_at(point) for ineq in s)


def stratum_restriction(s: BinomialSystem, indices: Iterable[int]) -> Optional[Cone]:
    """
    Log-points of the solutions whose support is exactly S.

    An inequality whose left monomial involves a vanishing coordinate holds
    trivially; otherwise one whose right monomial does is unsatisfiable;
    otherwise it restricts to a linear inequality on R^S.

    Parameters
    ----------
    s : BinomialSystem
        The system
    indices : Iterable[int]
        Support S

    Returns
    -------
    Optional[Cone]
        A cone in R^|S|, or None when no solution has support S
    """
    idx = check_indices(s.n, indices)
    inside = set(idx)
    normals = [unit(len(idx), i) for i in range(len(idx))]
    for ineq in s:
        if not support(ineq.u) <= inside:
            continue
        if not support(ineq.v) <= inside:
            return None
        normals.append(restrict(ineq.log_normal, idx))
    return Cone.from_inequalities(len(idx), normals)
