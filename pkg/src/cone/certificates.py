from fractions import Fraction
from typing import Iterable, Optional, Sequence

from src.exactnum import IntVec, primitive_rational, support
from .cone import Cone, require_nonnegative, check_indices


def uncovered_coordinates(generators: Sequence[IntVec], indices: Iterable[int], n: int) -> list[int]:
    """
    Coordinates outside S not reached by any generator vanishing on S.

    With R0 = {r : r_i = 0 for i in S}, returns the sorted complement of S
    minus the union of supp(r) over R0. An empty result means the stratum
    of support S is present.
    """
    s = set(indices)
    covered: set[int] = set()
    for r in generators:
        if all(r[i] == 0 for i in s):
            covered |= support(r)
    return [i for i in range(n) if i not in s and i not in covered]


def killer_certificate(c: Cone, indices: Iterable[int]) -> Optional[IntVec]:
    """
    Valid inequality excluding the points with support exactly S.

    For the smallest uncovered coordinate i, every generator with r_i > 0
    has positive mass on S, so w = M * 1_S - e_i with
    M = max r_i / sum_{j in S} r_j is non-negative on the cone.

    Parameters
    ----------
    c : Cone
        Cone in the non-negative orthant
    indices : Iterable[int]
        Support S

    Returns
    -------
    Optional[IntVec]
        Primitive normal w with supp(w+) inside S and i in supp(w-), or None
        when the stratum is present
    """
    s = check_indices(c.ambient_dim, indices)
    require_nonnegative(c)
    missing = uncovered_coordinates(c.generators, s, c.ambient_dim)
    if not missing:
        return None
    i = missing[0]
    m = max(
        (Fraction(r[i], sum(r[j] for j in s)) for r in c.generators if r[i] > 0),
        default=Fraction(0),
    )
    w = [m if j in s else Fraction(0) for j in range(c.ambient_dim)]
    w[i] = Fraction(-1)
    return primitive_rational(w)
