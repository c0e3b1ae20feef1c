"""
Fourier-Motzkin elimination on homogeneous inequalities a . x >= 0.

Used as a second, independent route to the log-cone of a monomial map;
nothing here touches the double-description engine.
"""

import logging
from typing import Sequence

from src.exactnum import IntVec, dot, primitive
from src.exceptions import InputError
from src.toric import MonomialMap

logger = logging.getLogger(__name__)


def _normalized(rows) -> list[IntVec]:
    out = set()
    for r in rows:
        if any(x != 0 for x in r):
            out.add(primitive(r))
    return sorted(out)


def fm_eliminate(rows: Sequence[IntVec], col: int) -> list[IntVec]:
    """
    Project out one variable.

    Rows with a zero coefficient in ``col`` are kept; every pair of a
    positive and a negative row is combined so that the coefficient
    cancels. The column itself is removed from the result.
    """
    if rows and not 0 <= col < len(rows[0]):
        raise InputError(f"column {col} out of range")
    zero = [r for r in rows if r[col] == 0]
    pos = [r for r in rows if r[col] > 0]
    neg = [r for r in rows if r[col] < 0]
    combined = list(zero)
    for p in pos:
        for q in neg:
            combined.append(tuple(-q[col] * a + p[col] * b for a, b in zip(p, q)))
    logger.debug(f"eliminate column {col}: z={len(zero)}, p={len(pos)}, n={len(neg)}")
    return _normalized(r[:col] + r[col + 1:] for r in combined)


def fm_log_cone(m: MonomialMap) -> list[IntVec]:
    """
    Inequalities of {A s : s >= 0} in R^n, A the exponent matrix.

    Starts from y - A s = 0 (two inequalities per coordinate) and s >= 0 in
    the variables (y, s), then eliminates s one parameter at a time.
    """
    n, d = m.n, m.d
    rows: list[IntVec] = []
    for j, a in enumerate(m.rows):
        y = tuple(int(i == j) for i in range(n))
        rows.append(y + tuple(-x for x in a))
        rows.append(tuple(-x for x in y) + tuple(a))
    for k in range(d):
        rows.append(tuple(0 for _ in range(n)) + tuple(int(i == k) for i in range(d)))
    rows = _normalized(rows)
    for _ in range(d):
        rows = fm_eliminate(rows, n)
    return rows


def fm_cone_contains(inequalities: Sequence[Sequence[int]], point: Sequence) -> bool:
    """Direct evaluation: True iff w . point >= 0 for every normal w."""
    return all(dot(w, point) >= 0 for w in inequalities)
