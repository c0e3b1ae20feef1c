import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from src.exactnum import IntVec
from src.exceptions import ContainmentError, InputError
from .cone import Cone

logger = logging.getLogger(__name__)


def _dedupe(cones: Iterable[Cone]) -> list[Cone]:
    seen: dict[tuple, Cone] = {}
    for c in cones:
        seen.setdefault(c.key, c)
    return list(seen.values())


@dataclass(frozen=True)
class Fan:
    """
    Finite collection of cones in a common ambient space.

    A fan produced by ``split`` keeps every face of its members; one produced
    by ``subdivide_containing`` lists only maximal cones.
    """

    ambient_dim: int
    cones: tuple[Cone, ...]

    def __post_init__(self):
        for c in self.cones:
            if c.ambient_dim != self.ambient_dim:
                raise InputError(f"cone of dimension {c.ambient_dim} in a fan of dimension {self.ambient_dim}")

    def __len__(self) -> int:
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def keys(self) -> set[tuple]:
        return {c.key for c in self.cones}

    def split(self, hyperplanes: Sequence[IntVec]) -> "Fan":
        """
        Common refinement with the arrangement of the given hyperplanes.

        Every member C is replaced by C ∩ {w >= 0}, C ∩ {w <= 0} and
        C ∩ {w = 0} for each normal w in turn. A fan closed under faces
        stays closed under faces.
        """
        cones = list(self.cones)
        for w in hyperplanes:
            neg = tuple(-x for x in w)
            pieces = []
            for c in cones:
                values = {_sign(w, r) for r in c.rays}
                if values <= {0, 1} or values <= {0, -1}:
                    pieces.append(c)
                    pieces.append(c.with_inequalities([w, neg]))
                    continue
                pieces.append(c.with_inequalities([w]))
                pieces.append(c.with_inequalities([neg]))
                pieces.append(c.with_inequalities([w, neg]))
            cones = _dedupe(pieces)
        return Fan(self.ambient_dim, tuple(cones))


def _sign(w: IntVec, r: IntVec) -> int:
    v = sum(a * b for a, b in zip(w, r))
    return (v > 0) - (v < 0)


def _distinct_hyperplanes(normals: Iterable[IntVec]) -> list[IntVec]:
    out = []
    seen = set()
    for w in normals:
        neg = tuple(-x for x in w)
        if w in seen or neg in seen:
            continue
        seen.add(w)
        out.append(w)
    return out


def subdivide_containing(d: Cone, d_prime: Cone) -> Fan:
    """
    Subdivide d_prime into a fan in which d is a member.

    d_prime is cut by the hyperplanes spanned by the facets of d (both signs
    of an equation give one hyperplane). The result lists d first, followed
    by the remaining maximal pieces.

    Parameters
    ----------
    d : Cone
        Inner cone
    d_prime : Cone
        Outer cone, must contain d

    Returns
    -------
    Fan
        Maximal cones covering d_prime

    Raises
    ------
    ContainmentError
        If some ray of d lies outside d_prime
    """
    if d.ambient_dim != d_prime.ambient_dim:
        raise InputError(f"dimension mismatch: {d.ambient_dim} vs {d_prime.ambient_dim}")
    for r in d.generators:
        if not d_prime.contains(r):
            raise ContainmentError(f"ray {r} of the inner cone lies outside the outer cone", witness=r)

    pieces = [d_prime]
    for w in _distinct_hyperplanes(d.facets):
        neg = tuple(-x for x in w)
        next_pieces = []
        for p in pieces:
            upper, lower = p.with_inequalities([w]), p.with_inequalities([neg])
            if upper.dim == p.dim and lower.dim == p.dim:
                next_pieces.extend([upper, lower])
            else:
                next_pieces.append(p)
        pieces = next_pieces

    rest = [p for p in _dedupe(pieces) if p.key != d.key]
    logger.debug(f"subdivision into {1 + len(rest)} cones")
    return Fan(d.ambient_dim, (d, *rest))
