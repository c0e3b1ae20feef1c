import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from src.exactnum import IntVec, dot, rank_of
from src.exceptions import InputError
from .cone import Cone

logger = logging.getLogger(__name__)

RaySet = frozenset[int]


@dataclass(frozen=True)
class FacePoset:
    """
    Faces of a pointed cone above the apex.

    Each element is the set of indices (into ``rays``) of the extreme rays
    spanning the face. Elements are sorted by dimension, then by their sorted
    index tuple, and ``covers`` lists index pairs (lower, upper) of the cover
    relation.
    """

    rays: tuple[IntVec, ...]
    elements: tuple[RaySet, ...]
    dims: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def index(self, element) -> int:
        return self.elements.index(frozenset(element))

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Hasse diagram with edges pointing upward."""
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.elements)))
        g.add_edges_from(self.covers)
        return g

    def maximal_chains(self) -> list[tuple[RaySet, ...]]:
        """
        All maximal chains, from a ray up to the whole cone.

        Returns
        -------
        list[tuple[RaySet, ...]]
            Chains ordered bottom-up, sorted lexicographically by their
            sorted index tuples
        """
        atoms = [i for i, d in enumerate(self.dims) if d == 1]
        chains = []
        for a in atoms:
            if a == self.top:
                chains.append((self.elements[a],))
                continue
            for path in nx.all_simple_paths(self.graph, a, self.top):
                chains.append(tuple(self.elements[i] for i in path))
        return sorted(chains, key=lambda c: [tuple(sorted(e)) for e in c])


def face_lattice(c: Cone) -> FacePoset:
    """
    Enumerate the nonempty-ray faces of a pointed cone.

    Faces are obtained by closing the full ray set under intersection with
    the tight sets of the facets; the apex (empty ray set) is excluded.

    Parameters
    ----------
    c : Cone
        Pointed cone with at least one ray

    Returns
    -------
    FacePoset
        Faces graded by dimension with their cover relation
    """
    if not c.is_pointed:
        raise InputError("face lattice requires pointed cone")
    rays = c.extreme_rays
    if not rays:
        raise InputError("face lattice requires a cone with at least one ray")

    tight = [frozenset(i for i, r in enumerate(rays) if dot(w, r) == 0) for w in c.proper_facets]
    full = frozenset(range(len(rays)))
    found = {full}
    stack = [full]
    while stack:
        face = stack.pop()
        for t in tight:
            sub = face & t
            if sub and sub not in found:
                found.add(sub)
                stack.append(sub)

    def dim_of(face: RaySet) -> int:
        return rank_of([rays[i] for i in face], c.ambient_dim)

    ordered = sorted(found, key=lambda f: (dim_of(f), tuple(sorted(f))))
    dims = tuple(dim_of(f) for f in ordered)

    inclusion = nx.DiGraph()
    inclusion.add_nodes_from(range(len(ordered)))
    inclusion.add_edges_from(
        (i, j) for i, a in enumerate(ordered) for j, b in enumerate(ordered) if a < b
    )
    covers = tuple(sorted(nx.transitive_reduction(inclusion).edges))
    logger.debug(f"face lattice: {len(ordered)} faces, {len(covers)} covers")
    return FacePoset(rays=rays, elements=tuple(ordered), dims=dims, covers=covers)


def all_faces(c: Cone) -> list[Cone]:
    """Every face of a pointed cone as a Cone, the apex first, ordered by dimension."""
    faces = [Cone.zero(c.ambient_dim)]
    if not c.extreme_rays:
        return faces
    poset = face_lattice(c)
    faces.extend(Cone.from_rays(c.ambient_dim, [poset.rays[i] for i in e]) for e in poset.elements)
    return faces
