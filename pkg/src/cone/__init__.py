from .cone import (
    Cone,
    check_indices,
    cone_equal,
    dim,
    face_zero,
    facets_to_rays,
    project,
    rays_to_facets,
    relints_meet,
    require_nonnegative,
)
from .faces import FacePoset, all_faces, face_lattice
from .fan import Fan, subdivide_containing
from .certificates import killer_certificate, uncovered_coordinates

__all__ = [
    "Cone",
    "check_indices",
    "cone_equal",
    "dim",
    "face_zero",
    "facets_to_rays",
    "project",
    "rays_to_facets",
    "relints_meet",
    "require_nonnegative",
    "FacePoset",
    "all_faces",
    "face_lattice",
    "Fan",
    "subdivide_containing",
    "killer_certificate",
    "uncovered_coordinates",
]
