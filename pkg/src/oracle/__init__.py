from .fm import fm_cone_contains, fm_eliminate, fm_log_cone
from .grid import GridSample, Violation, achievable_supports, check_sample, contraction_path, grid_image

__all__ = [
    "fm_cone_contains",
    "fm_eliminate",
    "fm_log_cone",
    "GridSample",
    "Violation",
    "achievable_supports",
    "check_sample",
    "contraction_path",
    "grid_image",
]
