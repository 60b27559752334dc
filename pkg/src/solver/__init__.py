"""
Exact optimization over block-structured instances: brute-force oracle,
brick DP, phase one and the augmentation loop
"""

from .brute import brute_solve, constraint_matrix
from .dp import brick_dp, best_step_dp, fiber_points, step_window
from .slack import (
    with_slack_columns,
    inequality_to_equality,
    phase_one,
    strip_slacks,
    clamped_origin,
)
from .estimate import estimate_guess_radius, measured_norms
from .augmentation import solve, resolve_caps, is_feasible

__all__ = [
    "brute_solve",
    "constraint_matrix",
    "brick_dp",
    "best_step_dp",
    "fiber_points",
    "step_window",
    "with_slack_columns",
    "inequality_to_equality",
    "phase_one",
    "strip_slacks",
    "clamped_origin",
    "estimate_guess_radius",
    "measured_norms",
    "solve",
    "resolve_caps",
    "is_feasible",
]
