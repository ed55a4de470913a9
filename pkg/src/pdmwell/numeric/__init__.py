"""Independent numerical oracles: eigensolvers and scattering."""

from .grid import GridSpec
from .scattering import ScatterResult, reflection, reflection_closed_form, reflection_scan
from .solvers import (
    EigenResult,
    default_q_grid,
    default_x_grid,
    refine,
    richardson_q_space,
    richardson_x_space,
    solve_q_space,
    solve_x_space,
)

__all__ = [
    "EigenResult", "GridSpec", "ScatterResult", "default_q_grid", "default_x_grid",
    "reflection", "reflection_closed_form", "reflection_scan", "refine",
    "richardson_q_space", "richardson_x_space", "solve_q_space", "solve_x_space",
]
