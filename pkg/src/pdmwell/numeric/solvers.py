"""Finite-difference eigensolvers for the canonical and position-space problems.

``solve_q_space`` discretizes ``-phi'' - lam(lam-1) mu^2 sech^2(mu q) phi``
with the 3-point Laplacian on a truncated line.  ``solve_x_space`` discretizes
the self-adjoint operator ``-(1/m psi')' + V~ psi`` directly inside the well,
with the flux coefficient ``1/m`` sampled at half-nodes.  Both estimate their
eigenvalues by Sturm bisection and are second order in the spacing, except
that the position-space levels closest to threshold pick up a first-order
error from the Dirichlet cut near the walls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .. import geometry
from ..errors import GridMismatch, GridTooCoarse
from ..geometry import WellSpec
from ..ordering import Couplings, OrderingParams, bound_state_count, couplings
from .grid import GridSpec
from .tridiag import inverse_iteration, lowest_eigenvalues

X_MARGIN = 10
CONVERGENCE_TOL = 1e-4


@dataclass(frozen=True)
class EigenResult:
    """Discrete eigenpairs on ``grid``.

    ``vectors[j]`` holds level ``j`` at every grid node (Dirichlet zeros
    included), normalized under trapezoidal weights.
    """

    energies: np.ndarray
    vectors: np.ndarray
    grid: GridSpec

    @property
    def abscissae(self) -> np.ndarray:
        return self.grid.nodes


def default_q_span(w: WellSpec) -> float:
    """Half-width of the truncated canonical line, ``max(8 L, 12 / mu)``."""
    return max(8.0 * w.L, 12.0 / w.mu)


def default_q_grid(w: WellSpec, points: int = 4001) -> GridSpec:
    q = default_q_span(w)
    return GridSpec(-q, q, points)


def default_x_grid(w: WellSpec, points: int = 4001) -> GridSpec:
    return GridSpec(-w.L, w.L, points, X_MARGIN)


def _eigenpairs(d: np.ndarray, e: np.ndarray, grid: GridSpec, k_levels: int) -> EigenResult:
    energies = lowest_eigenvalues(d, e, k_levels)
    interior = inverse_iteration(d, e, energies)
    vectors = np.zeros((k_levels, grid.points))
    vectors[:, 1:-1] = interior / np.sqrt(grid.h)
    # sign convention: the leftmost significant lobe is positive
    for v in vectors:
        big = np.flatnonzero(np.abs(v) > 1e-3 * np.max(np.abs(v)))
        if big.size and v[big[0]] < 0:
            v *= -1.0
    return EigenResult(energies, vectors, grid)


def _check_convergence(coarse: EigenResult, fine: EigenResult, tol: float, mu: float):
    shift = np.max(np.abs(fine.energies - coarse.energies), initial=0.0)
    if shift > tol * mu ** 2:
        raise GridTooCoarse(
            f"eigenvalues moved by {shift:.3g} on grid doubling "
            f"(limit {tol * mu ** 2:.3g}, h = {coarse.grid.h:.3g})"
        )


def _q_matrix(c: Couplings, w: WellSpec, grid: GridSpec):
    q = grid.nodes[1:-1]
    h = grid.h
    well = geometry.v_eff_closed(w, c, q) - w.mu ** 2 * c.shift_coefficient
    d = 2.0 / h ** 2 + np.asarray(well)
    e = np.full(q.size - 1, -1.0 / h ** 2)
    return d, e


def solve_q_space(c: Couplings, w: WellSpec, grid: Optional[GridSpec] = None,
                  k_levels: Optional[int] = None,
                  convergence_tol: Optional[float] = CONVERGENCE_TOL) -> EigenResult:
    """Lowest ``k_levels`` eigenpairs of the canonical (constant-mass) problem.

    Energies are measured without the constant shift, i.e. they estimate the
    reference levels ``-mu^2 (lam - 1 - n)^2``.

    Parameters
    ----------
    grid : GridSpec, optional
        Symmetric grid ``[-Q, Q]`` with ``Q >= 8 L``; defaults to
        :func:`default_q_grid`.
    k_levels : int, optional
        Defaults to the number of bound states.
    convergence_tol : float or None
        If set, the problem is also solved at half the spacing and
        :class:`GridTooCoarse` is raised when any level moves by more than
        ``convergence_tol * mu^2``.
    """
    c.require_lambda()
    grid = default_q_grid(w) if grid is None else grid
    if grid.margin or abs(grid.lo + grid.hi) > 1e-12 * grid.hi or grid.hi < 8.0 * w.L * (1 - 1e-12):
        raise ValueError("q-space grid must be symmetric [-Q, Q] with Q >= 8 L and no margin")
    k_levels = bound_state_count(c.lambda_) if k_levels is None else k_levels
    result = _eigenpairs(*_q_matrix(c, w, grid), grid, k_levels)
    if convergence_tol is not None:
        fine = _eigenpairs(*_q_matrix(c, w, grid.doubled()), grid.doubled(), k_levels)
        _check_convergence(result, fine, convergence_tol, w.mu)
    return result


def _x_matrix(o: OrderingParams, w: WellSpec, grid: GridSpec):
    x = grid.nodes
    h = grid.h
    mid = 0.5 * (x[:-1] + x[1:]) / w.L
    flux = ((1.0 - mid) * (1.0 + mid)) ** 2  # 1/m at half-nodes
    d = (flux[:-1] + flux[1:]) / h ** 2 + np.asarray(geometry.v_tilde(w, o, x[1:-1]))
    e = -flux[1:-1] / h ** 2
    return d, e


def solve_x_space(o: OrderingParams, w: WellSpec, grid: Optional[GridSpec] = None,
                  k_levels: Optional[int] = None,
                  convergence_tol: Optional[float] = None) -> EigenResult:
    """Lowest eigenpairs of the position-dependent-mass problem in ``x``.

    The grid must cover ``[-L, L]`` with a positive margin so that the
    Dirichlet nodes stay off the singular walls.  ``convergence_tol`` is off by
    default because the levels nearest threshold converge only at first order
    in the spacing; see :func:`richardson_x_space`.
    """
    grid = default_x_grid(w) if grid is None else grid
    if grid.margin < 1 or abs(grid.lo + w.L) > 1e-12 * w.L or abs(grid.hi - w.L) > 1e-12 * w.L:
        raise ValueError("x-space grid must cover [-L, L] with margin >= 1")
    if k_levels is None:
        k_levels = bound_state_count(couplings(o.alpha, o.beta).lambda_)
    result = _eigenpairs(*_x_matrix(o, w, grid), grid, k_levels)
    if convergence_tol is not None:
        fine = _eigenpairs(*_x_matrix(o, w, grid.doubled()), grid.doubled(), k_levels)
        _check_convergence(result, fine, convergence_tol, w.mu)
    return result


def refine(coarse: EigenResult, fine: EigenResult, order: int = 2) -> EigenResult:
    """Richardson extrapolation assuming an ``h**order`` leading error.

    ``fine`` must have half the spacing of ``coarse`` on the same interval
    and margin.  The returned result keeps the fine grid and eigenvectors.
    """
    a, b = coarse.grid, fine.grid
    if (a.lo, a.hi, a.margin) != (b.lo, b.hi, b.margin):
        raise GridMismatch(f"grids cover different intervals: {a} vs {b}")
    if abs(a.h - 2.0 * b.h) > 1e-12 * a.h:
        raise GridMismatch(f"spacing ratio is {a.h / b.h:.6g}, expected 2")
    if coarse.energies.shape != fine.energies.shape:
        raise GridMismatch("different numbers of levels")
    factor = 2.0 ** order
    energies = (factor * fine.energies - coarse.energies) / (factor - 1.0)
    return EigenResult(energies, fine.vectors, fine.grid)


def richardson_q_space(c: Couplings, w: WellSpec, points: int = 4001,
                       k_levels: Optional[int] = None) -> EigenResult:
    """Second-order extrapolation from spacings ``h`` and ``h/2``."""
    grid = default_q_grid(w, points)
    coarse = solve_q_space(c, w, grid, k_levels, convergence_tol=None)
    fine = solve_q_space(c, w, grid.doubled(), k_levels, convergence_tol=None)
    return refine(coarse, fine, 2)


def richardson_x_space(o: OrderingParams, w: WellSpec, points: int = 4001,
                       k_levels: Optional[int] = None) -> EigenResult:
    """Two-stage extrapolation over spacings ``h``, ``h/2`` and ``h/4``.

    A first-order pass removes the wall-cut error of the shallowest levels,
    a second-order pass then removes the stencil error.
    """
    grid = default_x_grid(w, points)
    runs = []
    for _ in range(3):
        runs.append(solve_x_space(o, w, grid, k_levels))
        grid = grid.doubled()
    first = [refine(runs[0], runs[1], 1), refine(runs[1], runs[2], 1)]
    return refine(first[0], first[1], 2)
