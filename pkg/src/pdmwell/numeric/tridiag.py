"""Lowest eigenpairs of a real symmetric tridiagonal matrix.

Eigenvalues come from bisection on the Sturm count (the number of negative
pivots of ``T - sigma I``); eigenvectors from inverse iteration.
"""

from __future__ import annotations

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

MAX_BISECTIONS = 200


@njit(cache=True)
def sturm_count(d, e2, sigma, pivmin):
    """Number of eigenvalues of ``T`` strictly below ``sigma``."""
    count = 0
    q = d[0] - sigma
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, d.size):
        q = d[i] - sigma - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect(d, e2, k, lo, hi, pivmin):
    eps = 2.220446049250313e-16
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 2.0 * eps * max(abs(lo), abs(hi)) + pivmin or mid == lo or mid == hi:
            break
        if sturm_count(d, e2, mid, pivmin) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def gershgorin(d: np.ndarray, e: np.ndarray) -> tuple[float, float]:
    r = np.zeros_like(d)
    r[:-1] += np.abs(e)
    r[1:] += np.abs(e)
    return float(np.min(d - r)), float(np.max(d + r))


def lowest_eigenvalues(d: np.ndarray, e: np.ndarray, count: int) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending.

    ``d`` is the diagonal and ``e`` the off-diagonal of the matrix.
    """
    d = np.ascontiguousarray(d, dtype=float)
    e2 = np.ascontiguousarray(np.asarray(e, dtype=float) ** 2)
    lo, hi = gershgorin(d, np.asarray(e, dtype=float))
    norm = max(abs(lo), abs(hi), 1.0)
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2, initial=0.0)))
    lo -= 1e-12 * norm
    hi += 1e-12 * norm
    out = np.empty(count)
    for k in range(count):
        # eigenvalue k lies above eigenvalue k - 1
        start = out[k - 1] - 1e-13 * norm if k else lo
        out[k] = _bisect(d, e2, k, start, hi, pivmin)
    return out


def inverse_iteration(d: np.ndarray, e: np.ndarray, eigenvalues: np.ndarray,
                      iterations: int = 3, seed: int = 0) -> np.ndarray:
    """Unit eigenvectors (rows) for the given eigenvalues."""
    n = d.size
    rng = np.random.default_rng(seed)
    scale = max(float(np.max(np.abs(d))), float(np.max(np.abs(e), initial=0.0)), 1.0)
    vectors = np.empty((len(eigenvalues), n))
    band = np.zeros((3, n))
    band[0, 1:] = e
    band[2, :-1] = e
    for j, lam in enumerate(eigenvalues):
        # keep the shifted matrix invertible in floating point
        shift = lam + 64.0 * np.finfo(float).eps * scale
        band[1] = d - shift
        v = rng.standard_normal(n)
        for _ in range(iterations):
            v = solve_banded((1, 1), band, v)
            v -= vectors[:j].T @ (vectors[:j] @ v)
            v /= np.linalg.norm(v)
        vectors[j] = v
    return vectors
