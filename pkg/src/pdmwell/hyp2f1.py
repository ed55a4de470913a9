"""Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 0.

Terminating (polynomial) cases are summed exactly.  Everything else goes
through the Pfaff transformation

    2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; w),   w = z / (z - 1),

which maps the negative half-line onto ``0 <= w < 1`` where the power series
converges.  The symmetric variant with the roles of ``a`` and ``b`` swapped is
used when it terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .errors import DomainError, NoConvergence, PoleAtC

INTEGER_TOL = 1e-12
TAIL_TOL = 1e-15
MAX_TERMS = 10 ** 6
SLOW_W = 1.0 - 1e-6


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float


def _nonpositive_integer(v: float) -> Optional[int]:
    k = round(-v)
    if k >= 0 and abs(v + k) <= INTEGER_TOL:
        return int(k)
    return None


def is_terminating(p: HypParams) -> Optional[int]:
    """Polynomial degree if ``a`` or ``b`` is a non-positive integer, else None."""
    degrees = [d for d in (_nonpositive_integer(p.a), _nonpositive_integer(p.b))
               if d is not None]
    return min(degrees) if degrees else None


def _check_pole(p: HypParams, degree: Optional[int]) -> None:
    pole = _nonpositive_integer(p.c)
    if pole is not None and (degree is None or degree > pole):
        raise PoleAtC(f"c = {p.c!r} is a pole of 2F1 reached before termination")


def _polynomial(p: HypParams, degree: int, z: np.ndarray) -> np.ndarray:
    total = np.ones_like(z)
    term = np.ones_like(z)
    for i in range(degree):
        term = term * ((p.a + i) * (p.b + i) / ((p.c + i) * (i + 1.0))) * z
        total = total + term
    return total


@njit(cache=True)
def _series_kernel(a, b, c, w, out):
    # returns the index of the first point that failed to converge, or -1
    settle = 2.0 * (abs(a) + abs(b) + abs(c)) + 2.0
    for j in range(w.size):
        wj = w[j]
        total = 1.0
        term = 1.0
        done = False
        for k in range(MAX_TERMS):
            coef = (a + k) * (b + k) / ((c + k) * (k + 1.0))
            term *= coef * wj
            total += term
            if term == 0.0:
                done = True
                break
            if k < settle:
                continue
            rho = max(abs(coef) * wj, wj)
            if rho < 1.0 and abs(term) * rho / (1.0 - rho) <= TAIL_TOL * abs(total):
                done = True
                break
        if not done:
            return j
        out[j] = total
    return -1


def _series(a: float, b: float, c: float, w: np.ndarray) -> np.ndarray:
    """Sum the 2F1 power series for ``0 <= w < 1`` until the tail is negligible."""
    out = np.empty_like(w)
    failed = _series_kernel(float(a), float(b), float(c), np.ascontiguousarray(w), out)
    if failed >= 0:
        wf = float(w[failed])
        raise NoConvergence(
            f"2F1 series did not converge in {MAX_TERMS} terms (w = {wf:.12g}"
            + (", too close to 1)" if wf > SLOW_W else ")")
        )
    return out


def eval_2f1(p: HypParams, z):
    """Evaluate ``2F1(a, b; c; z)`` for real ``z <= 0`` (scalar or array).

    Raises
    ------
    PoleAtC
        ``c`` is a non-positive integer reached before the series terminates.
    NoConvergence
        The transformed series did not converge within ``MAX_TERMS`` terms.

    Examples
    --------
    >>> abs(eval_2f1(HypParams(0.5, 1.0, 1.5), -1.0) - 0.7853981633974483) < 1e-15
    True
    """
    zz = np.asarray(z, dtype=float)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    if np.any(~np.isfinite(zz)) or np.any(zz > 0.0):
        raise DomainError("2F1 is only supported for finite real z <= 0")

    degree = is_terminating(p)
    _check_pole(p, degree)
    if degree is not None:
        out = _polynomial(p, degree, zz)
    else:
        w = zz / (zz - 1.0)
        log1mz = np.log1p(-zz)
        # both variants are exact; the b-variant is taken when it terminates
        # or when its terms decay faster (coefficients grow like k^(b-a-1))
        if _nonpositive_integer(p.c - p.a) is not None or (
            _nonpositive_integer(p.c - p.b) is None and p.b < p.a
        ):
            out = np.exp(-p.b * log1mz) * _series(p.c - p.a, p.b, p.c, w)
        else:
            out = np.exp(-p.a * log1mz) * _series(p.a, p.c - p.b, p.c, w)
    return float(out[0]) if scalar else out


def hyp2f1(a: float, b: float, c: float, z):
    """Convenience wrapper around :func:`eval_2f1`."""
    return eval_2f1(HypParams(float(a), float(b), float(c)), z)



def polynomial_coefficients(p: HypParams) -> np.ndarray:
    """Coefficients ``c_k`` of a terminating series ``sum_k c_k z^k``.

    Raises
    ------
    ValueError
        If neither ``a`` nor ``b`` is a non-positive integer.
    """
    degree = is_terminating(p)
    if degree is None:
        raise ValueError(f"2F1 with {p} does not terminate")
    _check_pole(p, degree)
    coefs = np.ones(degree + 1)
    for i in range(degree):
        coefs[i + 1] = coefs[i] * (p.a + i) * (p.b + i) / ((p.c + i) * (i + 1.0))
    return coefs
