"""Singular mass profile, point-canonical transformation and potentials.

The particle lives in ``|x| < L`` with mass ``m(x) = 1 / (1 - (x/L)^2)^2``
(reference mass set to 1).  The map ``q = L artanh(x/L)`` satisfies
``dq/dx = sqrt(m)`` and sends the well onto the whole real line.

All functions accept scalars or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidScale, OutsideDomain
from .ordering import Couplings, OrderingParams

# positions closer than this fraction of L to a wall are rejected
WALL_GUARD = 1e-14


def _out(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class WellSpec:
    """Infinite well of half-width ``L``; ``mu = 1/L``."""

    half_width: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.half_width) and self.half_width > 0.0):
            raise InvalidScale(f"half-width must be positive, got {self.half_width!r}")

    @property
    def L(self) -> float:
        return self.half_width

    @property
    def mu(self) -> float:
        return 1.0 / self.half_width


@dataclass(frozen=True)
class MassPoint:
    """Mass and its first two derivatives at ``x``."""

    x: float
    m: float
    m1: float
    m2: float


def _check_inside(w: WellSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(np.abs(x) >= w.L * (1.0 - WALL_GUARD)):
        raise OutsideDomain(f"position outside the open well (-{w.L}, {w.L})")
    return x


def _mass_terms(s, u, L):
    # u = 1 - s^2, supplied separately so callers can pass an accurate value
    m = u ** -2
    m1 = 4.0 * s / L * u ** -3
    m2 = 4.0 / L ** 2 * u ** -3 + 24.0 * s ** 2 / L ** 2 * u ** -4
    return m, m1, m2


def mass_at(w: WellSpec, x) -> MassPoint:
    """Closed-form ``m``, ``m'`` and ``m''`` at ``x``.

    Raises
    ------
    OutsideDomain
        If ``|x| >= L`` (up to the wall guard).
    """
    x = _check_inside(w, x)
    s = x / w.L
    m, m1, m2 = _mass_terms(s, (1.0 - s) * (1.0 + s), w.L)
    return MassPoint(_out(x), _out(m), _out(m1), _out(m2))


def q_of_x(w: WellSpec, x):
    """Point-canonical coordinate ``q = L artanh(x/L)``."""
    x = _check_inside(w, x)
    return _out(w.L * np.arctanh(x / w.L))


def x_of_q(w: WellSpec, q):
    """Inverse map ``x = L tanh(q/L)``.

    For ``|q| > ~19 L`` the result rounds to ``+-L`` in double precision.
    """
    return _out(w.L * np.tanh(np.asarray(q, dtype=float) / w.L))


def v_tilde(w: WellSpec, o: OrderingParams, x):
    """Ordering-dependent potential of the position-dependent-mass equation.

    ``V~ = (1 + b)/2 m''/m^2 - [a(a + b + 1) + b + 1] m'^2/m^3`` inside the
    well.  Both mass ratios stay bounded up to the walls, so ``V~`` does too.
    """
    p = mass_at(w, x)
    a, b = o.alpha, o.beta
    c2 = a * (a + b + 1.0) + b + 1.0
    return _out(0.5 * (1.0 + b) * np.asarray(p.m2) / np.asarray(p.m) ** 2
                - c2 * np.asarray(p.m1) ** 2 / np.asarray(p.m) ** 3)


def v_eff_from_mass(w: WellSpec, c: Couplings, q):
    """Mapped potential ``g1 m''/m^2 - g2 m'^2/m^3`` evaluated at ``x(q)``.

    The mass terms are evaluated from their raw closed forms, so values of
    ``|q|`` beyond roughly ``80 L`` overflow.
    """
    t = np.asarray(q, dtype=float) / w.L
    s = np.tanh(t)
    u = 1.0 / np.cosh(t) ** 2
    m, m1, m2 = _mass_terms(s, u, w.L)
    return _out(c.g1 * m2 / m ** 2 - c.g2 * m1 ** 2 / m ** 3)


def v_eff_closed(w: WellSpec, c: Couplings, q):
    """Shifted Poschl-Teller form ``-lam(lam-1) mu^2 sech^2(mu q) + mu^2 shift``."""
    lam = c.require_lambda()
    mu = w.mu
    sech2 = 1.0 / np.cosh(mu * np.asarray(q, dtype=float)) ** 2
    return _out(-lam * (lam - 1.0) * mu ** 2 * sech2 + mu ** 2 * c.shift_coefficient)


def pull_back(w: WellSpec, phi: Callable, x):
    """``psi(x) = m(x)^(1/4) phi(q(x))``."""
    x = _check_inside(w, x)
    s = x / w.L
    m_quarter = 1.0 / np.sqrt((1.0 - s) * (1.0 + s))
    return _out(m_quarter * np.asarray(phi(q_of_x(w, x)), dtype=float))
