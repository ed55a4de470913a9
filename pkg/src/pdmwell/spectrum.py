"""Closed-form bound states of the mapped Poschl-Teller problem.

In the canonical coordinate the problem is ``-phi'' - lam(lam-1) mu^2
sech^2(mu q) phi = E phi`` with levels ``E_n = -mu^2 (lam - 1 - n)^2``.  The
hypergeometric solutions are evaluated after an Euler transformation, which
turns them into terminating polynomials of degree ``floor(n/2)``:

* even ``n``: ``cosh^(1-lam) 2F1(-n/2, (n+2-2 lam)/2; 1/2; -sinh^2)``
* odd ``n``:  ``cosh^(1-lam) sinh 2F1((1-n)/2, (n+3-2 lam)/2; 3/2; -sinh^2)``

Position-space states follow from ``psi = m^(1/4) phi(q(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import integrate, special

from . import geometry
from .errors import NoSuchLevel
from .geometry import WellSpec
from .hyp2f1 import HypParams, eval_2f1, is_terminating, polynomial_coefficients
from .ordering import Couplings, bound_state_count

QUAD_EPSREL = 1e-13
TAIL_TOL = 1e-14
# relative decrease counted as genuine decay in boundary_check
DECAY_RTOL = 1e-8
BOUNDARY_EPS = (1e-2, 1e-4, 1e-6, 1e-8)


@dataclass(frozen=True)
class BoundState:
    """Normalized bound state ``n`` of a well of strength ``lambda_``."""

    n: int
    lambda_: float
    mu: float
    parity: str
    ref_energy: float
    target_energy: float
    hyp_a: float
    hyp_b: float
    norm: float

    @property
    def decay(self) -> float:
        """``lam - 1 - n``: the state falls off like ``sech^decay(mu q)``."""
        return self.lambda_ - 1.0 - self.n

    @property
    def euler_params(self) -> HypParams:
        """Parameters of the terminating polynomial after the Euler transformation."""
        lam, n = self.lambda_, self.n
        if self.parity == "even":
            return HypParams(-n / 2.0, (n + 2.0 - 2.0 * lam) / 2.0, 0.5)
        return HypParams((1.0 - n) / 2.0, (n + 3.0 - 2.0 * lam) / 2.0, 1.5)


@dataclass(frozen=True)
class WavefunctionTable:
    abscissae: np.ndarray
    values: np.ndarray
    space: str


def _log_cosh(t):
    t = np.abs(t)
    return t + np.log1p(np.exp(-2.0 * t)) - np.log(2.0)


def _raw_phi(lam: float, n: int, mu: float, params: HypParams, q):
    """Unnormalized Euler-form state, scaled so nothing overflows."""
    coefs = polynomial_coefficients(params)
    degree = len(coefs) - 1
    t = mu * np.asarray(q, dtype=float)
    tanh2 = np.tanh(t) ** 2
    sech2 = np.exp(-2.0 * _log_cosh(t))
    # P(-sinh^2) / cosh^(2d) = sum_k c_k (-tanh^2)^k sech^(2(d-k))
    poly = sum(c * (-tanh2) ** k * sech2 ** (degree - k) for k, c in enumerate(coefs))
    value = np.exp(-(lam - 1.0 - n) * _log_cosh(t)) * poly
    if n % 2:
        value = value * np.tanh(t)
    return value


def _quadrature_span(lam: float, n: int, mu: float, params: HypParams) -> float:
    decay = mu * (lam - 1.0 - n)
    peak = max(float(np.max(_raw_phi(lam, n, mu, params, np.linspace(0, 8 / mu, 801)) ** 2)),
               1e-300)
    span = 8.0 / mu
    while _raw_phi(lam, n, mu, params, span) ** 2 / (2.0 * decay) > TAIL_TOL * peak / mu:
        span *= 2.0
    return span


def make_bound_state(c: Couplings, w: WellSpec, n: int) -> BoundState:
    """Construct and normalize level ``n``.

    Raises
    ------
    NoSuchLevel
        When ``lambda`` is undefined or ``n`` is outside ``0 <= n < lam - 1``.
    """
    lam = c.lambda_
    if lam is None or not 0 <= n < bound_state_count(lam):
        raise NoSuchLevel(f"no bound state n={n} for lambda={lam}")
    n = int(n)
    mu = w.mu
    parity = "even" if n % 2 == 0 else "odd"
    hyp_a = 0.5 * (1.0 + n)
    hyp_b = lam - 0.5 * (1.0 + n)
    provisional = BoundState(n, lam, mu, parity, 0.0, 0.0, hyp_a, hyp_b, 1.0)
    params = provisional.euler_params
    assert is_terminating(params) is not None
    span = _quadrature_span(lam, n, mu, params)
    half, _ = integrate.quad(
        lambda q: _raw_phi(lam, n, mu, params, q) ** 2, 0.0, span,
        epsabs=0.0, epsrel=QUAD_EPSREL, limit=400,
    )
    return BoundState(
        n=n, lambda_=lam, mu=mu, parity=parity,
        ref_energy=-(mu ** 2) * (lam - 1.0 - n) ** 2,
        target_energy=mu ** 2 * (c.shift_coefficient - (lam - 1.0 - n) ** 2),
        hyp_a=hyp_a, hyp_b=hyp_b, norm=1.0 / np.sqrt(2.0 * half),
    )


def bound_states(c: Couplings, w: WellSpec) -> list[BoundState]:
    return [make_bound_state(c, w, n) for n in range(bound_state_count(c.lambda_))]


def phi_n(s: BoundState, q):
    """Normalized reference-space state at canonical coordinate ``q``."""
    value = s.norm * _raw_phi(s.lambda_, s.n, s.mu, s.euler_params, q)
    return float(value) if np.ndim(value) == 0 else value


def psi_n(s: BoundState, w: WellSpec, x):
    """Normalized position-space state, ``m^(1/4) phi_n(q(x))``."""
    return geometry.pull_back(w, lambda q: phi_n(s, q), x)


def psi_n_direct(s: BoundState, w: WellSpec, x):
    """Position-space state from the untransformed hypergeometric form.

    Uses ``2F1(a, b; c; z)`` with ``z = s^2/(s^2 - 1)``, ``s = x/L``, and
    carries the odd branch with the sign of ``x`` restored.
    """
    x = np.asarray(x, dtype=float)
    geometry._check_inside(w, x)
    u = x / w.L
    one_minus = (1.0 - u) * (1.0 + u)
    z = -(u * u) / one_minus
    prefactor = one_minus ** (-(s.lambda_ + 1.0) / 2.0)
    if s.parity == "even":
        value = eval_2f1(HypParams(s.hyp_a, s.hyp_b, 0.5), z)
    else:
        value = (u / np.sqrt(one_minus)) * eval_2f1(
            HypParams(s.hyp_a + 0.5, s.hyp_b + 0.5, 1.5), z)
    value = s.norm * prefactor * value
    return float(value) if np.ndim(value) == 0 else value


def ground_state_norm(lambda_: float, w: WellSpec) -> float:
    """``A0`` with ``int_{-L}^{L} A0^2 (1 - (x/L)^2)^(lam - 2) dx = 1``."""
    return 1.0 / np.sqrt(w.L * special.beta(0.5, lambda_ - 1.0))


def ground_state_closed(c: Couplings, w: WellSpec, x):
    """Collapsed ground state ``A0 (1 - (x/L)^2)^((lam - 2)/2)``."""
    lam = c.lambda_
    if lam is None or lam <= 1.0:
        raise NoSuchLevel(f"no normalizable ground state for lambda={lam}")
    x = geometry._check_inside(w, x)
    u = x / w.L
    value = ground_state_norm(lam, w) * ((1.0 - u) * (1.0 + u)) ** ((lam - 2.0) / 2.0)
    return float(value) if np.ndim(value) == 0 else value


def _decays(values: Sequence[float]) -> bool:
    return all(b < a * (1.0 - DECAY_RTOL) for a, b in zip(values, values[1:]))


def boundary_check(s: BoundState, w: WellSpec) -> bool:
    """True iff ``|psi|`` strictly decreases toward both walls.

    Sampled at ``x = +-L (1 - eps)`` for ``eps`` in 1e-2 .. 1e-8.
    """
    eps = np.asarray(BOUNDARY_EPS)
    right = np.abs(psi_n(s, w, w.L * (1.0 - eps)))
    left = np.abs(psi_n(s, w, -w.L * (1.0 - eps)))
    return _decays(list(right)) and _decays(list(left))


def count_sign_changes(values, rtol: float = 1e-9) -> int:
    """Sign changes of a sampled function, ignoring near-zero samples."""
    values = np.asarray(values, dtype=float)
    keep = values[np.abs(values) > rtol * np.max(np.abs(values))]
    return int(np.count_nonzero(np.signbit(keep[1:]) != np.signbit(keep[:-1])))


def tabulate(s: BoundState, w: WellSpec, points: int, space: str = "x",
             q_max: float | None = None) -> WavefunctionTable:
    """Sample a state on a uniform grid.

    In ``x`` the grid stays strictly inside the well; in ``q`` it covers
    ``[-q_max, q_max]`` (default ``10 L``).
    """
    if space == "x":
        grid = np.linspace(-w.L, w.L, points + 2)[1:-1]
        return WavefunctionTable(grid, np.asarray(psi_n(s, w, grid)), "x")
    if space == "q":
        q_max = 10.0 * w.L if q_max is None else q_max
        grid = np.linspace(-q_max, q_max, points)
        return WavefunctionTable(grid, np.asarray(phi_n(s, grid)), "q")
    raise ValueError(f"unknown space {space!r}")
