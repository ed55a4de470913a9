"""Ordering-ambiguity algebra for the von Roos kinetic operator.

The kinetic term ``m^a d m^b d m^g`` (symmetrized) is characterised by three
exponents constrained to sum to -1.  For the singular mass profile of the
infinite well every downstream quantity depends on the exponents only through
two couplings ``g1`` and ``g2``; those fix the Poschl-Teller strength
``lambda`` and a constant energy shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import ConstraintViolation, InvalidScale, LambdaUndefined

CONSTRAINT_TOL = 1e-12
HETEROJUNCTION_TOL = 1e-12
# lambda within this distance of an integer is treated as that integer when
# counting levels, so no level with vanishing binding energy is produced
LEVEL_COUNT_TOL = 1e-12


@dataclass(frozen=True)
class OrderingParams:
    """Ambiguity exponents ``(alpha, beta, gamma)`` of the kinetic operator."""

    alpha: float
    beta: float
    gamma: float

    @property
    def heterojunction(self) -> bool:
        """True when ``alpha == gamma`` (continuity at material interfaces)."""
        return abs(self.alpha - self.gamma) <= HETEROJUNCTION_TOL


@dataclass(frozen=True)
class Couplings:
    """Couplings derived from an ordering.

    Attributes
    ----------
    g1, g2 : float
        Coefficients of ``m''/m^2`` and ``-m'^2/m^3`` in the mapped potential.
    lambda_ : float or None
        Larger root of ``lambda (lambda - 1) = 4 (5 g1 - 4 g2)``; ``None`` when
        that root is complex.
    shift_coefficient : float
        ``8 (3 g1 - 2 g2)``; multiply by ``mu**2`` to get an energy.
    """

    g1: float
    g2: float
    lambda_: Optional[float]
    shift_coefficient: float

    @property
    def discriminant(self) -> float:
        return 1.0 + 80.0 * self.g1 - 64.0 * self.g2

    @property
    def well_depth(self) -> float:
        """``lambda (lambda - 1)`` computed straight from the couplings."""
        return 4.0 * (5.0 * self.g1 - 4.0 * self.g2)

    def require_lambda(self) -> float:
        if self.lambda_ is None:
            raise LambdaUndefined(
                f"lambda is complex: 1 + 80 g1 - 64 g2 = {self.discriminant:.6g} < 0"
            )
        return self.lambda_


@dataclass(frozen=True)
class AdmissibilityVerdict:
    lambda_: Optional[float]
    admissible: bool
    bound_state_count: int


class Level(NamedTuple):
    n: int
    reference_energy: float
    target_energy: float


def make_ordering(alpha: float, beta: float, gamma: float) -> OrderingParams:
    """Validate the exponent triple against the von Roos constraint."""
    total = alpha + beta + gamma
    if abs(total + 1.0) > CONSTRAINT_TOL:
        raise ConstraintViolation(
            f"alpha + beta + gamma = {total!r}, expected -1"
        )
    return OrderingParams(float(alpha), float(beta), float(gamma))


def ordering_from(alpha: float, beta: float) -> OrderingParams:
    """Build an ordering with ``gamma`` derived from the constraint."""
    return OrderingParams(float(alpha), float(beta), -1.0 - alpha - beta)


def couplings(alpha: float, beta: float) -> Couplings:
    """Couplings ``(g1, g2)``, ``lambda`` and shift for exponents ``alpha, beta``.

    Examples
    --------
    >>> c = couplings(-1.0, 1.0)
    >>> c.lambda_, c.shift_coefficient
    (3.0, 9.0)
    """
    g1 = 0.25 * (1.0 + 2.0 * beta)
    g2 = alpha * (alpha + beta + 1.0) + beta + 9.0 / 16.0
    disc = 1.0 + 80.0 * g1 - 64.0 * g2
    lam = 0.5 * (1.0 + math.sqrt(disc)) if disc >= 0.0 else None
    return Couplings(g1, g2, lam, 8.0 * (3.0 * g1 - 2.0 * g2))


def lambda_heterojunction(alpha: float) -> float:
    """``lambda`` on the line ``alpha == gamma`` (so ``beta = -1 - 2 alpha``)."""
    return 0.5 * (1.0 + abs(3.0 + 8.0 * alpha))


def bound_state_count(lambda_: Optional[float]) -> int:
    """Number of integers ``n`` with ``0 <= n < lambda - 1``."""
    if lambda_ is None or lambda_ <= 1.0:
        return 0
    return max(0, math.ceil(lambda_ - 1.0 - LEVEL_COUNT_TOL))


def classify(alpha: float, beta: float) -> AdmissibilityVerdict:
    """Admissible iff ``lambda`` is real and strictly greater than 2."""
    return verdict_for(couplings(alpha, beta))


def verdict_for(c: Couplings) -> AdmissibilityVerdict:
    lam = c.lambda_
    return AdmissibilityVerdict(
        lam, lam is not None and lam > 2.0, bound_state_count(lam)
    )


def reference_energy(c: Couplings, mu: float, n: int) -> float:
    """Bound-state energy of the mapped constant-mass problem."""
    lam = c.require_lambda()
    return -(mu ** 2) * (lam - 1.0 - n) ** 2


def target_energy(c: Couplings, mu: float, n: int) -> float:
    """Energy of level ``n`` in the original problem.

    No range check is made on ``n``; callers that need an existing level use
    :func:`energy_levels`.
    """
    lam = c.require_lambda()
    return mu ** 2 * (c.shift_coefficient - (lam - 1.0 - n) ** 2)


def energy_levels(c: Couplings, mu: float) -> list[Level]:
    """All bound levels, ordered by increasing energy."""
    if not mu > 0.0:
        raise InvalidScale(f"mu must be positive, got {mu!r}")
    c.require_lambda()
    return [
        Level(n, reference_energy(c, mu, n), target_energy(c, mu, n))
        for n in range(bound_state_count(c.lambda_))
    ]
