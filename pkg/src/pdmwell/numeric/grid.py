"""Uniform grids with Dirichlet end nodes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on the nominal interval ``[lo, hi]``.

    The first and last nodes sit ``margin`` spacings inside the interval and
    carry the Dirichlet condition, so the spacing is
    ``(hi - lo) / (points - 1 + 2 * margin)``.  With ``margin = 0`` the nodes
    span the interval exactly.
    """

    lo: float
    hi: float
    points: int
    margin: int = 0

    def __post_init__(self):
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError(f"points must be odd and >= 3, got {self.points}")
        if not self.hi > self.lo:
            raise ValueError("empty interval")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")

    @property
    def h(self) -> float:
        return (self.hi - self.lo) / (self.points - 1 + 2 * self.margin)

    @property
    def span(self) -> tuple[float, float]:
        """Positions of the two Dirichlet nodes."""
        return (self.lo + self.margin * self.h, self.hi - self.margin * self.h)

    @property
    def nodes(self) -> np.ndarray:
        return self.lo + self.h * (self.margin + np.arange(self.points))

    def doubled(self) -> "GridSpec":
        """Same interval and margin (in spacings) at half the spacing."""
        return GridSpec(self.lo, self.hi, 2 * self.points - 1 + 2 * self.margin, self.margin)

    def trapezoid(self, values: np.ndarray) -> float:
        return float(np.trapezoid(values, dx=self.h))
