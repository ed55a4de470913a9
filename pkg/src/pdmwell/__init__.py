"""Exactly solvable singular position-dependent-mass particle in an infinite well.

Ordering-ambiguity algebra, the point-canonical map onto a Poschl-Teller
well, closed-form bound states, and independent numerical solvers that
cross-check them.
"""

from .errors import (
    ConstraintViolation,
    DomainError,
    GridMismatch,
    GridTooCoarse,
    InvalidScale,
    LambdaUndefined,
    NoConvergence,
    NoSuchLevel,
    NumericalInstability,
    OutsideDomain,
    PDMError,
    PoleAtC,
)
from .geometry import WellSpec
from .ordering import (
    AdmissibilityVerdict,
    Couplings,
    OrderingParams,
    classify,
    couplings,
    energy_levels,
    lambda_heterojunction,
    make_ordering,
    ordering_from,
)
from .spectrum import BoundState, make_bound_state, phi_n, psi_n

__version__ = "0.1.0"
