"""Exception hierarchy shared by all pdmwell modules."""


class PDMError(Exception):
    """Base class for every error raised by pdmwell."""


class DomainError(PDMError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConstraintViolation(DomainError):
    """Ordering exponents do not satisfy alpha + beta + gamma = -1."""


class OutsideDomain(DomainError):
    """A position lies on or beyond the well walls."""


class InvalidScale(DomainError):
    """A length or inverse-length scale is not strictly positive."""


class LambdaUndefined(DomainError):
    """The well strength lambda is not real for the given couplings."""


class NoSuchLevel(DomainError):
    """The requested bound state does not exist."""


class PoleAtC(DomainError):
    """The hypergeometric series hits a pole of its lower parameter."""


class NoConvergence(PDMError, ArithmeticError):
    """A series failed to converge within its iteration cap."""


class GridTooCoarse(PDMError, ArithmeticError):
    """Eigenvalues moved more than the tolerance when the grid was refined."""


class GridMismatch(PDMError, ValueError):
    """Two discretizations cannot be combined by extrapolation."""


class NumericalInstability(PDMError, ArithmeticError):
    """A numerical conservation law was violated beyond tolerance."""
