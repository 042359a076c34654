"""Exception hierarchy.

Validation problems subclass :class:`ValueError`; numerical breakdowns
subclass :class:`ArithmeticError`.  The CLI maps the first family to exit
status 2 and the second to exit status 1.
"""


class BoolCLTError(Exception):
    """Base class for every error raised by this package."""


class InvalidMeasureError(BoolCLTError, ValueError):
    """Atom data violates the measure invariants."""


class HypothesisError(BoolCLTError, ValueError):
    """Input measure does not satisfy m1 = 0 and m2 = 1."""


class InvalidPointError(BoolCLTError, ValueError):
    """Evaluation point is not in the open upper half-plane."""


class InvalidTransformError(BoolCLTError, ValueError):
    """Rational function is not the transform of a non-negative atomic measure."""


class RepresentationError(InvalidTransformError):
    """Continued-fraction (alpha, omega) extraction failed."""


class PreconditionError(BoolCLTError, ValueError):
    """Operation called outside the parameter range where it is defined."""


class UnsupportedError(BoolCLTError, ValueError):
    """Requested computation needs data the caller did not provide."""


class DegeneracyError(BoolCLTError, ArithmeticError):
    """Numerical degeneracy (zero denominator, unresolvable roots)."""


class DegenerateFitError(BoolCLTError, ArithmeticError):
    """Rate fit impossible: too few rows with positive distance."""


class QuadratureBudgetError(BoolCLTError, ArithmeticError):
    """Adaptive quadrature did not reach its tolerance within the interval budget."""

    def __init__(self, message, partial, error_estimate):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate
