"""Exception hierarchy shared by the analysis modules."""


class PolyToeplitzError(Exception):
    """Base class for all errors raised by the package."""


class IllConditioned(PolyToeplitzError):
    """Root finding could not certify its output against the residual test."""


class ZeroDenominatorIdentically(PolyToeplitzError, ZeroDivisionError):
    pass


class NonFiniteScalar(PolyToeplitzError, ArithmeticError):
    """A float-backend operation produced NaN or infinity."""


class OrderTooSmall(PolyToeplitzError, ValueError):
    pass


class WindingDisagreement(PolyToeplitzError):
    """Boundary sampling and zero counting gave different winding numbers."""


class NotRegular(PolyToeplitzError):
    """Frobenius analysis requested at an irregular singular point."""


class ResonanceObstruction(PolyToeplitzError):
    """The Frobenius recurrence hit a zero divisor with a nonzero right side."""


class InternalInconsistency(PolyToeplitzError):
    """Two independent derivations of the same fact disagree."""


class WZeroExcluded(PolyToeplitzError, ValueError):
    pass


class ConvergenceAmbiguous(PolyToeplitzError):
    """Finite-section singular values do not separate into decaying/stable groups."""


class ParseError(PolyToeplitzError, ValueError):
    pass


class ValidationError(PolyToeplitzError, ValueError):
    pass
