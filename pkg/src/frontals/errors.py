"""Exception types raised across the package."""


class FrontalError(Exception):
    """Base class for all package errors."""


class ExprSyntaxError(FrontalError):
    """Malformed expression text.

    Carries the 0-based character position of the first offending token and
    a short description of what was expected there.
    """

    def __init__(self, message, position, expected=None):
        self.position = position
        self.expected = expected
        suffix = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {position}{suffix}")


class UnknownIdentifierError(ExprSyntaxError):
    """An identifier was used as a function but is not whitelisted."""


class NonSmoothPrimitiveError(ExprSyntaxError):
    """A non-smooth primitive (e.g. abs) appeared in an expression."""


class JetDomainError(FrontalError):
    """Evaluation left the real domain (log/sqrt of non-positive, 1/0, ...)."""


class FrameError(FrontalError):
    """The declared normal frame is not orthonormal / not normal at a point."""


class RegularityError(FrontalError):
    """A pointwise operation that needs a regular point hit a singular one."""


class ResolutionError(FrontalError):
    """Root isolation failed at the current grid resolution."""


class TracingError(FrontalError):
    """Inconsistent singular-curve tracing (open curve inside a chart core)."""


class AccuracyError(FrontalError):
    """Quadrature could not reach the requested tolerance.

    The best available estimate and its error bound are attached.
    """

    def __init__(self, message, value=None, error=None):
        self.value = value
        self.error = error
        super().__init__(message)


class AdmissibilityError(FrontalError):
    """The scene violates the admissibility preconditions of a pipeline."""


class SceneError(FrontalError):
    """Scene file parse or validation failure."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = f" (line {line}" + (f", col {column})" if column is not None else ")") if line else ""
        super().__init__(f"{message}{loc}")


class ConditioningError(FrontalError):
    """Monte Carlo sampling rejected too many directions."""
