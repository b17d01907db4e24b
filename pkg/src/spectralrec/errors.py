"""Exception hierarchy shared by all subpackages."""


class SpectralRecError(Exception):
    """Base class for every error raised by spectralrec."""


class ParameterDegeneracy(SpectralRecError, ZeroDivisionError):
    """A denominator vanished after specializing a parameter or a point."""


class NonSplitDenominator(SpectralRecError):
    """A denominator does not factor into linear factors over the scalar field."""


class LogObstruction(SpectralRecError):
    """An antiderivative carries a nonzero logarithmic term."""

    def __init__(self, message, logs=()):
        super().__init__(message)
        self.logs = list(logs)


class DivergentEndpoint(SpectralRecError):
    """A rational antiderivative has an infinite limit at an endpoint."""


class CurveRejected(SpectralRecError):
    """A spectral curve violates one of the standing assumptions.

    ``assumption`` names the violated hypothesis, e.g. ``"(AQ2)"``;
    ``witness`` carries the offending points when there are any.
    """

    def __init__(self, assumption, message, witness=()):
        super().__init__(f"{assumption} violated: {message}")
        self.assumption = assumption
        self.witness = list(witness)


class CurveSyntaxError(SpectralRecError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotSigmaInvariant(SpectralRecError):
    """Descent to the x-line was requested for a function that is not conjugation invariant."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DescentFailure(SpectralRecError):
    pass


class IneffectivePoint(SpectralRecError):
    """A recursion kernel was requested at an ineffective ramification point."""


class CapExceeded(SpectralRecError):
    pass


class InternalInconsistency(SpectralRecError):
    """An identity guaranteed by theory failed; signals a bug, never bad input."""


class NotAvailable(SpectralRecError):
    pass
