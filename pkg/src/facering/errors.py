"""Exception types shared across the package."""


class FaceRingError(Exception):
    """Base class for all package-specific errors."""


class ParseError(FaceRingError, ValueError):
    """Raised for malformed facet-list input."""


class PreconditionError(FaceRingError, ValueError):
    """Raised when an operation's mathematical hypothesis is violated.

    Formulas never silently evaluate outside their hypothesis class; callers
    that want an out-of-hypothesis value must catch this explicitly.
    """


class LsopSamplingError(FaceRingError, RuntimeError):
    """Raised when no valid linear system of parameters was found within the
    retry budget.  Carries the seed so the failure can be reproduced."""

    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class LinAlgError(FaceRingError, ValueError):
    """Raised for inconsistent linear systems."""
