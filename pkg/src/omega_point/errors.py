"""Exception hierarchy shared by every module."""


class OmegaPointError(Exception):
    """Base class for all library errors."""


class MalformedInput(OmegaPointError, ValueError):
    pass


class InvalidBounds(OmegaPointError, ValueError):
    """The window [M, N] does not cover the input sets."""


class ResourceLimit(OmegaPointError):
    """A window is wider than the configured guard.

    ``width`` is the offending N - M (or factorial argument), ``limit`` the guard.
    """

    def __init__(self, message, width=None, limit=None):
        super().__init__(message)
        self.width = width
        self.limit = limit


class BranchNotAdmissible(OmegaPointError, ValueError):
    pass


class InternalInconsistency(OmegaPointError, AssertionError):
    """Two computation routes that must agree did not.

    Never a valid state; it means a transcription bug in one of the formulas.
    """
