from __future__ import annotations


class SlipflowError(Exception):
    """Base class for library errors."""


class DomainError(SlipflowError, ValueError):
    """Argument outside the supported domain of a function."""


class NoSignChangeError(SlipflowError, ValueError):
    """Bracket endpoints do not straddle a root."""


class ConvergenceError(SlipflowError, RuntimeError):
    """Iteration budget exhausted."""


class BracketingError(SlipflowError, RuntimeError):
    """A root bracket could not be located."""


class InsufficientModesError(SlipflowError, RuntimeError):
    """Mode truncation leaves too large a residual at t = 0."""


class UnavailableError(SlipflowError, ValueError):
    """A functional is undefined for the given shape."""


class UnknownIdError(SlipflowError, KeyError):
    """Unknown figure, table or suite identifier."""
