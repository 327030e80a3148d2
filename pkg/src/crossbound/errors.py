"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CrossboundError(Exception):
    """Base class for all package errors."""


class GraphError(CrossboundError, ValueError):
    """Malformed input or an unmet precondition on a graph argument."""


class BudgetExhausted(CrossboundError):
    """An exact search stopped at its budget without a definite answer."""


class TheoremViolation(CrossboundError, AssertionError):
    """A bound that is a theorem failed to hold.

    This always indicates an implementation defect (or a broken
    precondition upstream), never an expected outcome.
    """
