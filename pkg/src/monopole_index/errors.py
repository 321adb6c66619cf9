"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MonopoleIndexError(Exception):
    """Base class for package errors."""


class ConfigError(MonopoleIndexError):
    """Malformed, incomplete or invalid configuration.

    ``problems`` holds one message per violated field or invariant.
    """

    def __init__(self, message: str, problems: list[str] | None = None):
        super().__init__(message)
        self.problems = list(problems or [message])


class ConstraintError(MonopoleIndexError):
    """Input violates a mathematical precondition (e.g. nonzero total weight)."""


class RadeConditionError(ConstraintError):
    """A mass entry vanishes, so the spectral-gap condition fails."""


class DomainError(MonopoleIndexError):
    """Evaluation requested at a point outside the domain of a field."""


class InputError(MonopoleIndexError):
    """Sampled data is unusable (non-finite values, mismatched grids)."""


class ChartError(MonopoleIndexError):
    """A finite-difference stencil crosses a chart seam."""


class ResolutionError(MonopoleIndexError):
    """Mesh too coarse for an integer-reliable answer."""


class NumericalIndeterminacyError(MonopoleIndexError):
    """A numerical classification could not be decided within tolerance.

    ``diagnostics`` carries the quantities that were inconclusive.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class InternalConsistencyError(MonopoleIndexError):
    """Two independent evaluations of the same quantity disagree."""
