"""
Domain errors. Everything derives from ValueError so callers that only
know about bad input keep working.
"""


class ShapeError(ValueError):
    """A table has the wrong shape, an entry is out of range, or an order exceeds its cap."""


class ArityError(ValueError):
    """A constraint or diagram received the wrong number of arguments."""


class ObjectMismatchError(ValueError):
    """Two morphisms that must meet at an object do not (an ill-typed diagram term)."""


class SkeletonError(ValueError):
    """A constraint's source and target differ in the skeleton."""


class MissingUnitsError(ValueError):
    """A term uses lhat/rhat but the model carries no derived unit tables."""


class UnknownNameError(ValueError):
    """Unknown diagram, suite, constraint kind, ring or module token."""


class SearchBoundError(ValueError):
    """A search space is too large for exhaustive mode or is otherwise malformed."""


class ModelFileError(ValueError):
    """A model file cannot be parsed or its tables are not total."""


class InvalidModelError(ValueError):
    """A model's ring or bimodule violates its laws."""

    def __init__(self, message: str, reports=()):
        super().__init__(message)
        self.reports = tuple(reports)


class ConfigurationError(ValueError):
    """A setting read from the environment has an unusable value."""
