"""Exception hierarchy.

Everything raised for bad inputs derives from :class:`ValidationError`
(itself a ``ValueError``) so the CLI can map it to a single exit code.
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EngineError, ValueError):
    """An input lies outside the domain where the model is defined."""


class NonPositive(ValidationError):
    pass


class RatioTooSmall(ValidationError):
    pass


class LevelUnbound(ValidationError):
    pass


class NoBoundLevels(ValidationError):
    pass


class DepthOrderViolation(ValidationError):
    pass


class OutOfStrokeRange(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class GridError(ValidationError):
    pass


class BracketError(EngineError, RuntimeError):
    """No interior maximum could be bracketed."""
