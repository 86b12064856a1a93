"""Shared exception types."""


class ToricError(Exception):
    """Base class for all library errors."""


class DimensionError(ToricError, ValueError):
    """Vector or matrix dimensions do not match."""


class DomainError(ToricError, ValueError):
    """Input violates a documented precondition."""


class SchemaError(ToricError, ValueError):
    """Serialized data does not match the documented JSON schema."""


class InconclusiveSearchError(ToricError, RuntimeError):
    """A bounded search was truncated before reaching a verdict.

    This is deliberately distinct from a definite negative answer: callers
    that receive ``None`` from a bounded search may rely on nonexistence,
    while this exception only means the configured bound was too small.
    """
