"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed a configured size cap."""


class IntegrityError(RuntimeError):
    """An internal consistency assertion failed (e.g. a span collision)."""
