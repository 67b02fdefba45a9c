"""Exception types shared across the package."""


class PclError(Exception):
    """Base class for all errors raised by this package."""


class GroupSpecError(PclError):
    """Malformed group spec: syntax error or violated family constraint."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SizeLimitError(PclError):
    """A construction or enumeration would exceed the configured order cap."""


class PreconditionError(PclError):
    """An operation was called with inputs outside its contract."""


class WrongClassifierError(PclError):
    """A theorem classifier was applied to a group outside its hypothesis."""
