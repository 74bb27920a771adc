"""Exception hierarchy shared across the toolkit."""


class CssepError(Exception):
    """Base class for every error raised by this package."""


class InputError(CssepError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class ParseError(InputError):
    """A graph file is malformed.  Carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ResourceLimitError(CssepError, RuntimeError):
    """An enumeration would exceed its configured budget.

    Raised before any partial work is returned; `count` holds the size of
    the enumeration that was refused.
    """

    def __init__(self, message: str, count: int | None = None):
        self.count = count
        super().__init__(message)


class InternalInvariantError(CssepError, RuntimeError):
    """A structural guarantee failed.  Indicates a bug, not bad input."""
