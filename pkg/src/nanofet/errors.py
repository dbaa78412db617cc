"""Exception hierarchy.

Every domain error derives from :class:`NanofetError`; the CLI prints the
class name as a stable machine-readable prefix and exits with status 1.
"""


class NanofetError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidInput(NanofetError, ValueError):
    """A value violates a documented precondition or type invariant."""


class StericClash(NanofetError):
    """Two atoms that passivation needs to add would overlap."""


class ComponentOverlap(NanofetError):
    """Atoms of two device components clash outside a junction zone."""


class DegenerateFit(NanofetError):
    """Least-squares fit is underdetermined (e.g. all abscissae equal)."""


class NegativeGap(NanofetError):
    """A vdW-adjusted insulator gap came out non-positive."""


class NoVirtuals(NanofetError):
    """An orbital spectrum has no unoccupied level."""


class ParseError(NanofetError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(ParseError):
    """CSV header differs from the expected column names."""


class MissingData(NanofetError):
    """A bundled reference-data file could not be found."""
