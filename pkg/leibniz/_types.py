import typing

if typing.TYPE_CHECKING:  # pragma: no cover
    from . import _report


class Error(Exception):
    """Base class for all errors."""


class FieldMismatch(Error):
    """Structures over different fields were combined."""


class DimensionMismatch(Error):
    """Shapes of the arguments do not agree."""


class InvalidStructure(Error):
    """A structure does not satisfy its axioms.

    :param message: Human-readable description.
    :param report: The failing :class:`Report`, if one was computed.
    """

    def __init__(
        self,
        message: str,
        report: typing.Optional['_report.Report'] = None,
    ):
        super().__init__(message)
        self.report = report


class NotACovering(InvalidStructure):
    """A groupoid or crossed module morphism is not a covering."""


class NotComposable(Error):
    """Arrows cannot be composed or lifted at the given point."""


class InconsistentStructure(Error):
    """An internal consistency check failed.

    Never raised for inputs that passed validation.
    """


class BudgetExceeded(Error):
    """An enumeration would exceed its configured budget."""


class InvalidDocument(Error):
    """A document violates the schema."""


class InvalidCommand(Error):
    """The command line is invalid."""


class UnknownCommand(InvalidCommand):
    """A command is not known."""
