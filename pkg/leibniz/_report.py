import typing

from . import _types


class Report:
    """A validation report.

    Every flag is stored directly on the object, so ``report.leibniz_ok``
    works for the report of :func:`validate_algebra`.

    :param kind: What was validated, e.g. ``algebra``.
    :param flags: Flags in display order.
    :param informational: Names of flags that describe the structure rather
        than judge it (e.g. ``abelian``); they do not affect
        :attr:`Report.succeeded`.
    :param note: Optional free-form remark.
    """

    kind: str
    """What was validated."""

    flags: typing.Dict[str, bool]
    """All flags in display order."""

    informational: typing.FrozenSet[str]
    """Flags that are excluded from the verdict."""

    succeeded: bool
    """Whether all judging flags hold (the opposite of
    :attr:`Report.failed`)."""

    failed: bool
    """Whether some judging flag does not hold."""

    note: typing.Optional[str] = None
    """Free-form remark."""

    def __init__(
        self,
        kind: str,
        flags: typing.Mapping[str, bool],
        informational: typing.Iterable[str] = (),
        note: typing.Optional[str] = None,
    ):
        self.kind = kind
        self.flags = {key: bool(value) for key, value in flags.items()}
        self.__dict__.update(self.flags)
        self.informational = frozenset(informational)
        self.succeeded = all(value for key, value in self.flags.items()
                             if key not in self.informational)
        self.failed = not self.succeeded
        self.note = note

    def failures(self) -> typing.List[str]:
        """Names of the judging flags that do not hold."""
        return [key for key, value in self.flags.items()
                if not value and key not in self.informational]

    def require(self, what: str) -> None:
        """:raises: :class:`InvalidStructure` carrying this report unless
            it succeeded.
        """
        if self.failed:
            raise _types.InvalidStructure(
                f"Invalid {what}: {', '.join(self.failures())} failed",
                report=self)

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        result: typing.Dict[str, typing.Any] = {
            'kind': self.kind,
            'flags': dict(self.flags),
            'valid': self.succeeded,
        }
        if self.note:
            result['note'] = self.note
        return result

    def __bool__(self):
        return self.succeeded

    def __eq__(self, other):
        if not isinstance(other, Report):
            return NotImplemented
        return (self.kind, self.flags) == (other.kind, other.flags)

    def __repr__(self):
        flags = ', '.join(f"{key}={value}"
                          for key, value in self.flags.items())
        return f"Report({self.kind}: {flags})"
