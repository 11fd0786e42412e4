import abc
import argparse
import typing

from . import _types

if typing.TYPE_CHECKING:  # pragma: no cover
    from . import _engine


ParamSpec = typing.Union[None, typing.Type, typing.Tuple[str, ...]]


class Result:
    """An outcome of a command.

    :param data: JSON-compatible data printed with ``--json`` or when there
        is no template.
    :param template: Name of the template for human-readable output.
    :param context: Values passed to the template.
    :param lines: Pre-rendered lines printed as they are (streaming output).
    :param failed: Whether the structure in question failed validation.
    """

    succeeded: bool
    """Whether the command succeeded (the opposite of :attr:`Result.failed`).
    """

    failed: bool
    """Whether the command reports a failed validation."""

    def __init__(
        self,
        data: typing.Any = None,
        template: typing.Optional[str] = None,
        context: typing.Optional[typing.Mapping[str, typing.Any]] = None,
        lines: typing.Optional[typing.Iterable[str]] = None,
        failed: bool = False,
    ):
        self.data = data
        self.template = template
        self.context = dict(context or {})
        self.lines = lines
        self.failed = failed
        self.succeeded = not failed


class Command(metaclass=abc.ABCMeta):
    """An abstract base class for a command.

    An implementation must override :meth:`Command.execute` and may also
    override :meth:`Command.validate`.

    :param name: Name of this command on the command line.
    :param engine: An :class:`Engine` the command is executed on.
    """

    required_params: typing.Dict[str, ParamSpec] = {}
    """A mapping with required (positional) parameters.

    A value is either `None`, one of the supported types `str` and `int`,
    or a tuple of accepted strings.
    """

    optional_params: typing.Dict[str, ParamSpec] = {}
    """A mapping with optional parameters, given as ``--name value``.

    Underscores in names become dashes on the command line.
    """

    _VALID_TYPES = (str, int)

    engine: '_engine.Engine'
    """The :class:`Engine` this command uses."""

    name: str
    """The name of this command."""

    def __init__(self, name: str, engine: '_engine.Engine') -> None:
        for accepted in (self.required_params, self.optional_params):
            if any(item is not None and not isinstance(item, tuple)
                   and item not in self._VALID_TYPES
                   for item in accepted.values()):
                raise TypeError(
                    "Acceptable types for required/optional params are "
                    "tuples of choices and %s"
                    % ', '.join(x.__name__ for x in self._VALID_TYPES))
        self.name = name
        self.engine = engine

    @classmethod
    def summary(cls) -> str:
        """The first line of the docstring."""
        return (cls.__doc__ or '').strip().split('\n')[0]

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Generate arguments from the parameter specifications."""
        for name, accepted in cls.required_params.items():
            if isinstance(accepted, tuple):
                parser.add_argument(name, choices=accepted)
            else:
                parser.add_argument(name)
        for name, accepted in cls.optional_params.items():
            option = '--' + name.replace('_', '-')
            if isinstance(accepted, tuple):
                parser.add_argument(option, dest=name, choices=accepted)
            else:
                parser.add_argument(option, dest=name)

    def validate(self, params: typing.Dict[str, typing.Any]) -> None:
        """Validate the passed parameters.

        The call may modify the parameters in-place to apply type
        conversion. Parameters that are `None` are treated as missing.
        """
        known = dict(self.required_params, **self.optional_params)

        unknown = set(params).difference(known)
        if unknown:
            raise _types.InvalidCommand(
                "parameter(s) not recognized: %s"
                % ', '.join("'%s'" % item for item in sorted(unknown)))

        missing = {name for name in self.required_params
                   if params.get(name) is None}
        if missing:
            raise _types.InvalidCommand(
                "parameter(s) required: %s"
                % ', '.join("'%s'" % item for item in sorted(missing)))

        for name, accepted in known.items():
            value = params.get(name)
            if value is None:
                params[name] = None
            elif isinstance(accepted, tuple):
                if value not in accepted:
                    raise _types.InvalidCommand(
                        f"invalid value for parameter '{name}': {value}, "
                        f"expected one of {', '.join(accepted)}")
            elif accepted is not None:
                try:
                    params[name] = accepted(value)
                except (TypeError, ValueError) as exc:
                    raise _types.InvalidCommand(
                        f"invalid value for parameter '{name}': {exc}")

    def require(self, params: typing.Mapping[str, typing.Any],
                *names: str) -> None:
        """Require optional parameters in a particular mode."""
        missing = [name for name in names if params.get(name) is None]
        if missing:
            raise _types.InvalidCommand(
                f"{self.name} needs %s"
                % ', '.join('--' + item.replace('_', '-')
                            for item in missing))

    def __call__(self, params: typing.Dict[str, typing.Any]) -> Result:
        """Validate the parameters and execute the command.

        It is not recommended to override this method, see
        :meth:`Command.execute` instead.
        """
        self.validate(params)
        self.engine.logger.debug("Executing command %s with %s",
                                 self.name, params)
        return self.execute(params)

    @abc.abstractmethod
    def execute(self, params: typing.Mapping[str, typing.Any]) -> Result:
        """Execute the command.

        :param params: Validated parameters.
        :returns: A :class:`Result` to print.
        """
