import argparse
import json
import logging
import sys
import typing

from . import _command
from . import _oracle
from . import _serialize
from . import _templates
from . import _types
from . import commands
from . import filters


_BUILTINS: typing.Dict[str, typing.Type[_command.Command]] = {
    name.lower(): getattr(commands, name) for name in commands.__all__
}

_FILTERS: typing.Dict[str, typing.Callable] = {
    name.rstrip('_'): getattr(filters, name) for name in filters.__all__
}


class Engine:
    """Engine that runs command lines.

    :param commands: Additional commands, see :attr:`Engine.commands`.
    :param logger: Logger to use for all logging. If `None`, a default one
        is created.
    :param budget: Maximum number of candidates for enumerations.

    Running a command line:

    .. code-block:: python

        import leibniz

        engine = leibniz.Engine()
        exit_code = engine.execute(['validate', 'pair.json'])

    Custom commands subclass :class:`Command`:

    .. code-block:: python

        class Dimension(leibniz.Command):
            '''Print the dimension of an algebra.'''

            required_params = {'file': str}

            def execute(self, params):
                algebra = self.engine.load(params['file']).body
                return leibniz.Result(data={'dim': algebra.dim})

        engine = leibniz.Engine({'dimension': Dimension})
    """

    commands: typing.Dict[str, typing.Type[_command.Command]]
    """Mapping of command names to their implementation classes.

    Includes built-in commands.
    """

    logger: logging.Logger
    """Python logger used for logging."""

    environment: _templates.Environment
    """An :class:`Environment` object used for human-readable output."""

    budget: int
    """Maximum number of candidates for enumerations."""

    def __init__(
        self,
        commands: typing.Optional[
            typing.Dict[str, typing.Type[_command.Command]]
        ] = None,
        logger: typing.Optional[logging.Logger] = None,
        budget: int = _oracle.DEFAULT_BUDGET,
    ) -> None:
        self.commands = _BUILTINS.copy()
        if commands is not None:
            self.commands.update(commands)

        if logger is None:
            logger = logging.getLogger('leibniz')
        self.logger = logger
        self.environment = _templates.Environment()
        self.environment.filters.update(_FILTERS)
        self.budget = budget

    def parser(self) -> argparse.ArgumentParser:
        """An argument parser for all known commands."""
        parser = argparse.ArgumentParser(
            prog='leibniz',
            description='Exact computations with Leibniz algebras, crossed '
                        'modules and internal groupoids.')
        parser.add_argument('--json', action='store_true',
                            help='print reports as JSON')
        parser.add_argument('--query',
                            help='JMESPath expression applied to the JSON '
                                 'output (requires jmespath)')
        parser.add_argument('--debug', action='store_true',
                            help='enable debug logging')
        parser.add_argument('--budget', type=int, default=None,
                            help='maximum number of enumeration candidates '
                                 f'(default: {self.budget})')
        subparsers = parser.add_subparsers(dest='command', metavar='command')
        subparsers.required = True
        for name, command in sorted(self.commands.items()):
            command.add_arguments(
                subparsers.add_parser(name, help=command.summary()))
        return parser

    def load(self, path: str, verify: bool = True) -> _serialize.Document:
        """Load a document from a file, ``-`` is the standard input.

        :raises: :class:`InvalidDocument` if the file cannot be read or
            parsed.
        """
        try:
            if path == '-':
                text = sys.stdin.read()
            else:
                with open(path, encoding='utf-8') as fp:
                    text = fp.read()
        except OSError as exc:
            raise _types.InvalidDocument(f"Cannot read {path}: {exc}")
        self.logger.debug("Loaded %s characters from %s", len(text), path)
        try:
            return _serialize.parse(text, verify=verify)
        except _types.InvalidDocument as exc:
            raise _types.InvalidDocument(f"{path}: {exc}") from None

    def run(self, name: str,
            params: typing.Dict[str, typing.Any]) -> _command.Result:
        """Run a command by name with already parsed parameters.

        :raises: :class:`UnknownCommand` for unknown names.
        """
        try:
            command_class = self.commands[name]
        except KeyError:
            raise _types.UnknownCommand(
                f"Command {name} is not known") from None
        return command_class(name, self)(params)

    def _format(self, result: _command.Result, as_json: bool,
                query: typing.Optional[str]) -> str:
        if query is not None:
            try:
                data = filters.json_query(result.data, query)
            except RuntimeError as exc:
                raise _types.InvalidCommand(str(exc))
            except Exception as exc:
                raise _types.InvalidCommand(f"Invalid query: {exc}")
            return json.dumps(data, sort_keys=True, indent=2) + '\n'
        if result.lines is not None:
            return ''.join(line + '\n' for line in result.lines)
        if as_json or result.template is None:
            return json.dumps(result.data, sort_keys=True, indent=2) + '\n'
        return self.environment.render(result.template, **result.context)

    def _format_report(self, exc: _types.InvalidStructure,
                       as_json: bool) -> str:
        report = exc.report
        if as_json:
            return json.dumps(report.as_dict(), sort_keys=True,
                              indent=2) + '\n'
        return self.environment.render('report', report=report)

    def execute(
        self,
        argv: typing.Optional[typing.Sequence[str]] = None,
        stdout: typing.Optional[typing.TextIO] = None,
    ) -> int:
        """Execute a command line.

        :param argv: Arguments without the program name, defaults to
            ``sys.argv[1:]``.
        :param stdout: Stream for documents and reports.
        :return: The exit code: 0 on success, 1 if a structure fails
            validation, 2 on malformed input or usage errors.
        """
        stdout = stdout or sys.stdout
        try:
            args = self.parser().parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2

        if args.debug:
            self.logger.setLevel(logging.DEBUG)
        if args.budget is not None:
            self.budget = args.budget

        params = {key: value for key, value in vars(args).items()
                  if key not in ('command', 'json', 'query', 'debug',
                                 'budget')}
        try:
            result = self.run(args.command, params)
            stdout.write(self._format(result, args.json, args.query))
        except _types.InvalidStructure as exc:
            self.logger.error("%s", exc)
            if exc.report is not None:
                stdout.write(self._format_report(exc, args.json))
            return 1
        except _types.Error as exc:
            self.logger.error("%s", exc)
            return 2

        if result.failed:
            self.logger.error("Validation failed")
            return 1
        return 0


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> None:
    """Entry point of the ``leibniz`` console script."""
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format='%(levelname)s: %(message)s')
    sys.exit(Engine().execute(argv))
