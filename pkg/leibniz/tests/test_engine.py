import contextlib
import io
import json
import logging
import os
import tempfile
import typing
import unittest
from unittest import mock

import leibniz
from leibniz import _engine
from leibniz import commands
from leibniz import filters
from leibniz import fixtures


Q = leibniz.FieldSpec.rational()
GF2 = leibniz.FieldSpec.prime(2)


class DimensionCommand(leibniz.Command):
    """Print the dimension of an algebra."""

    required_params = {'file': str}

    def execute(
        self,
        params: typing.Mapping[str, typing.Any],
    ) -> leibniz.Result:
        algebra = self.engine.load(params['file']).body
        return leibniz.Result(data={'dim': algebra.dim})


class EngineTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.engine = leibniz.Engine({'dimension': DimensionCommand})

    def test_builtin_commands(self):
        engine = leibniz.Engine()
        self.assertEqual({'build', 'check', 'convert', 'enumerate',
                          'fixtures', 'lift', 'roundtrip', 'validate'},
                         set(engine.commands))
        # Sanity-check: everything in commands is exposed.
        for item in commands.__all__:
            self.assertIn(item.lower(), engine.commands)

    def test_custom_commands(self):
        self.assertIs(DimensionCommand, self.engine.commands['dimension'])
        self.assertIn('validate', self.engine.commands)

    def test_filters(self):
        for item in filters.__all__:
            self.assertIn(item, self.engine.environment.filters)

    def test_default_logger(self):
        self.assertEqual('leibniz', self.engine.logger.name)

    def test_custom_logger(self):
        logger = logging.getLogger('leibniz.custom')
        self.assertIs(logger, leibniz.Engine(logger=logger).logger)

    def test_budget(self):
        self.assertEqual(leibniz.DEFAULT_BUDGET, self.engine.budget)
        self.assertEqual(10, leibniz.Engine(budget=10).budget)

    def test_unknown_command(self):
        self.assertRaisesRegex(leibniz.UnknownCommand,
                               "Command banana is not known",
                               self.engine.run, 'banana', {})

    def test_parser(self):
        args = self.engine.parser().parse_args(
            ['--json', 'dimension', 'doc.json'])
        self.assertTrue(args.json)
        self.assertEqual('dimension', args.command)
        self.assertEqual('doc.json', args.file)


class ExecuteTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.logger = logging.getLogger('leibniz.tests')
        self.engine = leibniz.Engine({'dimension': DimensionCommand},
                                     logger=self.logger)
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name: str, structure: typing.Any) -> str:
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(leibniz.serialize(structure))
        return path

    def execute(self, *argv: str) -> typing.Tuple[int, str]:
        stdout = io.StringIO()
        with contextlib.redirect_stderr(io.StringIO()):
            code = self.engine.execute(list(argv), stdout=stdout)
        return code, stdout.getvalue()

    def test_custom_command(self):
        path = self.write('a2.json', fixtures.a2(Q))
        code, output = self.execute('dimension', path)
        self.assertEqual(0, code)
        self.assertEqual({'dim': 2}, json.loads(output))

    def test_fixture(self):
        code, output = self.execute('fixtures', '--name', 'A2')
        self.assertEqual(0, code)
        self.assertEqual(leibniz.serialize(fixtures.a2(Q)), output)

    def test_fixture_over_prime_field(self):
        code, output = self.execute('fixtures', '--name', 'Aff2', '--p', '3')
        self.assertEqual(0, code)
        document = leibniz.parse(output)
        self.assertEqual(fixtures.aff2(leibniz.FieldSpec.prime(3)),
                         document.body)

    def test_fixture_names(self):
        code, output = self.execute('fixtures')
        self.assertEqual(0, code)
        self.assertEqual(list(fixtures.STANDARD), output.splitlines())

    def test_unknown_fixture(self):
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, output = self.execute('fixtures', '--name', 'B2')
        self.assertEqual(2, code)
        self.assertEqual('', output)
        self.assertIn('Unknown fixture B2', logs.output[0])

    def test_validate(self):
        path = self.write('pair.json', fixtures.build('PairGpd(A2)').payload)
        code, output = self.execute('validate', path)
        self.assertEqual(0, code)
        self.assertTrue(output.startswith('groupoid: valid\n'))

    def test_validate_json(self):
        path = self.write('pair.json', fixtures.build('PairGpd(A2)').payload)
        code, output = self.execute('--json', 'validate', path)
        self.assertEqual(0, code)
        report = json.loads(output)
        self.assertTrue(report['valid'])
        self.assertEqual('groupoid', report['kind'])
        self.assertTrue(report['flags']['interchange_ok'])

    def test_validate_failure(self):
        path = self.write('bad.json',
                          leibniz.StructureConstants(GF2, [[[1]]]))
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, output = self.execute('validate', path)
        self.assertEqual(1, code)
        self.assertTrue(output.startswith('algebra: INVALID\n'))
        self.assertIn('Validation failed', logs.output[-1])

    def test_invalid_embedded_structure(self):
        x = leibniz.trivial_xmod(fixtures.a2(Q), fixtures.a2(Q))
        path = self.write('bad.json', x)
        code, output = self.execute('convert', 'delta', path)
        self.assertEqual(1, code)
        self.assertTrue(output.startswith('xmod: INVALID\n'))

    def test_invalid_structure_as_json(self):
        x = leibniz.trivial_xmod(fixtures.a2(Q), fixtures.a2(Q))
        path = self.write('bad.json', x)
        code, output = self.execute('--json', 'convert', 'delta', path)
        self.assertEqual(1, code)
        self.assertFalse(json.loads(output)['flags']['lxm2'])

    def test_wrong_document_kind(self):
        path = self.write('x.json', fixtures.build('IdX(A2)').payload)
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, _output = self.execute('convert', 'eta', path)
        self.assertEqual(2, code)
        self.assertIn('expected a groupoid document, got xmod',
                      logs.output[0])

    def test_missing_file(self):
        path = os.path.join(self.tmp.name, 'missing.json')
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, _output = self.execute('validate', path)
        self.assertEqual(2, code)
        self.assertIn('Cannot read', logs.output[0])

    def test_malformed_file(self):
        path = os.path.join(self.tmp.name, 'broken.json')
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write('{"kind": "algebra"')
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, _output = self.execute('validate', path)
        self.assertEqual(2, code)
        self.assertIn(f'{path}: line 1', logs.output[0])

    def test_stdin(self):
        text = leibniz.serialize(fixtures.a2(Q))
        with mock.patch('sys.stdin', io.StringIO(text)):
            code, output = self.execute('dimension', '-')
        self.assertEqual(0, code)
        self.assertEqual({'dim': 2}, json.loads(output))

    def test_usage_error(self):
        code, output = self.execute('banana')
        self.assertEqual(2, code)
        self.assertEqual('', output)

    def test_help(self):
        with contextlib.redirect_stdout(io.StringIO()):
            code, _output = self.execute('--help')
        self.assertEqual(0, code)

    def test_enumerate(self):
        code, output = self.execute('enumerate', '--dim', '2', '--p', '2')
        self.assertEqual(0, code)
        lines = output.splitlines()
        self.assertEqual(13, len(lines))
        self.assertEqual(leibniz.abelian(GF2, 2),
                         leibniz.parse(lines[0]).body)

    def test_enumerate_budget(self):
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, output = self.execute('--budget', '100', 'enumerate',
                                        '--dim', '2', '--p', '2')
        self.assertEqual(2, code)
        self.assertEqual(100, self.engine.budget)
        self.assertIn('needs 256 candidates', logs.output[0])

    def test_enumerate_needs_options(self):
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, _output = self.execute('enumerate', '--dim', '2')
        self.assertEqual(2, code)
        self.assertIn('enumerate needs --p', logs.output[0])

    def test_enumerate_xmods(self):
        path = self.write('ab1.json', leibniz.abelian(GF2, 1))
        code, output = self.execute('enumerate', '--kind', 'xmod',
                                    '--l1', path, '--l0', path)
        self.assertEqual(0, code)
        self.assertEqual(4, len(output.splitlines()))

    def test_query(self):
        path = self.write('pair.json', fixtures.build('PairGpd(A2)').payload)
        code, output = self.execute('--query', 'flags.maps_ok',
                                    'validate', path)
        self.assertEqual(0, code)
        self.assertEqual('true\n', output)

    @mock.patch.object(filters, 'jmespath', None)
    def test_query_unavailable(self):
        path = self.write('pair.json', fixtures.build('PairGpd(A2)').payload)
        with self.assertLogs(self.logger, level='ERROR') as logs:
            code, _output = self.execute('--query', 'valid', 'validate', path)
        self.assertEqual(2, code)
        self.assertIn('require the jmespath', logs.output[0])

    def test_debug(self):
        self.addCleanup(self.logger.setLevel, logging.NOTSET)
        self.execute('--debug', 'fixtures')
        self.assertEqual(logging.DEBUG, self.logger.level)


class MainTestCase(unittest.TestCase):

    @mock.patch.object(logging, 'basicConfig', autospec=True)
    def test_main(self, mock_config):
        with contextlib.redirect_stdout(io.StringIO()) as stdout:
            with self.assertRaises(SystemExit) as ctx:
                _engine.main(['fixtures', '--name', 'Ab(1)'])
        self.assertEqual(0, ctx.exception.code)
        self.assertEqual(leibniz.serialize(leibniz.abelian(Q, 1)),
                         stdout.getvalue())
        mock_config.assert_called_once_with(
            stream=mock.ANY, level=logging.WARNING,
            format='%(levelname)s: %(message)s')
