import fractions
import unittest
from unittest import mock

from jinja2 import exceptions

import leibniz
from leibniz import filters


GF5 = leibniz.FieldSpec.prime(5)


class TestFilters(unittest.TestCase):

    engine = leibniz.Engine()
    env = engine.environment

    def eval(self, expr: str, **ctx):
        return self.env.from_string('{{ %s }}' % expr).render(**ctx)

    def test_flag(self):
        self.assertEqual('yes', self.eval('value | flag', value=True))
        self.assertEqual('NO', self.eval('value | flag', value=False))

    def test_scalar(self):
        self.assertEqual('-1/2', self.eval(
            'value | scalar', value=fractions.Fraction(-2, 4)))
        self.assertEqual('3', self.eval('value | scalar', value=GF5(8)))

    def test_vector(self):
        self.assertEqual('(1, -1/2, 0)', self.eval(
            'value | vector',
            value=(1, fractions.Fraction(-1, 2), fractions.Fraction(0))))
        self.assertEqual('()', self.eval('value | vector', value=()))

    def test_matrix(self):
        self.assertEqual('  [    1  -1/2 ]\n  [    0     3 ]',
                         filters.matrix([['1', '-1/2'], ['0', '3']]))

    def test_matrix_indent(self):
        self.assertEqual('[ 1 ]', self.eval('value | matrix(0)',
                                            value=[[1]]))

    def test_empty_matrix(self):
        self.assertEqual('  []', filters.matrix([]))
        self.assertEqual('  []', filters.matrix([[]]))

    @mock.patch.object(filters, 'jmespath', None)
    def test_json_query_unavailable(self):
        self.assertRaisesRegex(RuntimeError,
                               "require the jmespath",
                               self.eval,
                               "[] | json_query('[]')")

    def test_json_query(self):
        reports = [{'kind': 'xmod', 'valid': True},
                   {'kind': 'groupoid', 'valid': False}]
        result = filters.json_query(reports, '[?valid].kind')
        self.assertEqual(['xmod'], result)


class TemplatesTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.env = leibniz.Engine().environment

    def test_report(self):
        report = leibniz.Report('xmod', {'lxm1': True, 'lxm2': False})
        self.assertEqual('xmod: INVALID\n  lxm1  yes\n  lxm2  NO\n',
                         self.env.render('report', report=report))

    def test_report_informational(self):
        report = leibniz.Report('algebra',
                                {'leibniz_ok': True, 'abelian': False},
                                informational=('abelian',),
                                note='checked on basis triples')
        self.assertEqual(
            'algebra: valid\n'
            '  leibniz_ok  yes\n'
            '  abelian     NO  (informational)\n'
            'note: checked on basis triples\n',
            self.env.render('report', report=report))

    def test_isomorphism(self):
        result = self.env.render('isomorphism', title='xmod round trip',
                                 maps={'f1': [['1', '0'], ['0', '1']]})
        self.assertEqual('xmod round trip: verified\nf1:\n'
                         '  [ 1  0 ]\n  [ 0  1 ]\n', result)

    def test_vector(self):
        self.assertEqual('(1, 0)\n', self.env.render('vector',
                                                     value=(1, 0)))

    def test_names(self):
        self.assertEqual('A2\nAb(1)\n',
                         self.env.render('names', names=['A2', 'Ab(1)']))

    def test_strict_undefined(self):
        self.assertRaises(exceptions.UndefinedError, self.env.render,
                          'vector')

    def test_sandboxed(self):
        template = self.env.from_string('{{ value.__class__ }}')
        self.assertRaises(exceptions.SecurityError, template.render,
                          value=1)
