import unittest

import leibniz


class ReportTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.report = leibniz.Report(
            'algebra', {'leibniz_ok': False, 'abelian': False},
            informational=('abelian',))

    def test_attributes(self):
        self.assertFalse(self.report.leibniz_ok)
        self.assertEqual(['leibniz_ok', 'abelian'], list(self.report.flags))
        self.assertTrue(self.report.failed)
        self.assertFalse(self.report)

    def test_informational_ignored(self):
        report = leibniz.Report('algebra', {'leibniz_ok': 1, 'abelian': 0},
                                informational=('abelian',))
        self.assertTrue(report.succeeded)
        self.assertEqual([], report.failures())
        self.assertIs(True, report.leibniz_ok)

    def test_failures(self):
        self.assertEqual(['leibniz_ok'], self.report.failures())

    def test_require(self):
        with self.assertRaisesRegex(leibniz.InvalidStructure,
                                    "Invalid algebra: leibniz_ok failed"
                                    ) as ctx:
            self.report.require('algebra')
        self.assertIs(self.report, ctx.exception.report)

    def test_require_passes(self):
        leibniz.Report('xmod', {'lxm1': True}).require('crossed module')

    def test_as_dict(self):
        report = leibniz.Report('xmod', {'lxm1': True}, note='basis only')
        self.assertEqual({'kind': 'xmod', 'flags': {'lxm1': True},
                          'valid': True, 'note': 'basis only'},
                         report.as_dict())

    def test_equality(self):
        self.assertEqual(leibniz.Report('xmod', {'lxm1': True}),
                         leibniz.Report('xmod', {'lxm1': True}, note='x'))
        self.assertNotEqual(leibniz.Report('xmod', {'lxm1': True}),
                            leibniz.Report('xmod', {'lxm1': False}))
