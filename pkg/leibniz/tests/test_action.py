import itertools
import random
import unittest

import hypothesis
import hypothesis.strategies as strat

import leibniz
from leibniz import _action
from leibniz import _oracle
from leibniz import fixtures


Q = leibniz.FieldSpec.rational()
GF2 = leibniz.FieldSpec.prime(2)
GF3 = leibniz.FieldSpec.prime(3)


def left_only_action(actor, actee):
    """``x . m = [x, m]`` and ``m . x = 0`` for an algebra on itself."""
    zero = actee.zero_vector()
    return leibniz.LeibnizAction(actor, actee, actor.table,
                                 [[zero] * actor.dim
                                  for _ in range(actee.dim)])


class ActionTestCase(unittest.TestCase):

    def test_bracket_action(self):
        for name in ('A2', 'Aff2', 'Ab(2)'):
            with self.subTest(name=name):
                algebra = fixtures.build(name).payload
                report = leibniz.validate_action(
                    leibniz.bracket_action(algebra))
                self.assertTrue(report.succeeded)
                self.assertEqual(list(_action.AXIOMS), list(report.flags))

    def test_trivial_action(self):
        act = leibniz.trivial_action(fixtures.a2(Q), fixtures.aff2(Q))
        self.assertTrue(leibniz.validate_action(act))
        self.assertEqual((0, 0), act.left((1, 2), (3, 4)))

    def test_evaluation(self):
        act = leibniz.bracket_action(fixtures.a2(Q))
        self.assertEqual((0, 6), act.left((2, 0), (3, 0)))
        self.assertEqual((0, 6), act.right((2, 0), (3, 0)))
        self.assertEqual((0, 0), act.right((0, 1), (1, 1)))

    def test_left_bracket_on_a_lie_algebra(self):
        # without a right action axiom v demands [[x, y], m] = 0
        report = leibniz.validate_action(left_only_action(
            fixtures.aff2(Q), fixtures.aff2(Q)))
        self.assertTrue(report.axiom_i)
        self.assertFalse(report.axiom_ii)
        self.assertTrue(report.axiom_iii)
        self.assertFalse(report.axiom_iv)
        self.assertFalse(report.axiom_v)
        self.assertTrue(report.axiom_vi)

    def test_left_bracket_on_a2(self):
        # Every bracket of A2 lies in the center, so this one is an action
        report = leibniz.validate_action(left_only_action(
            fixtures.a2(Q), fixtures.a2(Q)))
        self.assertTrue(report.succeeded)

    def test_nilpotent_actor(self):
        # e1 acts as the identity although [e1, e1] = e2 acts as zero
        a2, ab1 = fixtures.a2(Q), leibniz.abelian(Q, 1)
        act = leibniz.LeibnizAction(a2, ab1, [[(1,)], [(0,)]],
                                    [[(0,), (0,)]])
        report = leibniz.validate_action(act)
        self.assertEqual(['axiom_iv'], report.failures())

    def test_wrong_tensor_shape(self):
        a2 = fixtures.a2(Q)
        self.assertRaises(leibniz.DimensionMismatch, leibniz.LeibnizAction,
                          a2, a2, [[(0, 0)]], a2.table)

    def test_field_mismatch(self):
        self.assertRaises(leibniz.FieldMismatch, leibniz.trivial_action,
                          fixtures.a2(Q), fixtures.a2(GF2))

    def test_unknown_axiom(self):
        act = leibniz.bracket_action(fixtures.a2(Q))
        self.assertRaises(ValueError, list,
                          _action.axiom_residuals(act, 'axiom_vii'))


class SemidirectTestCase(unittest.TestCase):

    def test_semidirect_of_bracket_action(self):
        act = leibniz.bracket_action(fixtures.a2(Q))
        product, ext = leibniz.semidirect(act)
        self.assertEqual(4, product.dim)
        self.assertEqual(('(e1,0)', '(e2,0)', '(0,e1)', '(0,e2)'),
                         product.basis)
        # [(0, e1), (e1, 0)] = (e1 . e1, 0) = (e2, 0)
        self.assertEqual((0, 1, 0, 0),
                         product.bracket((0, 0, 1, 0), (1, 0, 0, 0)))
        self.assertTrue(leibniz.validate_split_extension(ext))

    def test_semidirect_of_trivial_action_is_a_product(self):
        a2, aff2 = fixtures.a2(Q), fixtures.aff2(Q)
        product, _ext = leibniz.semidirect(leibniz.trivial_action(aff2, a2))
        self.assertEqual(leibniz.direct_product(a2, aff2), product)

    def test_semidirect_rejects_invalid_action(self):
        act = left_only_action(fixtures.aff2(Q), fixtures.aff2(Q))
        with self.assertRaises(leibniz.InvalidStructure) as ctx:
            leibniz.semidirect(act)
        self.assertFalse(ctx.exception.report.axiom_ii)

    def test_derived_action_round_trip(self):
        for name in ('A2', 'Ab(2)', 'Aff2'):
            with self.subTest(name=name):
                act = leibniz.bracket_action(fixtures.build(name).payload)
                derived = leibniz.derived_action(
                    leibniz.canonical_extension(act))
                self.assertTrue(leibniz.validate_action(derived))
                self.assertEqual(act, derived)

    def test_extension_iso(self):
        ext = fixtures.build('SelfExt(A2)').payload
        theta, inverse = leibniz.extension_iso(ext)
        self.assertEqual(leibniz.LinearMorphism.identity(ext.middle_alg),
                         theta.compose(inverse))
        self.assertEqual(leibniz.LinearMorphism.identity(theta.source),
                         inverse.compose(theta))


class SplitExtensionTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.ext = fixtures.build('SelfExt(A2)').payload

    def test_fixture(self):
        report = leibniz.validate_split_extension(self.ext)
        self.assertEqual(
            {'morphisms_ok': True, 'i_injective': True, 'p_surjective': True,
             'exact': True, 'section_ok': True},
            report.flags)
        self.assertEqual(self.ext.kernel_alg, fixtures.a2(Q))
        self.assertEqual(self.ext.base_alg, fixtures.a2(Q))

    def test_zero_section(self):
        broken = leibniz.SplitExtension(
            self.ext.i, self.ext.p,
            leibniz.LinearMorphism.zero(self.ext.base_alg,
                                        self.ext.middle_alg))
        report = leibniz.validate_split_extension(broken)
        self.assertFalse(report.section_ok)
        self.assertTrue(report.exact)
        self.assertRaises(leibniz.InvalidStructure, leibniz.derived_action,
                          broken)

    def test_not_exact(self):
        broken = leibniz.SplitExtension(
            leibniz.LinearMorphism.zero(self.ext.kernel_alg,
                                        self.ext.middle_alg),
            self.ext.p, self.ext.s)
        report = leibniz.validate_split_extension(broken)
        self.assertFalse(report.i_injective)
        self.assertFalse(report.exact)

    def test_mismatched_maps(self):
        self.assertRaises(leibniz.InvalidStructure, leibniz.SplitExtension,
                          self.ext.i, self.ext.p, self.ext.p)

    @hypothesis.given(strat.sampled_from(['SelfExt(A2)', 'SelfExt(Ab(2))']),
                      strat.sampled_from([Q, GF2, GF3]),
                      strat.integers(min_value=0))
    @hypothesis.settings(max_examples=25, deadline=None)
    def test_transported_extension(self, name, field, seed):
        ext = fixtures.build(name, field).payload
        transform = _oracle.random_invertible(4, field, random.Random(seed))
        moved = leibniz.transport_extension(ext, transform)
        self.assertTrue(leibniz.validate_split_extension(moved))
        self.assertEqual(leibniz.derived_action(ext),
                         leibniz.derived_action(moved))
        theta, inverse = leibniz.extension_iso(moved)
        self.assertEqual(leibniz.LinearMorphism.identity(moved.middle_alg),
                         theta.compose(inverse))
        self.assertEqual(leibniz.LinearMorphism.identity(theta.source),
                         inverse.compose(theta))


class EnumeratedActionsTestCase(unittest.TestCase):

    def assertDerivedActionsAgree(self, actor, actee):
        for act in leibniz.enumerate_actions(actor, actee):
            with self.subTest(actor=actor, actee=actee, act=act):
                ext = leibniz.canonical_extension(act)
                derived = leibniz.derived_action(ext)
                self.assertTrue(leibniz.validate_action(derived))
                self.assertEqual(act.lam, derived.lam)
                self.assertEqual(act.rho, derived.rho)
                theta, _inverse = leibniz.extension_iso(ext)
                self.assertTrue(theta.is_bijective())

    def test_derived_action_soundness(self):
        algebras = (leibniz.enumerate_leibniz(1, 2)[1]
                    + leibniz.enumerate_leibniz(2, 2)[1])
        for actor, actee in itertools.product(algebras, repeat=2):
            self.assertDerivedActionsAgree(actor, actee)

    def test_derived_action_soundness_over_gf3(self):
        # the abelian plane has 3 ** 8 solutions of the linear axioms,
        # more than the default budget
        _count, lines = leibniz.enumerate_leibniz(1, 3)
        algebras = lines + [fixtures.a2(GF3), fixtures.aff2(GF3)]
        for actor, actee in itertools.product(algebras, repeat=2):
            self.assertDerivedActionsAgree(actor, actee)
