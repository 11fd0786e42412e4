import random
import unittest

import hypothesis
import hypothesis.strategies as strat

import leibniz
from leibniz import _algebra
from leibniz import _linalg
from leibniz import _oracle
from leibniz import fixtures


Q = leibniz.FieldSpec.rational()
GF2 = leibniz.FieldSpec.prime(2)
GF3 = leibniz.FieldSpec.prime(3)

Matrix = _linalg.Matrix


class StructureConstantsTestCase(unittest.TestCase):

    def test_from_brackets(self):
        a = leibniz.StructureConstants.from_brackets(Q, 2, {(0, 0): {1: 1}})
        self.assertEqual(2, a.dim)
        self.assertEqual(('e1', 'e2'), a.basis)
        self.assertEqual((0, 1), a.table[0][0])
        self.assertEqual((0, 0), a.table[1][0])
        self.assertFalse(a.verified)

    def test_not_cubic(self):
        self.assertRaises(leibniz.DimensionMismatch,
                          leibniz.StructureConstants, Q, [[[0, 0]]])

    def test_duplicate_basis(self):
        self.assertRaises(leibniz.DimensionMismatch,
                          leibniz.StructureConstants.zero, Q, 2, ['x', 'x'])

    def test_bracket(self):
        a2 = fixtures.a2(Q)
        self.assertEqual((0, 1), a2.bracket((1, 0), (1, 0)))
        self.assertEqual((0, 1), leibniz.bracket(a2, (1, 1), (1, 1)))
        self.assertEqual((0, 6), a2.bracket((2, 5), (3, 7)))
        self.assertEqual((0, 0), a2.bracket((0, 1), (1, 1)))

    def test_bracket_wrong_length(self):
        self.assertRaises(leibniz.DimensionMismatch,
                          fixtures.a2(Q).bracket, (1,), (1, 0))

    def test_basis_names_ignored_by_equality(self):
        self.assertEqual(leibniz.abelian(Q, 2),
                         leibniz.abelian(Q, 2, basis=['x', 'y']))
        self.assertNotEqual(leibniz.abelian(Q, 2), leibniz.abelian(GF2, 2))


class ValidateAlgebraTestCase(unittest.TestCase):

    def test_a2(self):
        report = leibniz.validate_algebra(fixtures.a2(Q))
        self.assertTrue(report.leibniz_ok)
        self.assertFalse(report.abelian)
        self.assertFalse(report.lie)
        self.assertTrue(report.succeeded)
        self.assertIn('no sampling', report.note)

    def test_aff2_is_lie(self):
        report = leibniz.validate_algebra(fixtures.aff2(Q))
        self.assertTrue(report.leibniz_ok)
        self.assertTrue(report.lie)

    def test_abelian(self):
        report = leibniz.validate_algebra(leibniz.abelian(GF3, 3))
        self.assertEqual({'leibniz_ok': True, 'abelian': True, 'lie': True},
                         report.flags)

    def test_zero_dimensional(self):
        self.assertTrue(leibniz.validate_algebra(leibniz.abelian(Q, 0)))

    def test_square_of_generator(self):
        # [e, e] = e forces c * c = 0
        c = leibniz.StructureConstants(GF2, [[[1]]])
        report = leibniz.validate_algebra(c)
        self.assertFalse(report.leibniz_ok)
        self.assertTrue(report.failed)
        self.assertEqual(['leibniz_ok'], report.failures())

    def test_invalid_algebra_raises(self):
        with self.assertRaises(leibniz.InvalidStructure) as ctx:
            leibniz.LeibnizAlgebra(GF2, [[[1]]])
        self.assertIn("('e1', 'e1', 'e1')", str(ctx.exception))
        self.assertFalse(ctx.exception.report.leibniz_ok)

    def test_from_constants(self):
        c = leibniz.StructureConstants.from_brackets(Q, 2, {(0, 0): {1: 1}})
        a = leibniz.LeibnizAlgebra.from_constants(c)
        self.assertTrue(a.verified)
        self.assertEqual(fixtures.a2(Q), a)
        self.assertIs(a, leibniz.LeibnizAlgebra.from_constants(a))

    def test_lie_in_characteristic_two(self):
        # [e1, e2] = [e2, e1] = e1 is antisymmetric over GF(2) only
        c = leibniz.StructureConstants.from_brackets(
            GF2, 2, {(0, 1): {0: 1}, (1, 0): {0: 1}})
        self.assertEqual(
            _oracle.naive_leibniz(GF2, c.table),
            leibniz.validate_algebra(c).leibniz_ok)
        self.assertTrue(leibniz.validate_algebra(c).lie)


class MorphismTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.a2 = fixtures.a2(Q)

    def test_identity(self):
        identity = leibniz.LinearMorphism.identity(self.a2)
        self.assertTrue(leibniz.check_morphism(identity))
        self.assertTrue(identity.is_bijective())
        self.assertEqual((3, 4), identity((3, 4)))

    def test_weighted_scaling(self):
        # e1 -> t e1 and e2 -> t^2 e2 respects [e1, e1] = e2
        good = leibniz.LinearMorphism(self.a2, self.a2,
                                      Matrix(Q, [[2, 0], [0, 4]]))
        bad = leibniz.LinearMorphism(self.a2, self.a2,
                                     Matrix(Q, [[2, 0], [0, 2]]))
        self.assertTrue(good.is_leibniz())
        self.assertFalse(bad.is_leibniz())

    def test_inverse(self):
        f = leibniz.LinearMorphism(self.a2, self.a2,
                                   Matrix(Q, [[2, 0], [0, 4]]))
        self.assertEqual(leibniz.LinearMorphism.identity(self.a2),
                         f.compose(f.inverse()))

    def test_wrong_shape(self):
        self.assertRaises(leibniz.DimensionMismatch, leibniz.LinearMorphism,
                          self.a2, leibniz.abelian(Q, 1),
                          Matrix(Q, [[1], [0]]))

    def test_field_mismatch(self):
        self.assertRaises(leibniz.FieldMismatch, leibniz.LinearMorphism,
                          self.a2, fixtures.a2(GF2),
                          Matrix.identity(Q, 2))

    def test_not_composable(self):
        f = leibniz.LinearMorphism.zero(self.a2, leibniz.abelian(Q, 1))
        self.assertRaises(leibniz.NotComposable, f.compose, f)

    def test_compose(self):
        ab1 = leibniz.abelian(Q, 1)
        into = leibniz.LinearMorphism(ab1, self.a2, Matrix(Q, [[0], [1]]))
        onto = leibniz.LinearMorphism(self.a2, ab1, Matrix(Q, [[1, 0]]))
        self.assertTrue(into.is_leibniz())
        self.assertTrue(onto.is_leibniz())
        self.assertEqual(leibniz.LinearMorphism.zero(ab1, ab1),
                         onto.compose(into))


class SubalgebraTestCase(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self.a2 = fixtures.a2(Q)
        self.center = leibniz.Subspace(Q, 2, [(0, 1)])
        self.line = leibniz.Subspace(Q, 2, [(1, 0)])

    def test_is_ideal(self):
        self.assertTrue(leibniz.is_ideal(self.a2, self.center))
        self.assertFalse(leibniz.is_ideal(self.a2, self.line))

    def test_is_ideal_wrong_ambient(self):
        self.assertRaises(leibniz.DimensionMismatch, leibniz.is_ideal,
                          self.a2, leibniz.Subspace(Q, 3))

    def test_subalgebra(self):
        sub, inclusion = leibniz.subalgebra(self.a2, self.center)
        self.assertEqual(leibniz.abelian(Q, 1), sub)
        self.assertEqual(('s1',), sub.basis)
        self.assertTrue(leibniz.check_morphism(inclusion))
        self.assertEqual((0, 1), inclusion((1,)))

    def test_not_closed(self):
        self.assertRaisesRegex(leibniz.InvalidStructure, "not closed",
                               leibniz.subalgebra, self.a2, self.line)


class ProductTestCase(unittest.TestCase):

    def test_direct_product(self):
        product = leibniz.direct_product(fixtures.a2(Q), leibniz.abelian(Q, 1))
        self.assertEqual(3, product.dim)
        self.assertEqual(('(e1,0)', '(e2,0)', '(0,e1)'), product.basis)
        self.assertEqual((0, 1, 0), product.bracket((1, 0, 5), (1, 0, 7)))

    def test_projections_and_injections(self):
        a2, aff2 = fixtures.a2(Q), fixtures.aff2(Q)
        for f in (_algebra.product_projections(a2, aff2)
                  + _algebra.product_injections(a2, aff2)):
            with self.subTest(f=f):
                self.assertTrue(leibniz.check_morphism(f))
        first, second = _algebra.product_projections(a2, aff2)
        self.assertEqual((1, 2), first((1, 2, 3, 4)))
        self.assertEqual((3, 4), second((1, 2, 3, 4)))

    def test_product_field_mismatch(self):
        self.assertRaises(leibniz.FieldMismatch, leibniz.direct_product,
                          fixtures.a2(Q), fixtures.a2(GF2))


class ChangeBasisTestCase(unittest.TestCase):

    def test_shear(self):
        a2 = fixtures.a2(Q)
        image, iso = leibniz.change_basis(a2, Matrix(Q, [[1, 1], [0, 1]]))
        # [e1, e1] = e2 becomes [e1, e1] = e1 + e2 after the shear
        self.assertEqual((1, 1), image.table[0][0])
        self.assertTrue(leibniz.check_morphism(iso))
        self.assertTrue(iso.is_bijective())

    def test_singular(self):
        self.assertRaises(leibniz.InvalidStructure, leibniz.change_basis,
                          fixtures.a2(Q), Matrix(Q, [[1, 1], [1, 1]]))

    @hypothesis.given(strat.sampled_from(['A2', 'Aff2', 'Ab(2)']),
                      strat.sampled_from([Q, GF2, GF3]),
                      strat.integers(min_value=0))
    @hypothesis.settings(max_examples=30, deadline=None)
    def test_transport_preserves_the_identity(self, name, field, seed):
        algebra = fixtures.build(name, field).payload
        transform = _oracle.random_invertible(2, field, random.Random(seed))
        image, iso = leibniz.change_basis(algebra, transform)
        self.assertTrue(leibniz.validate_algebra(image).leibniz_ok)
        self.assertTrue(leibniz.check_morphism(iso))
        self.assertTrue(leibniz.check_morphism(iso.inverse()))
        self.assertEqual(algebra.is_abelian(), image.is_abelian())
