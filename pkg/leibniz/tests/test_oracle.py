import itertools
import unittest

import hypothesis
import hypothesis.strategies as strat

import leibniz
from leibniz import _linalg
from leibniz import _oracle
from leibniz import fixtures


Q = leibniz.FieldSpec.rational()
GF2 = leibniz.FieldSpec.prime(2)
GF3 = leibniz.FieldSpec.prime(3)


def table_of(flat, dim):
    return [[list(flat[(i * dim + j) * dim:(i * dim + j + 1) * dim])
             for j in range(dim)] for i in range(dim)]


def unflatten(actor, actee, flat):
    """Action tensors from their entries in sort key order."""
    n, m = actor.dim, actee.dim
    half = n * m * m
    lam = [[flat[(i * m + j) * m:(i * m + j + 1) * m] for j in range(m)]
           for i in range(n)]
    rho = [[flat[half + (j * n + i) * m:half + (j * n + i + 1) * m]
            for i in range(n)] for j in range(m)]
    return leibniz.LeibnizAction(actor, actee, lam, rho)


class EnumerateLeibnizTestCase(unittest.TestCase):

    def test_counts(self):
        for (dim, p), expected in {(1, 2): 1, (1, 3): 1, (2, 2): 13}.items():
            with self.subTest(dim=dim, p=p):
                count, found = leibniz.enumerate_leibniz(dim, p)
                self.assertEqual(expected, count)
                self.assertEqual(expected, len(found))

    def test_order(self):
        _count, found = leibniz.enumerate_leibniz(2, 2)
        self.assertEqual(leibniz.abelian(GF2, 2), found[0])
        self.assertIn(fixtures.a2(GF2), found)
        self.assertTrue(all(algebra.verified for algebra in found))

    def test_budget(self):
        # 3 ** 8 candidates
        self.assertRaisesRegex(leibniz.BudgetExceeded, "6561",
                               leibniz.enumerate_leibniz, 2, 3)

    def test_small_budget(self):
        self.assertRaises(leibniz.BudgetExceeded, leibniz.enumerate_leibniz,
                          1, 3, budget=2)

    def test_not_a_prime(self):
        self.assertRaises(leibniz.Error, leibniz.enumerate_leibniz, 2, 4)

    def test_naive_agrees_with_validation(self):
        for flat in itertools.product(GF2.elements(), repeat=8):
            table = table_of(flat, 2)
            with self.subTest(table=table):
                self.assertEqual(
                    _oracle.naive_leibniz(GF2, table),
                    leibniz.validate_algebra(
                        leibniz.StructureConstants(GF2, table)).leibniz_ok)

    @hypothesis.given(strat.lists(strat.integers(min_value=0, max_value=2),
                                  min_size=8, max_size=8))
    @hypothesis.settings(max_examples=100, deadline=None)
    def test_naive_agrees_over_gf3(self, flat):
        table = table_of([GF3(x) for x in flat], 2)
        self.assertEqual(
            _oracle.naive_leibniz(GF3, table),
            leibniz.validate_algebra(
                leibniz.StructureConstants(GF3, table)).leibniz_ok)


class EnumerateActionsTestCase(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(3, len(leibniz.enumerate_actions(
            leibniz.abelian(GF2, 1), leibniz.abelian(GF2, 1))))
        self.assertEqual(5, len(leibniz.enumerate_actions(
            leibniz.abelian(GF3, 1), leibniz.abelian(GF3, 1))))

    def test_every_action_is_valid(self):
        a2, ab1 = fixtures.a2(GF2), leibniz.abelian(GF2, 1)
        found = leibniz.enumerate_actions(a2, ab1)
        self.assertIn(leibniz.trivial_action(a2, ab1), found)
        # e1 acting as the identity breaks axiom iv
        self.assertNotIn(
            leibniz.LeibnizAction(a2, ab1, [[(1,)], [(0,)]],
                                  [[(0,), (0,)]]),
            found)
        for act in found:
            with self.subTest(act=act):
                self.assertTrue(leibniz.validate_action(act))

    def test_rationals(self):
        a2 = fixtures.a2(Q)
        self.assertRaisesRegex(leibniz.Error, "prime field",
                               leibniz.enumerate_actions, a2, a2)

    def test_budget(self):
        ab1 = leibniz.abelian(GF2, 1)
        self.assertRaises(leibniz.BudgetExceeded, leibniz.enumerate_actions,
                          ab1, ab1, budget=1)
        # 3 ** 8 solutions of the linear axioms on an abelian plane
        ab2 = leibniz.abelian(GF3, 2)
        self.assertRaisesRegex(leibniz.BudgetExceeded, "6561",
                               leibniz.enumerate_actions,
                               leibniz.abelian(GF3, 1), ab2)

    def test_sorted(self):
        ab1, a2 = leibniz.abelian(GF2, 1), fixtures.a2(GF2)
        for actor, actee in ((a2, ab1), (ab1, a2), (a2, a2)):
            with self.subTest(actor=actor, actee=actee):
                found = leibniz.enumerate_actions(actor, actee)
                keys = [_oracle.action_sort_key(act) for act in found]
                self.assertEqual(sorted(keys), keys)
                self.assertEqual(len(set(keys)), len(keys))
                self.assertEqual(leibniz.trivial_action(actor, actee),
                                 found[0])

    def test_action_sort_key(self):
        ab1 = leibniz.abelian(GF2, 1)
        act = leibniz.LeibnizAction(ab1, ab1, [[(1,)]], [[(1,)]])
        self.assertEqual((1, 1), _oracle.action_sort_key(act))
        a2 = fixtures.a2(GF3)
        self.assertEqual((0,) * 8 + (0, 0, 0, 0, 2, 0, 0, 0),
                         _oracle.action_sort_key(
                             leibniz.LeibnizAction(
                                 a2, a2, [[(0, 0)] * 2] * 2,
                                 [[(0, 0)] * 2, [(2, 0), (0, 0)]])))

    def test_agrees_with_exhaustive_search(self):
        ab1, a2 = leibniz.abelian(GF2, 1), fixtures.a2(GF2)
        aff2 = fixtures.aff2(GF2)
        for actor, actee in ((a2, ab1), (aff2, ab1), (ab1, a2),
                             (ab1, aff2)):
            size = 2 * actor.dim * actee.dim * actee.dim
            expected = []
            for flat in itertools.product(range(2), repeat=size):
                act = unflatten(actor, actee, flat)
                if leibniz.validate_action(act):
                    expected.append(act)
            with self.subTest(actor=actor, actee=actee):
                self.assertEqual(expected,
                                 leibniz.enumerate_actions(actor, actee))


class EnumerateXModsTestCase(unittest.TestCase):

    def test_abelian_lines(self):
        ab1 = leibniz.abelian(GF2, 1)
        found = leibniz.enumerate_xmods(ab1, ab1)
        self.assertEqual(4, len(found))
        zero = [x for x in found if x.boundary.matrix.is_zero()]
        self.assertEqual(3, len(zero))
        self.assertIn(leibniz.identity_xmod(ab1), found)

    def test_zero(self):
        zero = leibniz.abelian(GF2, 0)
        self.assertEqual([leibniz.zero_xmod(GF2)],
                         leibniz.enumerate_xmods(zero, zero))

    def test_sorted(self):
        a2 = fixtures.a2(GF2)
        found = leibniz.enumerate_xmods(a2, a2)
        self.assertIn(leibniz.identity_xmod(a2), found)
        keys = [_oracle.xmod_sort_key(x) for x in found]
        self.assertEqual(sorted(keys), keys)

    def test_abelian_planes(self):
        ab2 = leibniz.abelian(GF2, 2)
        found = leibniz.enumerate_xmods(ab2, ab2)
        self.assertEqual(352, len(found))
        self.assertIn(leibniz.trivial_xmod(ab2, ab2), found)
        self.assertIn(leibniz.identity_xmod(ab2), found)

    def test_image_of_boundary_is_an_ideal(self):
        ab1, aff2 = leibniz.abelian(GF2, 1), fixtures.aff2(GF2)
        # e1 spans a subalgebra of aff2 which is not an ideal
        onto_e1 = leibniz.Matrix(GF2, [[1], [0]], cols=1)
        self.assertTrue(leibniz.check_morphism(
            leibniz.LinearMorphism(ab1, aff2, onto_e1)))
        found = leibniz.enumerate_xmods(ab1, aff2)
        self.assertTrue(found)
        for x in found:
            with self.subTest(x=x):
                self.assertNotEqual(onto_e1, x.boundary.matrix)
                _kernel, image = _linalg.kernel_image(x.boundary.matrix)
                self.assertTrue(leibniz.is_ideal(aff2, image))

    def test_every_crossed_module_is_valid(self):
        a2, aff2 = fixtures.a2(GF2), fixtures.aff2(GF2)
        for l1, l0 in ((a2, aff2), (aff2, a2), (aff2, aff2)):
            for x in leibniz.enumerate_xmods(l1, l0):
                with self.subTest(x=x):
                    self.assertTrue(leibniz.validate_xmod(x))

    def test_budget(self):
        ab2 = leibniz.abelian(GF2, 2)
        self.assertRaisesRegex(leibniz.BudgetExceeded,
                               "actions needs 256 candidates",
                               leibniz.enumerate_xmods, ab2, ab2,
                               budget=100)
        a2 = fixtures.a2(GF2)
        self.assertRaisesRegex(leibniz.BudgetExceeded, "boundaries",
                               leibniz.enumerate_xmods, a2, a2, budget=8)

    def test_field_mismatch(self):
        self.assertRaises(leibniz.FieldMismatch, leibniz.enumerate_xmods,
                          fixtures.a2(GF2), fixtures.a2(GF3))

    def test_enumerated_round_trips(self):
        algebras = (leibniz.enumerate_leibniz(1, 2)[1]
                    + leibniz.enumerate_leibniz(2, 2)[1])
        for l1, l0 in itertools.product(algebras, repeat=2):
            for x in leibniz.enumerate_xmods(l1, l0):
                with self.subTest(x=x):
                    _kernel, abelian = leibniz.kernel_of_boundary(x)
                    self.assertTrue(abelian)
                    self.assertTrue(
                        leibniz.roundtrip_eta_delta(x).is_bijective())
                    g = leibniz.delta(x)
                    self.assertTrue(leibniz.proposition_report(g))
                    self.assertTrue(
                        leibniz.roundtrip_delta_eta(g).is_bijective())


class RandomInvertibleTestCase(unittest.TestCase):

    @hypothesis.given(strat.sampled_from([Q, GF2, GF3]),
                      strat.randoms(use_true_random=False))
    @hypothesis.settings(
        max_examples=30, deadline=None,
        suppress_health_check=[hypothesis.HealthCheck.large_base_example])
    def test_invertible(self, field, rng):
        m = _oracle.random_invertible(3, field, rng)
        self.assertEqual(3, m.rank())
        self.assertEqual(field, m.field)
