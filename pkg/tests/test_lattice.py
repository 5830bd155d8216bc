import unittest

from sympy import ImmutableMatrix

from orbifold_fusion.exceptions import (
    BadParameter,
    ModulusMismatch,
    NotEven,
    NotInvolution,
    NotIsometry,
    NotPositiveDefinite,
    NotSymmetric,
)
from orbifold_fusion.lattice.setting import validate_setting
from orbifold_fusion.lattice.sublattice import dual_quotient
from tests.factories.settings import a2_double, a2_rhos, orbifold, vector


class TestValidateSetting(unittest.TestCase):
    def test_not_symmetric(self):
        with self.assertRaises(NotSymmetric):
            validate_setting([[2, 1], [0, 2]], [[1, 0], [0, 1]])

    def test_not_even(self):
        with self.assertRaises(NotEven):
            validate_setting([[1]], [[-1]])

    def test_not_positive_definite(self):
        with self.assertRaises(NotPositiveDefinite):
            validate_setting([[2, 3], [3, 2]], [[1, 0], [0, 1]])

    def test_not_isometry(self):
        with self.assertRaises(NotIsometry):
            validate_setting([[2, 0], [0, 4]], [[0, 1], [1, 0]])

    def test_not_involution(self):
        with self.assertRaises(NotInvolution):
            validate_setting([[2, -1], [-1, 2]], [[0, -1], [1, -1]])

    def test_shape_mismatch(self):
        with self.assertRaises(BadParameter):
            validate_setting([[2, -1], [-1, 2]], [[-1]])

    def test_valid(self):
        s = validate_setting([[2]], [[-1]], "A1")
        self.assertEqual(s.name, "A1")
        self.assertEqual(s.L_plus.rank, 0)
        self.assertEqual(s.L_minus.rank, 1)


class TestA2Double(unittest.TestCase):
    def setUp(self):
        self.orb = a2_double()
        self.s = self.orb.setting

    def test_even_core(self):
        self.assertEqual(self.s.even_core_index, 1)

    def test_eigenlattices(self):
        self.assertEqual(self.s.L_plus.rank, 2)
        self.assertEqual(self.s.L_minus.rank, 2)
        self.assertEqual(self.s.L_minus.gram.det(), 12)

    def test_discriminants(self):
        self.assertEqual(self.orb.plus_discriminant.invariant_factors, (2, 6))
        self.assertEqual(self.orb.minus_discriminant.invariant_factors, (2, 6))
        self.assertEqual(self.orb.core_discriminant.order, 9)

    def test_transversal(self):
        self.assertEqual(len(self.orb.transversal), 4)
        self.assertTrue(self.orb.transversal[0].is_zero)

    def test_m(self):
        self.assertEqual(self.orb.M.invariant_factors, (2, 2))
        rho1, rho2 = a2_rhos()
        members = set(self.orb.M.elements())
        self.assertIn(self.s.L_minus.reduce(3 * rho1), members)
        self.assertIn(self.s.L_minus.reduce(3 * rho2), members)

    def test_lambda_classes(self):
        self.assertEqual(len(self.orb.lambda_classes), 3)

    def test_sigma_acts_as_minus_one_on_minus_dual(self):
        rho1, _ = a2_rhos()
        lattice = self.s.L_minus
        self.assertEqual(lattice.reduce(self.s.sigma * rho1), lattice.reduce(5 * rho1))

    def test_partner_of_zero(self):
        zero = self.s.L_minus.reduce(self.s.L_minus.zero())
        self.assertTrue(self.orb.partner(zero).is_zero)

    def test_partner_pairs_integrally(self):
        for mu in self.orb.minus_cosets:
            lam = self.orb.partner(mu)
            self.assertTrue(self.s.Qbar.pairs_integrally(lam.vector + mu.vector))


class TestCosetArithmetic(unittest.TestCase):
    def setUp(self):
        self.lattice = a2_double().setting.L_minus

    def test_reduce_is_canonical(self):
        rho1, _ = a2_rhos()
        shifted = rho1 + ImmutableMatrix(self.lattice.basis[:, 0])
        self.assertEqual(self.lattice.reduce(rho1), self.lattice.reduce(shifted))

    def test_coordinates_in_unit_interval(self):
        for c in a2_double().minus_cosets:
            self.assertTrue(all(0 <= x < 1 for x in c.coords))

    def test_outside_span(self):
        with self.assertRaises(ModulusMismatch):
            self.lattice.reduce(vector(1, 0, 1, 0))

    def test_dual_coordinates_round_trip(self):
        for c in a2_double().minus_cosets:
            self.assertEqual(self.lattice.from_dual_coordinates(self.lattice.dual_coordinates(c)), c)

    def test_wrong_coordinate_count(self):
        with self.assertRaises(BadParameter):
            self.lattice.from_dual_coordinates([1])


class TestOtherSettings(unittest.TestCase):
    def test_a_n_even_core_index(self):
        for n in (2, 4, 6):
            s = orbifold("an-dynkin:%d" % n).setting
            self.assertEqual(s.even_core_index, 2)

    def test_a_n_odd_core_index(self):
        for n in (3, 5):
            self.assertEqual(orbifold("an-dynkin:%d" % n).setting.even_core_index, 1)

    def test_rank1_double_minus_discriminant(self):
        for k in (1, 2, 3):
            self.assertEqual(orbifold("rank1-double:%d" % k).minus_discriminant.order, 4 * k)

    def test_negative_identity(self):
        orb = orbifold("neg-identity:[[2]]")
        self.assertEqual(len(orb.transversal), 1)
        self.assertEqual(dual_quotient(orb.setting.L_minus).invariant_factors, (2,))
        self.assertEqual(len(orb.lambda_classes), 1)


if __name__ == "__main__":
    unittest.main()
