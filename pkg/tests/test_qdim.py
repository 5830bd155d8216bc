import unittest

from orbifold_fusion.catalog.enumeration import enumerate_paper_labels
from orbifold_fusion.fusion.qdim import QDim, global_dimension, qdim, sigma_fixed_discriminant
from tests.factories.settings import a2_double, a2_rhos, orbifold


class TestQDim(unittest.TestCase):
    def test_rendering(self):
        self.assertEqual(str(QDim(4)), "2")
        self.assertEqual(str(QDim(1)), "1")
        self.assertEqual(str(QDim(3)), "sqrt(3)")

    def test_a2_double(self):
        orb = a2_double()
        inventory = enumerate_paper_labels(orb)
        self.assertEqual(str(qdim(orb, inventory.type1[0])), "2")
        self.assertEqual(str(qdim(orb, inventory.type2[0])), "1")
        self.assertEqual(str(qdim(orb, inventory.twisted[0])), "sqrt(3)")

    def test_a2_double_r_sigma(self):
        orb = a2_double()
        rho1, _ = a2_rhos()
        lattice = orb.setting.L_minus
        r = orb.r_sigma
        self.assertEqual((r.orbit_count, r.m_count), (2, 1))
        orbits = {frozenset(o) for o in r.orbits}
        self.assertEqual(orbits, {frozenset([lattice.reduce(0 * rho1)]), frozenset([lattice.reduce(2 * rho1), lattice.reduce(4 * rho1)])})

    def test_paper_global_dimension(self):
        orb = a2_double()
        self.assertEqual(global_dimension(orb, enumerate_paper_labels(orb).labels), 144)


class TestExampleFamilies(unittest.TestCase):
    def test_rank1_doubles(self):
        for k in range(1, 7):
            orb = orbifold("rank1-double:%d" % k)
            self.assertEqual(orb.r_sigma.twisted_square, 2 * k)
            self.assertEqual(orb.r_sigma.orbit_count, k + 1)

    def test_permutation_double_of_a2(self):
        orb = orbifold("perm-double:[[2,-1],[-1,2]]")
        self.assertEqual(orb.r_sigma.twisted_square, 3)
        self.assertEqual(orb.r_sigma.m_count, 1)

    def test_permutation_double_without_odd_rows(self):
        orb = orbifold("perm-double:[[2,0],[0,2]]")
        self.assertNotEqual(orb.r_sigma.m_count, 1)

    def test_a_n_odd(self):
        # n = 2l + 1
        for n in (3, 5, 7, 9):
            l = (n - 1) // 2
            r = orbifold("an-dynkin:%d" % n).r_sigma
            self.assertEqual(r.twisted_square, l + 1, n)
            self.assertEqual(r.orbit_count, l - l // 2 + 1, n)
            self.assertEqual(r.m_count, 2 if l % 2 else 1, n)

    def test_a_n_even(self):
        # n = 2l
        for n in (2, 4, 6, 8):
            l = n // 2
            orb = orbifold("an-dynkin:%d" % n)
            self.assertEqual(len(orb.transversal), 2 ** (l - 1), n)
            self.assertEqual(orb.r_sigma.twisted_square, 2 * l + 1, n)
            self.assertEqual(orb.r_sigma.orbit_count, l + 1, n)
            self.assertEqual(orb.r_sigma.m_count, 1, n)

    def test_sigma_fixed_discriminant(self):
        self.assertEqual(sigma_fixed_discriminant(a2_double()), 3)
        self.assertEqual(sigma_fixed_discriminant(orbifold("neg-identity:[[2]]")), 2)
        self.assertEqual(sigma_fixed_discriminant(orbifold("an-dynkin:3")), 2)


if __name__ == "__main__":
    unittest.main()
