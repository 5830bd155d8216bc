import unittest

import numpy as np
from sympy import ImmutableMatrix

from orbifold_fusion.exceptions import NonIntegralExponent, OddNorm
from orbifold_fusion.lattice.sublattice import Sublattice
from orbifold_fusion.signs.cocycle import build_cocycle, pi_sign, sign
from tests.factories.settings import a2_rhos, orbifold

EXAMPLES = ["a2-double", "an-dynkin:3", "an-dynkin:4", "neg-identity:[[2]]", "rank1-double:3", "perm-double:[[2,0],[0,2]]"]


def random_vectors(lattice: Sublattice, rng: np.random.RandomState, count: int):
    for _ in range(count):
        coords = rng.randint(-3, 4, size=lattice.rank).tolist()
        yield ImmutableMatrix(lattice.basis * ImmutableMatrix(lattice.rank, 1, coords))


class TestCocycle(unittest.TestCase):
    def test_norm_law(self):
        rng = np.random.RandomState(11)
        for builder in EXAMPLES:
            orb = orbifold(builder)
            qbar = orb.setting.Qbar
            for a in random_vectors(qbar, rng, 200):
                self.assertEqual(orb.cocycle(a, a), sign(int(qbar.norm(a)) // 2), builder)

    def test_commutator_law(self):
        rng = np.random.RandomState(12)
        for builder in EXAMPLES:
            orb = orbifold(builder)
            qbar = orb.setting.Qbar
            vectors = list(random_vectors(qbar, rng, 400))
            for a, b in zip(vectors[::2], vectors[1::2]):
                self.assertEqual(orb.cocycle(a, b) * orb.cocycle(b, a), sign(int(qbar.pair(a, b))), builder)

    def test_odd_norm(self):
        odd = Sublattice("odd", ImmutableMatrix([[1]]), ImmutableMatrix([[1]]))
        with self.assertRaises(OddNorm):
            build_cocycle(odd)


class TestEta(unittest.TestCase):
    def test_trivial_on_plus_lattice(self):
        rng = np.random.RandomState(13)
        for builder in EXAMPLES:
            orb = orbifold(builder)
            if orb.setting.L_plus.rank == 0:
                continue
            for v in random_vectors(orb.setting.L_plus, rng, 50):
                self.assertEqual(orb.eta(v), 1, builder)

    def test_defining_relation(self):
        rng = np.random.RandomState(14)
        for builder in EXAMPLES:
            orb = orbifold(builder)
            s = orb.setting
            vectors = list(random_vectors(s.Qbar, rng, 200))
            for a, b in zip(vectors[::2], vectors[1::2]):
                expected = orb.cocycle(a, b) * orb.cocycle(ImmutableMatrix(s.sigma * a), ImmutableMatrix(s.sigma * b))
                self.assertEqual(orb.eta(a + b) * orb.eta(a) * orb.eta(b), expected, builder)

    def test_a2_double_eta_is_trivial(self):
        orb = orbifold("a2-double")
        self.assertEqual(orb.eta.linear, (0, 0, 0, 0))


class TestPiSign(unittest.TestCase):
    def test_half_lattice_vector(self):
        orb = orbifold("a2-double")
        rho1, _ = a2_rhos()
        self.assertEqual(pi_sign(orb.setting.L_minus, 3 * rho1, 6 * rho1), 1)

    def test_non_integral(self):
        orb = orbifold("a2-double")
        rho1, _ = a2_rhos()
        with self.assertRaises(NonIntegralExponent):
            pi_sign(orb.setting.L_minus, rho1, rho1)


if __name__ == "__main__":
    unittest.main()
