import itertools
import unittest

from orbifold_fusion.exceptions import NotCentral, NotHalfLattice, SettingMismatch
from orbifold_fusion.fusion.qdim import sigma_orbits
from orbifold_fusion.twisted.characters import (
    c_chi,
    char_eval,
    char_exponent,
    prime,
    solve_char_equation,
    stabilizer_agrees,
    twist,
)
from tests.factories.settings import a2_betas, a2_character, a2_double, a2_rhos, orbifold


class TestA2DoubleCharacters(unittest.TestCase):
    def setUp(self):
        self.orb = a2_double()
        self.b1, self.b2 = a2_betas()

    def test_four_characters(self):
        self.assertEqual(len(self.orb.characters), 4)
        self.assertEqual(len({chi.name for chi in self.orb.characters}), 4)

    def test_value_table(self):
        for i, j in itertools.product((0, 1), repeat=2):
            chi = a2_character(self.orb, i, j)
            for c1, c2 in itertools.product((0, 1), repeat=2):
                value = char_eval(chi, c1 * self.b1 + c2 * self.b2)
                self.assertEqual(value, (-1) ** (c1 * j + c2 * i))

    def test_self_dual(self):
        for chi in self.orb.characters:
            self.assertEqual(prime(chi), chi)

    def test_twist_by_half_vectors(self):
        for i, j, b1, b2 in itertools.product((0, 1), repeat=4):
            mu = (b1 * self.b1 + b2 * self.b2) / 2
            twisted = twist(a2_character(self.orb, i, j), mu)
            self.assertEqual(twisted, a2_character(self.orb, (i + b1) % 2, (j + b2) % 2))

    def test_c_chi_on_half_vectors(self):
        for i, j, b1, b2 in itertools.product((0, 1), repeat=4):
            chi = a2_character(self.orb, i, j)
            mu = (b1 * self.b1 + b2 * self.b2) / 2
            expected = char_eval(chi, b1 * self.b1) * char_eval(chi, b2 * self.b2)
            self.assertEqual(c_chi(chi, mu), expected)

    def test_twist_by_dual_vectors(self):
        rho1, rho2 = a2_rhos()
        chi = a2_character(self.orb, 1, 0)
        for r, k, c1, c2 in itertools.product(range(3), range(3), (0, 1), (0, 1)):
            beta = c1 * self.b1 + c2 * self.b2
            twisted = twist(chi, r * rho1 + k * rho2)
            self.assertEqual(char_eval(twisted, beta), (-1) ** (r * c2 + k * c1) * char_eval(chi, beta))

    def test_stabilizer(self):
        self.assertTrue(stabilizer_agrees(self.orb.central))
        rho1, _ = a2_rhos()
        chi = self.orb.characters[0]
        solutions = set(solve_char_equation(chi, chi))
        self.assertEqual(solutions, {self.orb.setting.L_minus.reduce(k * rho1) for k in (0, 2, 4)})

    def test_not_central(self):
        rho1, _ = a2_rhos()
        with self.assertRaises(NotCentral):
            char_exponent(self.orb.characters[0], rho1)

    def test_not_half_lattice(self):
        rho1, _ = a2_rhos()
        with self.assertRaises(NotHalfLattice):
            c_chi(self.orb.characters[0], rho1)

    def test_setting_mismatch(self):
        other = orbifold("rank1-double:1")
        with self.assertRaises(SettingMismatch):
            solve_char_equation(self.orb.characters[0], other.characters[0])


class TestImaginaryCharacters(unittest.TestCase):
    def setUp(self):
        self.orb = orbifold("neg-identity:[[2]]")

    def test_fourth_roots(self):
        self.assertEqual(sorted(chi.exponents for chi in self.orb.characters), [(1,), (3,)])

    def test_prime_swaps(self):
        first, second = self.orb.characters
        self.assertEqual(prime(first), second)
        self.assertEqual(prime(second), first)

    def test_c_chi_is_a_sign(self):
        alpha = self.orb.setting.L_minus.basis
        for chi in self.orb.characters:
            self.assertIn(c_chi(chi, alpha / 2), (1, -1))


class TestSolutionCosets(unittest.TestCase):
    def test_solution_sets_have_equal_size(self):
        for builder in ("a2-double", "an-dynkin:3", "an-dynkin:4", "rank1-double:2", "neg-identity:[[2]]"):
            orb = orbifold(builder)
            for chi, psi in itertools.product(orb.characters, repeat=2):
                solutions = solve_char_equation(chi, psi)
                if solutions:
                    self.assertEqual(len(solutions), len(solve_char_equation(chi, chi)), builder)
                    self.assertEqual(len(sigma_orbits(orb, solutions)), orb.r_sigma.orbit_count, builder)

    def test_solutions_are_cosets_of_the_stabilizer(self):
        for builder in ("a2-double", "an-dynkin:3", "an-dynkin:4", "rank1-double:2", "neg-identity:[[2]]"):
            orb = orbifold(builder)
            lattice = orb.setting.L_minus
            for chi in orb.characters:
                stabilizer = set(solve_char_equation(chi, chi))
                self.assertIn(lattice.reduce(lattice.zero()), stabilizer, builder)
                for a, b in itertools.product(stabilizer, repeat=2):
                    self.assertIn(lattice.add(a, b), stabilizer, builder)
                    self.assertIn(lattice.negate(a), stabilizer, builder)
                for psi in orb.characters:
                    solutions = solve_char_equation(chi, psi)
                    if not solutions:
                        continue
                    self.assertEqual(len(solutions), len(stabilizer), builder)
                    for a, b in itertools.product(solutions, repeat=2):
                        self.assertIn(lattice.subtract(a, b), stabilizer, builder)

    def test_twist_and_prime_commute(self):
        orb = a2_double()
        rho1, rho2 = a2_rhos()
        for chi in orb.characters:
            for mu in (rho1, rho2, rho1 + rho2):
                self.assertEqual(prime(twist(chi, mu)), twist(prime(chi), mu))
                self.assertEqual(twist(twist(chi, mu), -mu), chi)


if __name__ == "__main__":
    unittest.main()
