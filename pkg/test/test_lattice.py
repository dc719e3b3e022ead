import math
import unittest
from fractions import Fraction

from fano.errors import DegeneratePairing, NotSublattice
from fano.lattice import (CubePairing, IntegralSolver, Lattice, TwoForm, determinant, generated_lattice_discriminant,
                          integral_coordinates, integral_preimage, pfaffian, quotient_invariants, rank,
                          rational_kernel, signature, smith_normal_form, sublattice_index, wedge_top_coefficient)

A2 = [[2, -1], [-1, 2]]


def symplectic(dim):
    rows = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        rows[k][k + 1] = 1
        rows[k + 1][k] = -1
    return TwoForm(rows)


class TestLinearAlgebra(unittest.TestCase):

    def test_rank_and_determinant(self):
        self.assertEqual(1, rank([[1, 2], [2, 4]]))
        self.assertEqual(3, determinant(A2))
        self.assertEqual(Fraction(1, 4), determinant([[Fraction(1, 2), 0], [0, Fraction(1, 2)]]))

    def test_rational_kernel(self):
        kernel = rational_kernel([[1, 1, 0]], 3)
        self.assertEqual(2, len(kernel))
        for v in kernel:
            self.assertEqual(0, v[0] + v[1])

    def test_signature_counts_eigenvalue_signs(self):
        self.assertEqual((2, 0, 0), signature(A2))
        self.assertEqual((1, 1, 0), signature([[0, 1], [1, 0]]))
        self.assertEqual((1, 0, 1), signature([[1, 0], [0, 0]]))
        self.assertEqual((0, 2, 1), signature([[-2, 1, 0], [1, -2, 0], [0, 0, 0]]))


class TestLattice(unittest.TestCase):

    def test_membership(self):
        lattice = Lattice([[2, 0], [0, 2], [2, 2]])
        self.assertEqual(2, lattice.rank)
        self.assertIn((2, 4), lattice)
        self.assertNotIn((1, 0), lattice)

    def test_equality_ignores_the_generators(self):
        self.assertEqual(Lattice([[1, 0], [0, 1]]), Lattice([[1, 1], [1, 2]]))
        self.assertNotEqual(Lattice([[1, 0], [0, 1]]), Lattice([[2, 0], [0, 1]]))

    def test_index_in_a_larger_lattice(self):
        self.assertEqual(4, Lattice([[2, 0], [0, 2]]).index_in(Lattice([[1, 0], [0, 1]])))

    def test_raises_for_empty_lattice_without_dimension(self):
        with self.assertRaises(ValueError):
            Lattice([])


class TestSmithForm(unittest.TestCase):

    def test_invariant_factors(self):
        self.assertEqual((2, 6, 12), smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).invariants)

    def test_zeros_come_last(self):
        self.assertEqual((3, 0), smith_normal_form([[0, 0], [0, 3]]).invariants)

    def test_quotient_invariants(self):
        self.assertEqual((3, 3), quotient_invariants([[3, 0], [0, 3]], [[1, 0], [0, 1]]))
        self.assertEqual((), quotient_invariants([[1, 1], [0, 1]], [[1, 0], [0, 1]]))
        self.assertIsNone(quotient_invariants([[1, 0]], [[1, 0], [0, 1]]))

    def test_sublattice_index(self):
        self.assertEqual(6, sublattice_index([[2, 0], [0, 3]], [[1, 0], [0, 1]]))
        self.assertEqual(math.inf, sublattice_index([[1, 0]], [[1, 0], [0, 1]]))

    def test_raises_when_not_a_sublattice(self):
        with self.assertRaises(NotSublattice):
            sublattice_index([[1, 0]], [[2, 0], [0, 1]])


class TestDiscriminant(unittest.TestCase):

    def test_independent_generators(self):
        self.assertEqual(3, generated_lattice_discriminant(A2))
        self.assertEqual(1, generated_lattice_discriminant([[0, 1], [1, 0]]))

    def test_dependent_generators_are_quotiented(self):
        # a, b and a + b in A2
        self.assertEqual(3, generated_lattice_discriminant([[2, -1, 1], [-1, 2, 1], [1, 1, 2]]))

    def test_raises_for_non_symmetric_gram(self):
        with self.assertRaises(ValueError):
            generated_lattice_discriminant([[1, 2], [3, 4]])

    def test_raises_for_degenerate_pairing(self):
        with self.assertRaises(DegeneratePairing):
            generated_lattice_discriminant([[0, 0], [0, 0]])


class TestIntegralCoordinates(unittest.TestCase):

    def test_finds_an_integral_combination(self):
        rows = [[1, 0], [0, 1], [1, 1]]
        x = integral_coordinates(rows, [2, 3])
        self.assertEqual([2, 3], [sum(c * row[k] for c, row in zip(x, rows)) for k in range(2)])

    def test_uses_the_non_pivot_rows(self):
        rows = [[2, 0], [0, 2], [1, 1]]
        x = integral_coordinates(rows, [1, 1])
        self.assertEqual([1, 1], [sum(c * row[k] for c, row in zip(x, rows)) for k in range(2)])

    def test_raises_outside_the_lattice(self):
        with self.assertRaises(NotSublattice):
            integral_coordinates([[2, 0], [0, 2]], [1, 0])
        with self.assertRaises(NotSublattice):
            integral_coordinates([[1, 0]], [0, 1])

    def test_solver_can_be_reused(self):
        solver = IntegralSolver([[3, 0], [0, 1]])
        self.assertEqual([2, 5], solver.solve([6, 5]))
        self.assertEqual([-1, 0], solver.solve([-3, 0]))

    def test_integral_preimage(self):
        basis = integral_preimage([[2, 0], [0, 3]])
        self.assertEqual(Lattice([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]), Lattice(basis))


class TestTwoForm(unittest.TestCase):

    def test_raises_for_non_alternating_matrices(self):
        with self.assertRaises(ValueError):
            TwoForm([[0, 1], [1, 0]])
        with self.assertRaises(ValueError):
            TwoForm([[1, 0], [0, 0]])
        with self.assertRaises(ValueError):
            TwoForm([[0, 1]])

    def test_upper_triangle_vector(self):
        form = TwoForm.plane(4, 1, 3, 2)
        self.assertEqual((0, 0, 0, 0, 2, 0), form.vector())

    def test_arithmetic(self):
        f = TwoForm.plane(4, 0, 1)
        g = TwoForm.plane(4, 2, 3)
        self.assertEqual(symplectic(4), f + g)
        self.assertEqual(f, (f + g) - g)
        self.assertEqual(2 * f, f + f)
        self.assertEqual(-f, TwoForm.plane(4, 1, 0))

    def test_pfaffian_squares_to_determinant(self):
        rows = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
        # af - be + cd
        self.assertEqual(8, pfaffian(rows))
        self.assertEqual(64, determinant(rows))

    def test_pfaffian_of_symplectic_form(self):
        self.assertEqual(1, symplectic(6).pfaffian())
        self.assertEqual(-1, pfaffian(TwoForm.plane(2, 1, 0)))

    def test_raises_for_odd_pfaffian(self):
        with self.assertRaises(ValueError):
            pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])

    def test_wedge_of_equal_forms(self):
        theta = symplectic(6)
        self.assertEqual(6 * theta.pfaffian(), wedge_top_coefficient([theta, theta, theta]))
        self.assertEqual(1, wedge_top_coefficient([TwoForm.plane(4, 0, 1), TwoForm.plane(4, 2, 3)]))

    def test_raises_for_wrong_number_of_forms(self):
        with self.assertRaises(ValueError):
            wedge_top_coefficient([symplectic(4)])

    def test_cube_pairing_matches_wedge(self):
        theta = symplectic(6)
        pairing = CubePairing(theta)
        f = TwoForm.plane(6, 0, 1)
        g = TwoForm.plane(6, 2, 3)
        h = TwoForm([[0, 1, 0, 2, 0, 0], [-1, 0, 3, 0, 0, 1], [0, -3, 0, 1, 0, 0],
                     [-2, 0, -1, 0, 4, 0], [0, 0, 0, -4, 0, 1], [0, -1, 0, 0, -1, 0]])
        self.assertEqual(1, pairing(f, g))
        self.assertEqual(0, pairing(f, f))
        self.assertEqual(wedge_top_coefficient([theta, f, h]), pairing(f, h))
        self.assertEqual(pairing(h, g), pairing(g, h))


if __name__ == '__main__':
    unittest.main()
