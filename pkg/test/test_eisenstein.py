import unittest
from fractions import Fraction

from fano.eisenstein import (ALPHA, EisensteinInt, EisensteinRational, EisVector, LAMBDA, ONE, ZERO, alpha_power,
                             apply_matrix, canonical_line_rep, divisible_by_lambda, eis_div_exact, eis_mul, eis_norm,
                             hermitian_inner, invert_matrix, matrix_product)
from fano.errors import NotDivisible, ZeroVector


class TestEisensteinInt(unittest.TestCase):

    def test_alpha_is_a_cube_root_of_unity(self):
        self.assertEqual(ONE, ALPHA ** 3)
        self.assertEqual(EisensteinInt(-1, -1), ALPHA * ALPHA)
        self.assertEqual(ZERO, ONE + ALPHA + ALPHA * ALPHA)

    def test_multiplication_follows_alpha_squared_rule(self):
        x, y = EisensteinInt(2, 3), EisensteinInt(-1, 4)
        # (ac - bd) + (ad + bc - bd)α
        self.assertEqual(EisensteinInt(-2 - 12, 8 - 3 - 12), eis_mul(x, y))
        self.assertEqual(eis_mul(x, y), x * y)

    def test_conjugate_and_norm(self):
        self.assertEqual(EisensteinInt(2, -1), EisensteinInt(3, 1).conjugate())
        self.assertEqual(ALPHA * ALPHA, ALPHA.conjugate())
        self.assertEqual(3, eis_norm(LAMBDA))
        self.assertEqual(7, eis_norm(EisensteinInt(3, 1)))
        self.assertEqual(EisensteinInt(3), LAMBDA * LAMBDA.conjugate())

    def test_alpha_power_is_periodic(self):
        self.assertEqual(alpha_power(1), alpha_power(4))
        self.assertEqual(alpha_power(2), alpha_power(-1))
        self.assertEqual(ONE, alpha_power(0))

    def test_exact_division(self):
        self.assertEqual(EisensteinInt(2, 1), eis_div_exact(EisensteinInt(3), LAMBDA))
        self.assertEqual(ALPHA, eis_div_exact(ALPHA * LAMBDA, LAMBDA))

    def test_raises_when_division_is_not_exact(self):
        with self.assertRaises(NotDivisible):
            eis_div_exact(EisensteinInt(2), LAMBDA)
        with self.assertRaises(NotDivisible):
            eis_div_exact(ONE, ZERO)

    def test_divisibility_by_lambda_matches_norm(self):
        self.assertTrue(divisible_by_lambda(EisensteinInt(2, 1)))
        self.assertTrue(divisible_by_lambda(ZERO))
        self.assertFalse(divisible_by_lambda(EisensteinInt(1, 1)))
        self.assertFalse(divisible_by_lambda(EisensteinInt(2)))

    def test_renders_compactly(self):
        self.assertEqual('1-w', str(LAMBDA))
        self.assertEqual('-2*w', str(EisensteinInt(0, -2)))
        self.assertEqual('1+w', str(EisensteinInt(1, 1)))
        self.assertEqual('0', str(ZERO))
        self.assertEqual('w', str(ALPHA))


class TestEisensteinRational(unittest.TestCase):

    def test_is_kept_in_lowest_terms(self):
        x = EisensteinRational(EisensteinInt(2, 4), 6)
        self.assertEqual(EisensteinInt(1, 2), x.num)
        self.assertEqual(3, x.den)
        self.assertEqual('(1+2*w)/3', str(x))
        self.assertFalse(x.is_integral)

    def test_negative_denominators_are_normalized(self):
        self.assertEqual(EisensteinRational(EisensteinInt(-1, 0), 2), EisensteinRational(EisensteinInt(1, 0), -2))

    def test_rational_and_alpha_parts(self):
        x = EisensteinRational(EisensteinInt(5, -2), 3)
        self.assertEqual(Fraction(5, 3), x.rational_part)
        self.assertEqual(Fraction(-2, 3), x.alpha_part)

    def test_order_three_membership(self):
        self.assertTrue(EisensteinRational(EisensteinInt(1, 3)).in_order_three)
        self.assertFalse(EisensteinRational(EisensteinInt(1, 1)).in_order_three)

    def test_division_inverts_multiplication(self):
        x = EisensteinRational(EisensteinInt(3, -7), 2)
        y = EisensteinRational(EisensteinInt(1, 5))
        self.assertEqual(x, (x * y) / y)

    def test_to_integer_raises_for_fractions(self):
        with self.assertRaises(NotDivisible):
            EisensteinRational(ONE, 3).to_integer()


class TestEisVector(unittest.TestCase):

    def test_requires_five_coordinates(self):
        with self.assertRaises(ValueError):
            EisVector([1, 2, 3])

    def test_real_coordinates_round_trip(self):
        v = EisVector([EisensteinRational(EisensteinInt(1, 2), 3), ALPHA, 0, -1, EisensteinInt(4, -4)])
        self.assertEqual(v, EisVector.from_real_coordinates(v.real_coordinates()))
        self.assertEqual((1, 0, 0, 0, 0, 0, 0, 0, 0, 0), EisVector.basis(1).real_coordinates())

    def test_hermitian_inner_of_scaled_all_ones_vector(self):
        w = EisVector([1] * 5)
        scaled = w / (EisensteinRational(ALPHA) - 1)
        value = hermitian_inner(scaled, scaled * ALPHA)
        self.assertEqual(EisensteinRational(EisensteinInt(-5, -5), 3), value)
        self.assertEqual(Fraction(-5, 3), value.alpha_part)

    def test_hermitian_inner_is_conjugate_symmetric(self):
        u = EisVector([1, ALPHA, 2, 0, LAMBDA])
        v = EisVector([EisensteinInt(3, 1), 0, 1, ALPHA, 1])
        self.assertEqual(hermitian_inner(u, v), hermitian_inner(v, u).conjugate())

    def test_canonical_line_rep_starts_with_one(self):
        v = EisVector([0, ALPHA, -ONE, 0, 0])
        self.assertEqual(EisVector([0, 1, -ALPHA * ALPHA, 0, 0]), canonical_line_rep(v))
        self.assertEqual(canonical_line_rep(v), canonical_line_rep(v * LAMBDA))

    def test_raises_for_zero_line(self):
        with self.assertRaises(ZeroVector):
            canonical_line_rep(EisVector.zero())


class TestMatrices(unittest.TestCase):

    def test_inverse_gives_identity(self):
        rows = [[1, ALPHA, 0, 0, 0],
                [0, 1, LAMBDA, 0, 0],
                [0, 0, 2, 0, 1],
                [1, 0, 0, 1, 0],
                [0, 0, 0, ALPHA, 3]]
        identity = [[EisensteinRational(int(p == q)) for q in range(5)] for p in range(5)]
        self.assertEqual(identity, matrix_product(rows, invert_matrix(rows)))

    def test_inverse_entries_are_exact(self):
        self.assertEqual([[EisensteinRational(EisensteinInt(2, 1), 3)]], invert_matrix([[LAMBDA]]))
        inverse = invert_matrix([[ALPHA, 0], [0, 2]])
        self.assertEqual([[alpha_power(2), 0], [0, Fraction(1, 2)]], inverse)
        self.assertEqual([[Fraction(-1, 3), Fraction(2, 3)], [Fraction(2, 3), Fraction(-1, 3)]],
                         invert_matrix([[1, 2], [2, 1]]))

    def test_raises_for_non_square_matrices(self):
        with self.assertRaises(ValueError):
            invert_matrix([[1, 0, 0], [0, 1, 0]])

    def test_raises_for_singular_matrices(self):
        with self.assertRaises(ValueError):
            invert_matrix([[1, ALPHA], [ALPHA, ALPHA * ALPHA]])

    def test_apply_matrix(self):
        swap = [[int(q == (1 - p if p < 2 else p)) for q in range(5)] for p in range(5)]
        self.assertEqual(EisVector.basis(2), apply_matrix(swap, EisVector.basis(1)))


if __name__ == '__main__':
    unittest.main()
