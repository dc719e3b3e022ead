import unittest

from fano.eisenstein import ALPHA, EisVector, apply_matrix, canonical_line_rep, matrix_product
from fano.group import (GENERATORS, TRANSPOSITIONS, MonomialMatrix, enumerate_group, invariant_hermitian_forms,
                        line_label, line_orbit, line_vector)


class TestMonomialMatrix(unittest.TestCase):

    def test_raises_for_non_permutations(self):
        with self.assertRaises(ValueError):
            MonomialMatrix((0, 0, 1, 2, 3))
        with self.assertRaises(ValueError):
            MonomialMatrix(range(5), (0, 0, 0))

    def test_group_membership_needs_unit_determinant_part(self):
        self.assertTrue(MonomialMatrix.diagonal((1, 1, 1, 0, 0)).in_group)
        self.assertFalse(MonomialMatrix.diagonal((1, 0, 0, 0, 0)).in_group)
        self.assertTrue(all(g.in_group for g in GENERATORS))

    def test_product_matches_matrix_product(self):
        g = GENERATORS[4] * TRANSPOSITIONS[0]
        h = TRANSPOSITIONS[2] * MonomialMatrix.diagonal((2, 0, 1, 0, 0))
        self.assertEqual(matrix_product(g.rows(), h.rows()), (g * h).rows())

    def test_apply_matches_rows(self):
        g = GENERATORS[4] * TRANSPOSITIONS[3] * TRANSPOSITIONS[1]
        v = EisVector([1, ALPHA, 2, 0, -1])
        self.assertEqual(apply_matrix(g.rows(), v), g.apply(v))

    def test_inverse(self):
        g = GENERATORS[4] * TRANSPOSITIONS[0] * TRANSPOSITIONS[3]
        self.assertEqual(MonomialMatrix.identity(), g * g.inverse())
        self.assertEqual(MonomialMatrix.identity(), g.inverse() * g)

    def test_action_on_lines(self):
        self.assertEqual((1, 2, 0), TRANSPOSITIONS[0].act_on_line(1, 2, 0))
        self.assertEqual((4, 5, 1), GENERATORS[4].act_on_line(4, 5, 0))
        self.assertEqual((1, 3, 2), TRANSPOSITIONS[1].act_on_line(1, 2, 2))


class TestLines(unittest.TestCase):

    def test_line_vector_and_label_agree(self):
        for i, j, beta in ((1, 2, 0), (2, 5, 1), (3, 4, 2)):
            self.assertEqual((i, j, beta), line_label(line_vector(i, j, beta)))

    def test_raises_for_vectors_that_are_not_lines(self):
        with self.assertRaises(ValueError):
            line_label(EisVector.basis(1))
        with self.assertRaises(ValueError):
            line_label(EisVector([1, 2, 0, 0, 0]))

    def test_orbit_has_thirty_lines(self):
        orbit = line_orbit(line_vector(1, 2, 0))
        self.assertEqual(30, len(orbit))
        self.assertIn(canonical_line_rep(line_vector(4, 5, 2) * ALPHA), orbit)


class TestGroup(unittest.TestCase):

    def test_order(self):
        self.assertEqual(9720, len(enumerate_group()))

    def test_diagonal_subgroup(self):
        identity = tuple(range(5))
        self.assertEqual(81, sum(1 for g in enumerate_group() if g.perm == identity))

    def test_elements_are_in_group(self):
        self.assertTrue(all(g.in_group for g in enumerate_group()))

    def test_invariant_hermitian_forms_are_scalar(self):
        forms = invariant_hermitian_forms()
        self.assertEqual(1, forms.dimension)
        h = forms.basis[0]
        self.assertTrue(all(not h[p][q] for p in range(5) for q in range(5) if p != q))
        self.assertEqual(1, len({h[p][p] for p in range(5)}))

    def test_permutations_leave_two_invariant_forms(self):
        self.assertEqual(2, invariant_hermitian_forms(TRANSPOSITIONS).dimension)


if __name__ == '__main__':
    unittest.main()
