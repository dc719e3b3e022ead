import unittest
from fractions import Fraction

from fano import albanese
from fano.albanese import ALPHA, W, EndoMatrix, PeriodLattice
from fano.eisenstein import EisVector, LAMBDA, alpha_power, as_rational
from fano.errors import NotInNS, UnknownCandidate, ZeroVector
from fano.fibrations import LinearForm
from fano.group import line_vector
from fano.lattice import Lattice, pfaffian, wedge_top_coefficient


def spans(vectors):
    return Lattice([v.real_coordinates() for v in vectors], dim=10)


class TestOmega(unittest.TestCase):

    def test_omega_is_normalized(self):
        e = EisVector.basis(3)
        self.assertEqual(1, albanese.omega(e, e * ALPHA))
        self.assertEqual(-1, albanese.omega(e * ALPHA, e))
        self.assertEqual(0, albanese.omega(e, EisVector.basis(4)))

    def test_extra_generator_is_not_integral(self):
        self.assertEqual(Fraction(5, 3), albanese.extra_generator_omega())


class TestCandidates(unittest.TestCase):

    def test_raises_for_unknown_candidate(self):
        with self.assertRaises(UnknownCandidate):
            albanese.candidate('L2')

    def test_raises_for_low_rank(self):
        with self.assertRaises(ValueError):
            PeriodLattice('line', [EisVector.basis(1), EisVector.basis(1) * ALPHA])

    def test_chain_structure(self):
        structure = albanese.candidate_structure()
        self.assertTrue(structure.chain)
        self.assertTrue(structure.distinct)
        self.assertEqual(9, structure.top_index)
        self.assertEqual([3, 3], structure.quotient)
        self.assertEqual([3], structure.intermediate_indices)

    def test_lambda_zero_is_the_congruence_lattice(self):
        self.assertEqual(albanese.congruence_lattice(), albanese.candidate('L0'))
        self.assertIn(EisVector.basis(1) * LAMBDA, albanese.candidate('L0'))
        self.assertNotIn(EisVector.basis(1), albanese.candidate('L0'))

    def test_omega_on_lambda_zero(self):
        form, integral = albanese.omega_on_lattice(albanese.candidate('L0'))
        self.assertTrue(integral)
        self.assertEqual(9, form.determinant())
        self.assertEqual(3, abs(form.pfaffian()))

    def test_split_lattice_is_unimodular(self):
        form, integral = albanese.omega_on_lattice(albanese.split_lattice())
        self.assertTrue(integral)
        self.assertEqual(1, form.determinant())
        self.assertEqual(albanese.split_lattice(), albanese.candidate('Lw-1'))
        self.assertTrue(albanese.split_witness(albanese.candidate('Lw-1')))
        self.assertFalse(albanese.split_witness(albanese.candidate('Lw2')))

    def test_omega_is_not_integral_on_the_largest_lattice(self):
        self.assertFalse(albanese.omega_on_lattice(albanese.candidate('L'))[1])

    def test_galois_action(self):
        self.assertEqual('Lw', albanese.galois_substitute(albanese.candidate('L1')))
        self.assertEqual('L1', albanese.galois_substitute(albanese.candidate('Lw')))
        for name in ('L0', 'Lw2', 'Lw-1', 'L'):
            self.assertEqual(name, albanese.galois_substitute(albanese.candidate(name)))

    def test_lattice_report(self):
        report = albanese.lattice_report('L0')
        self.assertEqual('Λ₀', report.display_name)
        self.assertEqual('9', report.determinant)
        self.assertEqual(10, len(report.omega))
        self.assertTrue(report.integral)


class TestH1(unittest.TestCase):

    def test_elimination_selects_lambda_alpha_squared(self):
        result = albanese.elimination()
        self.assertEqual('Lw2', result.selected)
        self.assertEqual(['Lw2'], result.survivors)
        self.assertEqual({'L', 'L0', 'Lw-1', 'L1', 'Lw'}, {step.name for step in result.steps})

    def test_select_h1(self):
        lattice = albanese.select_H1()
        self.assertEqual(albanese.candidate('Lw2'), lattice)
        self.assertEqual(1, abs(albanese.omega_on_lattice(lattice)[0].pfaffian()))

    def test_presentations_agree(self):
        self.assertEqual(albanese.h1_presentation(), albanese.candidate('Lw2'))
        self.assertEqual(albanese.h1_presentation_basis(), albanese.h1().basis)

    def test_line_of_a_curve(self):
        direction = line_vector(1, 2, 1)
        found = albanese.line_intersection(albanese.h1(), direction)
        self.assertEqual(spans([direction, direction * ALPHA]), spans(found))

    def test_line_of_the_all_ones_vector(self):
        direction = W * (as_rational(alpha_power(2)) / LAMBDA)
        found = albanese.line_intersection(albanese.h1(), W)
        self.assertEqual(spans([direction, direction * (ALPHA * 3)]), spans(found))

    def test_raises_for_zero_direction(self):
        with self.assertRaises(ZeroVector):
            albanese.line_intersection(albanese.h1(), EisVector.zero())


class TestEndomorphisms(unittest.TestCase):

    def test_non_symmetric_matrix_is_rejected(self):
        self.assertFalse(EndoMatrix.scalar(alpha_power(1)).is_symmetric)
        with self.assertRaises(NotInNS):
            albanese.chern_of_endomorphism(EndoMatrix.scalar(alpha_power(1)))

    def test_raises_for_wrong_shape(self):
        with self.assertRaises(ValueError):
            EndoMatrix([[1, 0], [0, 1]])

    def test_theta_is_principal(self):
        theta = albanese.theta_form()
        self.assertEqual(1, abs(pfaffian(theta)))
        self.assertEqual(2 * theta, albanese.chern_of_endomorphism(EndoMatrix.scalar(2)))
        self.assertEqual(20, albanese.q_theta_pairing(theta, theta))

    def test_change_to_u_basis(self):
        change = albanese.u_change_of_basis()
        for matrix in albanese.symmetric_endomorphisms()[:5]:
            self.assertEqual(matrix * change, change * matrix.in_u_basis())
        self.assertEqual(EndoMatrix.scalar(ALPHA), EndoMatrix.scalar(ALPHA).in_u_basis())

    def test_u_gram(self):
        gram = albanese.u_gram()
        self.assertTrue(gram.is_symmetric)
        self.assertEqual(2, gram[0][0])
        self.assertEqual(-1, gram[0][1])
        self.assertEqual(0, gram[0][2])

    def test_self_adjoint_in_u_basis(self):
        self.assertTrue(all(albanese.self_adjoint_in_u_basis(m) for m in albanese.symmetric_endomorphisms()))
        self.assertFalse(albanese.self_adjoint_in_u_basis(EndoMatrix.scalar(ALPHA)))
        skew = EndoMatrix([[int(q == p + 1) - int(p == q + 1) for q in range(5)] for p in range(5)])
        self.assertFalse(albanese.self_adjoint_in_u_basis(skew))

    def test_wedge_of_theta(self):
        theta = albanese.theta_form()
        top = wedge_top_coefficient([theta] * 5)
        self.assertEqual(1, albanese.orientation() * top / 120)

    def test_wedge_of_theta_and_fibres(self):
        theta = albanese.theta_form()
        first = albanese.pullback_form(LinearForm.difference(4, 5, 2).coeffs)
        second = albanese.pullback_form(LinearForm.difference(4, 5, 1).coeffs)
        top = wedge_top_coefficient([theta] * 3 + [first, second])
        self.assertEqual(3, albanese.orientation() * top / 6)

    def test_symmetric_endomorphisms(self):
        matrices = albanese.symmetric_endomorphisms()
        self.assertEqual(25, len(matrices))
        self.assertTrue(all(m.is_symmetric for m in matrices))
        self.assertTrue(all(m.preserves(albanese.h1()) for m in matrices))

    def test_abelian_neron_severi(self):
        report = albanese.abelian_ns_report()
        self.assertEqual(25, report.rank)
        self.assertTrue(report.independent)
        self.assertEqual(2 ** 2 * 3 ** 18, report.discriminant)
        self.assertEqual(20, report.theta_square)


class TestPullback(unittest.TestCase):

    def test_raises_for_forms_outside_the_dual(self):
        with self.assertRaises(NotInNS):
            albanese.pullback_form([1, 0, 0, 0, 0])

    def test_fibre_classes(self):
        first = albanese.pullback_form(LinearForm.difference(4, 5, 2).coeffs)
        second = albanese.pullback_form(LinearForm.difference(4, 5, 1).coeffs)
        self.assertEqual(0, albanese.q_theta_pairing(first, first))
        self.assertEqual(3, albanese.q_theta_pairing(first, second))

    def test_pullback_image(self):
        report = albanese.pullback_image_check()
        self.assertEqual(25, report.rank)
        self.assertEqual(2, report.index)
        self.assertEqual(4 * 3 ** 18, report.discriminant)
        self.assertEqual(3 ** 18, report.ns_discriminant)


class TestSymmetry(unittest.TestCase):

    def test_omega_is_invariant(self):
        self.assertTrue(albanese.omega_invariant_under_generators())

    def test_candidates_are_stable(self):
        self.assertTrue(albanese.candidates_group_stable())


if __name__ == '__main__':
    unittest.main()
