import unittest

from fano import fermat, fibrations
from fano.eisenstein import EisensteinInt, ONE, ZERO, alpha_power
from fano.errors import NotInNS, ZeroForm
from fano.fermat import CurveLabel, DivisorClass
from fano.fibrations import LinearForm


class TestLinearForm(unittest.TestCase):

    def test_raises_for_wrong_length(self):
        with self.assertRaises(ValueError):
            LinearForm([1, 2])

    def test_renders_terms(self):
        self.assertEqual('x1 + (-1)*x2', str(LinearForm.difference(1, 2)))
        self.assertEqual('x4 + (1+w)*x5', str(LinearForm.difference(4, 5, 2)))
        self.assertEqual('0', str(LinearForm([0] * 5)))

    def test_norm_and_inner_product(self):
        first = LinearForm.difference(4, 5, 2)
        second = LinearForm.difference(4, 5, 1)
        self.assertEqual(2, first.norm_squared())
        self.assertEqual(EisensteinInt(1, 1), first.inner(second))

    def test_shifted_form(self):
        form = fibrations.shifted_form(EisensteinInt(2))
        self.assertEqual(EisensteinInt(-3, 2), form[1])
        self.assertEqual(ONE, form[0])


class TestMembership(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(fibrations.lambda_star_membership(LinearForm.difference(1, 2)))
        self.assertTrue(fibrations.lambda_star_membership(fibrations.lambda_multiple(3)))
        self.assertFalse(fibrations.lambda_star_membership(LinearForm([1, 0, 0, 0, 0])))

    def test_agrees_with_the_span_of_differences(self):
        for form in (LinearForm.difference(2, 5, 1), LinearForm([1, 1, 0, 0, 0]), LinearForm([1, 1, 1, 0, 0])):
            self.assertEqual(fibrations.lambda_star_membership(form), fibrations.span_membership(form))

    def test_random_forms_are_members(self):
        forms = fibrations.random_forms(7, 20)
        self.assertEqual(20, len(forms))
        self.assertTrue(all(form and fibrations.lambda_star_membership(form) for form in forms))

    def test_raises_for_zero_form(self):
        with self.assertRaises(ZeroForm):
            fibrations.fiber_intersections(LinearForm([0] * 5))

    def test_raises_outside_the_lattice(self):
        with self.assertRaises(NotInNS):
            fibrations.fiber_genus(LinearForm([1, 0, 0, 0, 0]))


class TestFibreClasses(unittest.TestCase):

    def test_intersections_of_x4_minus_x5(self):
        values = fibrations.fiber_intersections(LinearForm.difference(4, 5))
        self.assertEqual(4, values.curves[CurveLabel(4, 5, 0)])
        self.assertEqual(1, values.curves[CurveLabel(4, 5, 1)])
        self.assertEqual(0, values.curves[CurveLabel(1, 2, 0)])
        self.assertEqual(4, values.incidence)
        self.assertEqual(7, fibrations.fiber_genus(LinearForm.difference(4, 5)))

    def test_class_of_x4_minus_x5(self):
        fibre = fibrations.fiber_class_coordinates(LinearForm.difference(4, 5))
        self.assertTrue(fibre.numerically_equal(fermat.INCIDENCE - DivisorClass.curve(4, 5, 0)))
        self.assertEqual(0, fermat.pair(fibre, fibre))

    def test_incidence_fibres(self):
        self.assertEqual({(20, 9)}, set(fibrations.incidence_counts()))
        self.assertEqual(20, len(fibrations.sections(LinearForm.difference(1, 3, 2))))

    def test_pair_degree(self):
        first = LinearForm.difference(4, 5, 2)
        second = LinearForm.difference(4, 5, 1)
        self.assertEqual(3, fibrations.fiber_pair_degree(first, second))
        self.assertEqual(3, fibrations.exterior_pair_degree(first, second))
        self.assertEqual(0, fibrations.fiber_pair_degree(first, first))

    def test_curve_sum_is_twelve_times_norm(self):
        for form in fibrations.random_forms(11, 10):
            values = fibrations.fiber_intersections(form)
            self.assertEqual(12 * form.norm_squared(), sum(values.curves.values()))


class TestDegenerations(unittest.TestCase):

    def test_lambda_multiple(self):
        report = fibrations.lambda_fibration_report(1)
        self.assertEqual(10, report.genus)
        self.assertEqual([0, 0, 0], report.self_intersections)
        self.assertEqual([10, 10, 10], report.genera)
        self.assertTrue(report.components_contracted)
        self.assertTrue(report.equal_to_fibre)
        self.assertEqual(27, report.critical_points)

    def test_ten_curve_fibration(self):
        report = fibrations.ten_curve_report([0, 0, 0, 0, 0])
        self.assertEqual(0, report.self_intersection)
        self.assertEqual(16, report.genus)
        self.assertEqual(46, report.fibre_genus)
        self.assertTrue(report.components_contracted)
        self.assertTrue(report.fibre_is_three_times)

    def test_section_reports(self):
        witness = fibrations.section_report(alpha_power(2) - ONE)
        self.assertEqual((9, 9, 1), (witness.sections, witness.contracted, witness.e12))
        degenerate = fibrations.section_report(ZERO)
        self.assertEqual((9, 9, 4), (degenerate.sections, degenerate.contracted, degenerate.e12))

    def test_non_reduced_fibres(self):
        report = fibrations.non_reduced_report()
        self.assertTrue(report.contracted)
        self.assertEqual(30, report.cases)
        self.assertEqual('unverifiable', report.multiplicity)

    def test_combined_reports(self):
        reports = fibrations.corollary_reports(3)
        self.assertEqual(5, len(reports.lambda_fibrations))
        self.assertEqual(1, reports.connected_witness.e12)
        self.assertEqual(46, reports.ten_curve.fibre_genus)
        self.assertEqual(0, sum(reports.ten_curve.exponents) % 3)
        self.assertEqual(9, reports.sections.sections)


if __name__ == '__main__':
    unittest.main()
