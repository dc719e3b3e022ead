definition = {
	"fib.membership_examples": {
		"description": "x1 - x2 and (1 - w)x1 define fibrations, x1 does not",
		"paper_anchor": "Section 3.2.1, definition of Lambda_A^*",
		"expected": [True, True, False],
	},
	"fib.membership_agrees": {
		"description": "the sum test agrees with membership in the span of the x_i - b x_j on seeded forms",
		"paper_anchor": "Section 3.2.1, definition of Lambda_A^*",
		"expected": True,
	},
	"fib.x4x5_intersections": {
		"description": "F.E45^1, F.E45^w, F.E12^1 and F.C for x4 - x5",
		"paper_anchor": "Theorem 'toutes les fibrations' 1 and 2",
		"expected": [4, 1, 0, 4],
	},
	"fib.incidence_fibre_class": {
		"description": "the fibre of x_i - b^2 x_j is C - E_ij^b, for the 30 forms",
		"paper_anchor": "Theorem 'toutes les fibrations' 1 and 2",
		"expected": True,
	},
	"fib.incidence_counts": {
		"description": "(sections, contracted curves) for each fibration x_i - b^2 x_j",
		"paper_anchor": "Theorem 'toutes les fibrations' 1",
		"expected": [[20, 9]],
	},
	"fib.lambda_genus": {
		"description": "the fibres of (1 - w)x_i have genus 10",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 10,
	},
	"fib.lambda_singular_fibres": {
		"description": "the three B-sums have square 0, genus 10, contracted components and the fibre class",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": True,
	},
	"fib.critical_points": {
		"description": "intersection points between contracted curves of (1 - w)x_i",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": [27],
	},
	"fib.ten_curve_square": {
		"description": "D^2 for the ten-curve divisor of a seeded fibration (1 - w) sum a_i x_i",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 0,
	},
	"fib.ten_curve_genus": {
		"description": "the ten-curve divisor has genus 16",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 16,
	},
	"fib.ten_curve_fibre_genus": {
		"description": "the fibres of (1 - w) sum a_i x_i have genus 46",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 46,
	},
	"fib.ten_curve_stein": {
		"description": "the ten curves are contracted and F = 3D numerically",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": True,
	},
	"fib.shifted_witness": {
		"description": "sections, contracted curves and F.E12^1 for x1 - (1 + (1-w)(w^2-1))x2",
		"paper_anchor": "Closing corollary of Section 3.2.1, sections of gamma_l",
		"expected": [9, 9, 1],
	},
	"fib.shifted_degenerate": {
		"description": "sections, contracted curves and F.E12^1 for x1 - x2",
		"paper_anchor": "Closing corollary of Section 3.2.1, sections of gamma_l",
		"expected": [9, 9, 4],
	},
	"fib.non_reduced": {
		"description": "E_ij^(b^2) is contracted by (1 - w)(x_i + b x_j)",
		"paper_anchor": "Corollary 'diviseur somme' (multiplicity not verified)",
		"expected": True,
	},
	"fib.pair_degree_example": {
		"description": "F.F' = 3 for x4 - w^2 x5 and x4 - w x5",
		"paper_anchor": "Theorem 'toutes les fibrations' 3",
		"expected": 3,
	},
	"fib.pair_degree_exterior": {
		"description": "the closed formula for F.F' agrees with the integral over A on seeded pairs",
		"paper_anchor": "Theorem 'toutes les fibrations' 3 (property check, 100 cases)",
		"expected": True,
	},
	"fib.fibre_square": {
		"description": "F^2 = 0 and g(F) = 1 + 3|l|^2 for the fibre class of seeded forms",
		"paper_anchor": "Remark after Theorem 'toutes les fibrations' (property check, 50 cases)",
		"expected": True,
	},
	"fib.curve_sum": {
		"description": "the sum of F.E over the 30 curves is 12 |l|^2 on seeded forms",
		"paper_anchor": "Remark after Theorem 'toutes les fibrations' (property check, 50 cases)",
		"expected": True,
	},
	"fib.unit_invariance": {
		"description": "multiplying a form by a unit changes none of its fibration data",
		"paper_anchor": "Theorem 'toutes les fibrations' 1 and 2 (property check, 30 cases)",
		"expected": True,
	},
}
