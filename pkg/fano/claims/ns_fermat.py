definition = {
	"ns.rank": {
		"description": "the 30 elliptic curves and C generate a lattice of rank 25",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 25,
	},
	"ns.basis_size": {
		"description": "25 curves and C span NS",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 26,
	},
	"ns.basis_curve_determinant": {
		"description": "determinant of the Gram matrix of the 25 basis curves",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 3486784401,
	},
	"ns.discriminant": {
		"description": "discriminant of the lattice generated by the 30 curves and C",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 387420489,
	},
	"ns.basis_discriminant": {
		"description": "the 25 basis curves and C give the same discriminant",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 387420489,
	},
	"ns.curve_discriminant": {
		"description": "discriminant of the lattice generated by the 30 curves alone",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 3486784401,
	},
	"ns.curve_index": {
		"description": "the 30 curves generate a sublattice of index 3",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 3,
	},
	"ns.basis_index_in_curves": {
		"description": "the 25 basis curves generate the same lattice as the 30 curves",
		"paper_anchor": "Theorem 'neronseveri'",
		"expected": 1,
	},
	"ns.signature": {
		"description": "(positive, negative, zero) eigenvalue counts of the 31 x 31 Gram",
		"paper_anchor": "Theorem 'neronseveri' (Hodge index theorem)",
		"expected": [1, 24, 6],
	},
	"ns.rank_bounds": {
		"description": "1 <= rank <= 25 for every lattice computed in NS(S)",
		"paper_anchor": "Theorem 'neronseveri', rank 25 = dim H^1(S, Omega_S)",
		"expected": True,
	},
	"ns.kernel_rank": {
		"description": "the integer relations among the 30 curves have rank 5",
		"paper_anchor": "Theorem 'neronseveri', B_jr + B_st = B_js + B_rt",
		"expected": 5,
	},
	"ns.relations_in_kernel": {
		"description": "the B-relations pair to zero with every curve",
		"paper_anchor": "Theorem 'neronseveri', B_jr + B_st = B_js + B_rt",
		"expected": True,
	},
	"ns.relations_generate_kernel": {
		"description": "the B-relations generate every integer relation",
		"paper_anchor": "Theorem 'neronseveri', B_jr + B_st = B_js + B_rt",
		"expected": True,
	},
	"ns.k_squared": {
		"description": "K = 3C has K^2 = 45",
		"paper_anchor": "Lemma 'genre de la fibre f ell'",
		"expected": 45,
	},
	"ns.k_dot_curves": {
		"description": "K.E = 3 for the 30 curves",
		"paper_anchor": "Lemma 'genre de la fibre f ell'",
		"expected": [3],
	},
	"ns.adjunction": {
		"description": "E^2 + K.E = 0 for the 30 elliptic curves",
		"paper_anchor": "Lemma 'genre de la fibre f ell'",
		"expected": True,
	},
	"ns.sigma_twice_canonical": {
		"description": "the sum of the 30 curves is numerically 2K",
		"paper_anchor": "Lemma 'genre de la fibre f ell'",
		"expected": True,
	},
	"ns.sigma_dot_c": {
		"description": "the sum of the 30 curves meets C in 30 points",
		"paper_anchor": "Lemma 'genre de la fibre f ell'",
		"expected": 30,
	},
	"ns.b_fibre_square": {
		"description": "(B12 + B34)^2 = 0",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 0,
	},
	"ns.b_fibre_genus": {
		"description": "B12 + B34 has arithmetic genus 10",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 10,
	},
	"ns.ten_curve_square": {
		"description": "the divisor of ten curves E_ij^(a_i/a_j) has square 0",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 0,
	},
	"ns.ten_curve_genus": {
		"description": "the divisor of ten curves has arithmetic genus 16",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": 16,
	},
	"ns.incidence_fibre_genus": {
		"description": "C - E has arithmetic genus 7",
		"paper_anchor": "Theorem 'toutes les fibrations' 2",
		"expected": 7,
	},
	"ns.sections_contractions": {
		"description": "(sections, contracted curves) of C - E, for every curve E",
		"paper_anchor": "Corollary 'exemple de fibration'",
		"expected": [[20, 9]],
	},
}
