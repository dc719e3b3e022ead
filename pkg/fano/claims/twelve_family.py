definition = {
	"twelve.rank": {
		"description": "the twelve curves and C generate a lattice of rank 12",
		"paper_anchor": "Proposition 'il existe une infinité' 1",
		"expected": 12,
	},
	"twelve.discriminant": {
		"description": "discriminant of the lattice of the twelve curves and C",
		"paper_anchor": "Proposition 'il existe une infinité' 1",
		"expected": 118098,
	},
	"twelve.curve_determinant": {
		"description": "determinant of the Gram matrix of the twelve curves",
		"paper_anchor": "Proposition 'il existe une infinité' 1",
		"expected": -1062882,
	},
	"twelve.signature": {
		"description": "(positive, negative, zero) eigenvalue counts of the 13 x 13 Gram",
		"paper_anchor": "Theorem 'neronseveri' (Hodge index theorem)",
		"expected": [1, 11, 1],
	},
	"twelve.fermat_restriction": {
		"description": "the Gram matrix is the restriction of the Fermat one",
		"paper_anchor": "Proposition 'il existe une infinité' 1",
		"expected": True,
	},
	"twelve.k_dot_curves": {
		"description": "K = sum 2E45^b + E_ij^b satisfies K.E = 3 on the twelve curves",
		"paper_anchor": "Corollary 'Corollaire reformulation revetement'",
		"expected": [3],
	},
	"twelve.k_squared": {
		"description": "K^2 = 45",
		"paper_anchor": "Corollary 'Corollaire reformulation revetement'",
		"expected": 45,
	},
	"twelve.picard_cases": {
		"description": "Picard numbers of E0^3 x E^2 without CM, with CM by another field, with CM by Q(w)",
		"paper_anchor": "Proposition 'il existe une infinité', cases",
		"expected": [12, 13, 25],
	},
	"twelve.rank_bounds": {
		"description": "1 <= rank <= 25 for the lattice and every Picard case",
		"paper_anchor": "Theorem 'neronseveri', rank 25 = dim H^1(S, Omega_S)",
		"expected": True,
	},
	"twelve.diagonal_square": {
		"description": "the proper transform of the diagonal has square -9",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": -9,
	},
	"twelve.canonical_dot_diagonal": {
		"description": "K_Z meets the proper transform of the diagonal 9 times",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": 9,
	},
	"twelve.transforms_disjoint": {
		"description": "the proper transforms of the diagonal, T1 and T2 are disjoint",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": True,
	},
	"twelve.transform_genera": {
		"description": "the proper transforms are elliptic",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": [1, 1, 1],
	},
	"twelve.t1_expression": {
		"description": "T1 = 3f1 + 6f2 - 2D numerically",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": True,
	},
	"twelve.branch_divisible": {
		"description": "D + T1 + T2 = 3(3f1 + 3f2 - D) numerically",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": True,
	},
	"twelve.c2": {
		"description": "c2 = 3 x 9 for the triple cover",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": 27,
	},
	"twelve.k_squared_terms": {
		"description": "3K_Z^2, 4K_Z.B and 4R^2 in the expansion of K^2",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": [-27, 108, -36],
	},
	"twelve.cover_k_squared": {
		"description": "the expansion of K^2 totals 45",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": 45,
	},
	"twelve.ramification": {
		"description": "the pullback of the branch divisor squares to -27 from both sides",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": [-27, -27],
	},
	"twelve.noether": {
		"description": "(K^2 + c2) / 12",
		"paper_anchor": "Proposition '12 courbes' proof",
		"expected": 6,
	},
}
