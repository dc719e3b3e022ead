definition = {
	"group.order": {
		"description": "G(3,3,5) generated by the transpositions and diag(1,1,1,1,2) has 9720 elements",
		"paper_anchor": "Section 3.1, the group G(3,3,5)",
		"expected": 9720,
	},
	"group.monomial": {
		"description": "every element is monomial with cube roots of unity of product 1",
		"paper_anchor": "Section 3.1, the group G(3,3,5)",
		"expected": True,
	},
	"group.diagonal_subgroup": {
		"description": "81 elements have trivial permutation part",
		"paper_anchor": "Section 3.1, the group G(3,3,5)",
		"expected": 81,
	},
	"group.closure": {
		"description": "seeded products and inverses stay in the enumerated set",
		"paper_anchor": "Section 3.1, the group G(3,3,5)",
		"expected": True,
	},
	"group.orbit_size": {
		"description": "the orbit of the line C(e1 - e2) has 30 lines",
		"paper_anchor": "Section 3.2.1, G(3,3,5) acts transitively on the 30 spaces",
		"expected": 30,
	},
	"group.orbit_is_all_lines": {
		"description": "the orbit is exactly the lines C(e_i - b e_j)",
		"paper_anchor": "Section 3.2.1, G(3,3,5) acts transitively on the 30 spaces",
		"expected": True,
	},
	"group.invariant_dimension": {
		"description": "the G(3,3,5)-invariant Hermitian forms form a 1-dimensional space",
		"paper_anchor": "Lemma 'la forme de chern de pol fermat'",
		"expected": 1,
	},
	"group.invariant_scalar": {
		"description": "the invariant Hermitian forms are scalar matrices",
		"paper_anchor": "Lemma 'la forme de chern de pol fermat'",
		"expected": True,
	},
	"group.permutation_invariant_dimension": {
		"description": "permutations alone leave a 2-dimensional space of Hermitian forms",
		"paper_anchor": "Lemma 'la forme de chern de pol fermat'",
		"expected": 2,
	},
	"group.gram_invariant": {
		"description": "the 31 x 31 Gram of the curves and C is invariant under every generator",
		"paper_anchor": "Lemma 'la forme de chern de pol fermat' (property check)",
		"expected": True,
	},
	"group.omega_invariant": {
		"description": "omega is invariant under every generator",
		"paper_anchor": "Lemma 'la forme Q' (property check)",
		"expected": True,
	},
}
