definition = {
	"lattice.chain": {
		"description": "every candidate lies between L0 and L",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": True,
	},
	"lattice.distinct": {
		"description": "the six candidates are pairwise different",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": True,
	},
	"lattice.top_index": {
		"description": "[L : L0] = 9",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": 9,
	},
	"lattice.quotient": {
		"description": "L / L0 is (Z/3)^2",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": [3, 3],
	},
	"lattice.intermediate_indices": {
		"description": "the four intermediate candidates have index 3 over L0",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": [3],
	},
	"lattice.congruence": {
		"description": "L0 is the lattice of a in Z[w]^5 with sum in (1 - w)",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": True,
	},
	"lattice.split_is_lw1": {
		"description": "L0 + Zw is the split lattice of the Z[w]e_i",
		"paper_anchor": "Theorem 'le reseau de A' proof, elimination of the candidates",
		"expected": True,
	},
	"lattice.split_witness": {
		"description": "omega is block diagonal on the coordinate planes of the split lattice",
		"paper_anchor": "Theorem 'le reseau de A' proof, elimination of the candidates (a product of Jacobians is excluded by assumption)",
		"expected": True,
	},
	"lattice.omega_split_det": {
		"description": "omega is unimodular on the split lattice",
		"paper_anchor": "Lemma 'la forme Q'",
		"expected": 1,
	},
	"lattice.omega_l0_det": {
		"description": "determinant of omega on L0",
		"paper_anchor": "Theorem 'le reseau de A' proof, hence Lambda_0 is different",
		"expected": 9,
	},
	"lattice.omega_l0_pfaffian": {
		"description": "absolute value of the Pfaffian of omega on L0",
		"paper_anchor": "Theorem 'le reseau de A' proof, hence Lambda_0 is different",
		"expected": 3,
	},
	"lattice.omega_l_integral": {
		"description": "omega is integral on L",
		"paper_anchor": "Lemma 'la forme Q'",
		"expected": False,
	},
	"lattice.omega_l_witness": {
		"description": "|omega(w/(w-1), w w/(w-1))| = 5/3",
		"paper_anchor": "Lemma 'la forme Q'",
		"expected": "5/3",
	},
	"lattice.galois_swap": {
		"description": "replacing w by w^2 maps L1 and Lw to Lw and L1",
		"paper_anchor": "Theorem 'le reseau de A' proof, depend upon the choice of alpha",
		"expected": ["Lw", "L1"],
	},
	"lattice.galois_fixed": {
		"description": "L0, Lw2, Lw-1 and L are fixed by w -> w^2",
		"paper_anchor": "Theorem 'le reseau de A' proof, depend upon the choice of alpha",
		"expected": ["L0", "Lw2", "Lw-1", "L"],
	},
	"lattice.group_stable": {
		"description": "every candidate is stable under G(3,3,5)",
		"paper_anchor": "Theorem 'le reseau de A' proof, the 6 lattices",
		"expected": True,
	},
	"h1.selected": {
		"description": "the elimination leaves a single candidate",
		"paper_anchor": "Theorem 'le reseau de A'",
		"expected": "Λ_{α²}",
	},
	"h1.pfaffian": {
		"description": "|Pf(omega)| on H1(A, Z)",
		"paper_anchor": "Theorem 'le reseau de A' proof, the Pfaffian of c1(Theta) is 1",
		"expected": 1,
	},
	"h1.presentations_equal": {
		"description": "L0 + Z w^2 w/(w-1) equals Z[w](e_i - e5) + (1+w)/(1-w) Z[3w] v",
		"paper_anchor": "Theorem 'le reseau de A'",
		"expected": True,
	},
	"h1.line_curve": {
		"description": "H1 meets the line C(e1 - w e2) in Z[w](e1 - w e2)",
		"paper_anchor": "Section 3.2.1 and Corollary 'diviseur somme', H1(A, Z) on the lines",
		"expected": True,
	},
	"h1.line_w": {
		"description": "H1 meets the line C w in w^2/(1-w) Z[3w] w",
		"paper_anchor": "Section 3.2.1 and Corollary 'diviseur somme', H1(A, Z) on the lines",
		"expected": True,
	},
}
