definition = {
	"arith.alpha_cubed": {
		"description": "alpha^3 = 1 in Z[w]",
		"paper_anchor": "Section 3.1, alpha a primitive cube root of unity",
		"expected": "1",
	},
	"arith.alpha_squared": {
		"description": "alpha^2 = -1 - alpha",
		"paper_anchor": "Section 3.1, alpha a primitive cube root of unity",
		"expected": "-1-w",
	},
	"arith.one_plus_alpha_squared": {
		"description": "(1 + alpha)^2 = alpha",
		"paper_anchor": "Section 3.1, alpha a primitive cube root of unity",
		"expected": "w",
	},
	"arith.lambda_norm": {
		"description": "(1 - alpha) times its conjugate is 3",
		"paper_anchor": "Section 3.2.1, the lattice Lambda_A^* modulo 1 - alpha",
		"expected": "3",
	},
	"arith.three_over_lambda": {
		"description": "3 / (1 - alpha) = 2 + alpha exactly in Z[w]",
		"paper_anchor": "Section 3.2.1, the lattice Lambda_A^* modulo 1 - alpha",
		"expected": "2+w",
	},
	"arith.two_not_divisible": {
		"description": "2 is not divisible by 1 - alpha",
		"paper_anchor": "Section 3.2.1, the lattice Lambda_A^* modulo 1 - alpha",
		"expected": True,
	},
	"arith.inner_pair": {
		"description": "<x4 - alpha^2 x5, x4 - alpha x5> = 1 + alpha",
		"paper_anchor": "Theorem 'toutes les fibrations' 3",
		"expected": "1+w",
	},
	"arith.inner_scaled_w": {
		"description": "<w/(alpha-1), alpha w/(alpha-1)> = 5 alpha^2 / 3",
		"paper_anchor": "Lemma 'la forme Q'",
		"expected": "(-5-5*w)/3",
	},
	"arith.ring_axioms": {
		"description": "associativity, commutativity and distributivity on seeded triples",
		"paper_anchor": "Section 3.1, the ring Z[alpha] (property check, 200 cases)",
		"expected": True,
	},
	"arith.norm_multiplicative": {
		"description": "N(xy) = N(x)N(y) on seeded pairs",
		"paper_anchor": "Section 3.2.1, the norm of a form (property check, 200 cases)",
		"expected": True,
	},
	"arith.lambda_criterion": {
		"description": "(1 - alpha) divides x exactly when 3 divides N(x)",
		"paper_anchor": "Section 3.2.1, the lattice Lambda_A^* (property check, 200 cases)",
		"expected": True,
	},
	"arith.hermitian_symmetry": {
		"description": "<u, v> is the conjugate of <v, u> on seeded vectors",
		"paper_anchor": "Section 3.2.1, the inner product of two forms (property check, 200 cases)",
		"expected": True,
	},
	"arith.line_rep_unit_invariance": {
		"description": "the canonical line representative does not change under unit rescaling",
		"paper_anchor": "Section 3.2.1, the 30 spaces C(e_i - beta e_j) (property check, 200 cases)",
		"expected": True,
	},
	"core.smith_example": {
		"description": "invariant factors of [[2,4,4],[-6,6,12],[10,-4,-16]]",
		"paper_anchor": "Theorem 'neronseveri' proof, index and discriminant of the curve lattice",
		"expected": [2, 6, 12],
	},
	"core.index_example": {
		"description": "index of 2Z + 3Z in Z^2",
		"paper_anchor": "Theorem 'neronseveri' proof, index and discriminant of the curve lattice",
		"expected": 6,
	},
	"core.infinite_index": {
		"description": "a rank 1 sublattice of Z^2 has infinite index",
		"paper_anchor": "Theorem 'neronseveri' proof, index and discriminant of the curve lattice",
		"expected": True,
	},
	"core.discriminant_dependent": {
		"description": "the A2 lattice given by three dependent generators has discriminant 3",
		"paper_anchor": "Theorem 'neronseveri' proof, index and discriminant of the curve lattice",
		"expected": 3,
	},
	"core.pfaffian_squared": {
		"description": "Pf(A)^2 = det(A) on seeded antisymmetric integer matrices",
		"paper_anchor": "Theorem 'le reseau de A' proof, the Pfaffian of c1(Theta) (property check, 50 cases)",
		"expected": True,
	},
}
