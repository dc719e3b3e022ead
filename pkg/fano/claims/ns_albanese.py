definition = {
	"ends.rank": {
		"description": "the symmetric endomorphisms of the Fermat Albanese have Z-rank 25",
		"paper_anchor": "Theorem 'le reseau de A' proof, a basis of End^s(A)",
		"expected": 25,
	},
	"ends.preserve_h1": {
		"description": "every basis endomorphism maps H1(A, Z) into itself",
		"paper_anchor": "Theorem 'le reseau de A' proof, a basis of End^s(A)",
		"expected": True,
	},
	"ends.self_adjoint_u": {
		"description": "in u-coordinates every basis endomorphism is self-adjoint for H' = (2/sqrt 3) tP conj(P)",
		"paper_anchor": "Theorem 'le reseau de A' proof, tM H' = H' conj(M)",
		"expected": True,
	},
	"ends.independent": {
		"description": "the Chern forms of the 25 basis endomorphisms are linearly independent",
		"paper_anchor": "Theorem 'le reseau de A' proof, a basis of End^s(A)",
		"expected": True,
	},
	"ends.theta_pfaffian": {
		"description": "|Pf| of the Chern form of the identity",
		"paper_anchor": "Theorem 'le reseau de A' proof, the Pfaffian of c1(Theta) is 1",
		"expected": 1,
	},
	"ends.theta_square": {
		"description": "q(Theta, Theta) = Theta^5 / 3! integrated over A",
		"paper_anchor": "Theorem 'intersection de deux diviseurs' a",
		"expected": 20,
	},
	"ends.trace_formula": {
		"description": "q(phi(M), phi(N)) = tr M tr N - tr MN on the basis endomorphisms",
		"paper_anchor": "Theorem 'intersection de deux diviseurs' a",
		"expected": True,
	},
	"ends.discriminant": {
		"description": "discriminant of NS(A) under the pairing q",
		"paper_anchor": "Theorem 'le reseau de A' proof, phi_H' is an isomorphism",
		"expected": 1549681956,
	},
	"ends.fibre_square": {
		"description": "q(f, f) = 0 for the pullback f of a point under x4 - x5",
		"paper_anchor": "Theorem 'intersection de deux diviseurs' a",
		"expected": 0,
	},
	"ends.fibre_pair": {
		"description": "q of the pullbacks under x4 - w^2 x5 and x4 - w x5",
		"paper_anchor": "Theorem 'intersection de deux diviseurs' a",
		"expected": 3,
	},
	"pullback.rank": {
		"description": "C - E_ij^b and the sum of the E_ij^1 generate a lattice of rank 25",
		"paper_anchor": "Theorem 'le reseau de A', generators C_s - E_ij^beta",
		"expected": 25,
	},
	"pullback.discriminant": {
		"description": "discriminant of the image of NS(A) in NS(S)",
		"paper_anchor": "Theorem 'le reseau de A', generators C_s - E_ij^beta",
		"expected": 1549681956,
	},
	"pullback.index": {
		"description": "the image of NS(A) has index 2 in NS(S)",
		"paper_anchor": "Theorem 'le reseau de A', generators C_s - E_ij^beta",
		"expected": 2,
	},
	"pullback.consistency": {
		"description": "the pullback discriminant is 2^2 times the discriminant of NS(S)",
		"paper_anchor": "Theorem 'le reseau de A', generators C_s - E_ij^beta",
		"expected": True,
	},
}
