"""Intersection lattice of the 30 elliptic curves and the incidence class C on
the Fano surface of the Fermat cubic.

A class is an integer combination of the 31 generators E_ij^β and C. Two
classes are numerically equal when they pair equally with every generator.
"""
import logging
import random
from collections import namedtuple
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from fano.errors import NonIntegralGenus
from fano.group import GENERATORS, MonomialMatrix
from fano.lattice import (determinant, generated_lattice_discriminant, lattice_basis, rank, rational_kernel,
                          signature, smith_normal_form, sublattice_index)
from fano.record import Record

logger = logging.getLogger(__name__)

BETA_NAMES = ('1', 'w', 'w2')

SELF_INTERSECTION = -3
C_SQUARED = 5
C_DOT_CURVE = 1


class CurveLabel(namedtuple('CurveLabel', ['i', 'j', 'beta'])):
    """The curve E_ij^β, β = α^beta; i < j are 1-based."""

    __slots__ = ()

    def __new__(cls, i: int, j: int, beta: int = 0):
        if not 1 <= i < j <= 5 or beta not in (0, 1, 2):
            raise ValueError(f'Invalid curve label E{i}{j}^{beta}')
        return super().__new__(cls, i, j, beta)

    @property
    def indices(self) -> frozenset:
        return frozenset((self.i, self.j))

    def __str__(self):
        return f'E{self.i}{self.j}^{BETA_NAMES[self.beta]}'


CURVES = tuple(CurveLabel(i, j, beta) for i, j in combinations(range(1, 6), 2) for beta in range(3))

CURVE_INDEX = {label: k for k, label in enumerate(CURVES)}

C_INDEX = len(CURVES)

GENERATOR_COUNT = len(CURVES) + 1

# curves left out of the basis, all with β = α
EXCLUDED = (CurveLabel(1, 3, 1), CurveLabel(1, 5, 1), CurveLabel(2, 4, 1), CurveLabel(3, 4, 1), CurveLabel(4, 5, 1))


def curve_pair(first: CurveLabel, second: CurveLabel) -> int:
    if first == second:
        return SELF_INTERSECTION
    if first.indices.isdisjoint(second.indices):
        return 1
    return 0


@lru_cache(maxsize=None)
def gram() -> Tuple[Tuple[int, ...], ...]:
    """The 31×31 Gram matrix, curves in CURVES order and C last."""
    rows = []
    for first in CURVES:
        rows.append(tuple(curve_pair(first, second) for second in CURVES) + (C_DOT_CURVE,))
    rows.append((C_DOT_CURVE,) * len(CURVES) + (C_SQUARED,))
    return tuple(rows)


class DivisorClass:
    """An integer combination of the curves E_ij^β and C."""

    __slots__ = ('curve_coeffs', 'c_coeff')

    def __init__(self, curve_coeffs: Mapping[CurveLabel, int] = None, c_coeff: int = 0):
        coeffs = {}
        for label, value in (curve_coeffs or {}).items():
            if not isinstance(label, CurveLabel):
                raise TypeError(f'{label!r} is not a CurveLabel')
            coeffs[label] = coeffs.get(label, 0) + int(value)
        self.curve_coeffs = {label: value for label, value in coeffs.items() if value}
        self.c_coeff = int(c_coeff)

    @classmethod
    def curve(cls, i: int, j: int, beta: int = 0) -> 'DivisorClass':
        return cls({CurveLabel(i, j, beta): 1})

    @classmethod
    def incidence(cls) -> 'DivisorClass':
        return cls(c_coeff=1)

    @classmethod
    def from_vector(cls, values: Sequence[int]) -> 'DivisorClass':
        if len(values) != GENERATOR_COUNT:
            raise ValueError(f'Expected {GENERATOR_COUNT} coefficients, got {len(values)}')
        return cls(dict(zip(CURVES, values)), values[C_INDEX])

    @classmethod
    def sum_of(cls, labels: Iterable[CurveLabel]) -> 'DivisorClass':
        coeffs = {}
        for label in labels:
            coeffs[label] = coeffs.get(label, 0) + 1
        return cls(coeffs)

    def vector(self) -> List[int]:
        return [self.curve_coeffs.get(label, 0) for label in CURVES] + [self.c_coeff]

    def pairings(self) -> Tuple[int, ...]:
        """Intersection numbers with the 31 generators."""
        v = self.vector()
        g = gram()
        return tuple(sum(x * g[k][m] for k, x in enumerate(v) if x) for m in range(GENERATOR_COUNT))

    def numerically_equal(self, other: 'DivisorClass') -> bool:
        return self.pairings() == other.pairings()

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.curve_coeffs == other.curve_coeffs and self.c_coeff == other.c_coeff

    def __hash__(self):
        return hash((frozenset(self.curve_coeffs.items()), self.c_coeff))

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        coeffs = dict(self.curve_coeffs)
        for label, value in other.curve_coeffs.items():
            coeffs[label] = coeffs.get(label, 0) + value
        return DivisorClass(coeffs, self.c_coeff + other.c_coeff)

    def __neg__(self):
        return DivisorClass({label: -value for label, value in self.curve_coeffs.items()}, -self.c_coeff)

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return DivisorClass({label: scalar * value for label, value in self.curve_coeffs.items()},
                            scalar * self.c_coeff)

    def permuted(self, mapping: Mapping[CurveLabel, CurveLabel]) -> 'DivisorClass':
        coeffs = {}
        for label, value in self.curve_coeffs.items():
            coeffs[mapping[label]] = coeffs.get(mapping[label], 0) + value
        return DivisorClass(coeffs, self.c_coeff)

    def __str__(self):
        terms = []
        if self.c_coeff:
            terms.append((self.c_coeff, 'C'))
        terms.extend((self.curve_coeffs[label], str(label)) for label in CURVES if label in self.curve_coeffs)
        if not terms:
            return '0'
        text = ''
        for value, name in terms:
            sign = '-' if value < 0 else '+'
            body = name if abs(value) == 1 else f'{abs(value)}{name}'
            text += f' {sign} {body}' if text else (f'-{body}' if value < 0 else body)
        return text

    def __repr__(self):
        return f'DivisorClass({self})'


INCIDENCE = DivisorClass.incidence()

CANONICAL = 3 * INCIDENCE

SIGMA = DivisorClass.sum_of(CURVES)


def pair(first: DivisorClass, second: DivisorClass) -> int:
    pairings = first.pairings()
    return sum(x * pairings[k] for k, x in enumerate(second.vector()) if x)


def b_sum(i: int, j: int) -> DivisorClass:
    """B_ij, the sum of the three curves E_ij^β."""
    i, j = min(i, j), max(i, j)
    return DivisorClass.sum_of(CurveLabel(i, j, beta) for beta in range(3))


def unit_product_exponents(rng: random.Random) -> List[int]:
    """Exponents k with α^{k_1}⋯α^{k_5} = 1; the fifth one closes the product."""
    exponents = [rng.randrange(3) for _ in range(4)]
    return exponents + [-sum(exponents) % 3]


def ten_curve_divisor(exponents: Sequence[int]) -> DivisorClass:
    """Σ_{i<j} E_ij^{a_i/a_j} for a = (α^{exponents[0]}, …, α^{exponents[4]}).

    Raises:
        ValueError: unless a₁⋯a₅ = 1
    """
    if len(exponents) != 5 or sum(exponents) % 3:
        raise ValueError(f'Exponents {list(exponents)} do not give five units with product 1')
    return DivisorClass.sum_of(CurveLabel(i, j, (exponents[i - 1] - exponents[j - 1]) % 3)
                               for i, j in combinations(range(1, 6), 2))


def genus_of_class(divisor: DivisorClass) -> int:
    """1 + (D² + K·D)/2 with K = 3C.

    Raises:
        NonIntegralGenus: if D² + K·D is odd
    """
    total = pair(divisor, divisor) + pair(CANONICAL, divisor)
    if total % 2:
        raise NonIntegralGenus(f'D^2 + K.D = {total} is odd for {divisor}')
    return 1 + total // 2


def basis_labels() -> List[CurveLabel]:
    return [label for label in CURVES if label not in EXCLUDED]


def ns_rank_and_basis() -> Tuple[int, List[DivisorClass]]:
    """Rank of the 31 generators and the 26 generators spanning NS: 25 curves and C."""
    return rank(gram()), [DivisorClass.curve(*label) for label in basis_labels()] + [INCIDENCE]


def basis_curve_determinant() -> int:
    """Determinant of the Gram matrix of the 25 basis curves."""
    g = gram()
    idx = [CURVE_INDEX[label] for label in basis_labels()]
    return determinant([[g[a][b] for b in idx] for a in idx])


def ns_discriminant() -> int:
    return generated_lattice_discriminant(gram())


def basis_discriminant() -> int:
    g = gram()
    idx = [CURVE_INDEX[label] for label in basis_labels()] + [C_INDEX]
    return generated_lattice_discriminant([[g[a][b] for b in idx] for a in idx])


def curve_lattice_discriminant() -> int:
    g = gram()
    return generated_lattice_discriminant([row[:C_INDEX] for row in g[:C_INDEX]])


def curve_sublattice_index() -> int:
    """Index of the lattice of the 30 curves in NS."""
    return sublattice_index(gram()[:C_INDEX], gram())


def basis_index_in_curves() -> int:
    """Index of the 25 basis curves in the lattice of all 30 curves."""
    g = gram()
    return sublattice_index([g[CURVE_INDEX[label]] for label in basis_labels()], g[:C_INDEX])


def gram_signature() -> Tuple[int, int, int]:
    return signature(gram())


def b_relations() -> List[DivisorClass]:
    """B_jr + B_st − B_js − B_rt and B_js + B_rt − B_jt − B_rs for every j < r < s < t."""
    relations = []
    for j, r, s, t in combinations(range(1, 6), 4):
        relations.append(b_sum(j, r) + b_sum(s, t) - b_sum(j, s) - b_sum(r, t))
        relations.append(b_sum(j, s) + b_sum(r, t) - b_sum(j, t) - b_sum(r, s))
    return relations


def relations_kernel() -> Record:
    """Integer relations among the 30 curves.

    The B-relations lie in the kernel of the curve Gram matrix, span a
    saturated lattice and have the kernel's rank, so they generate every
    integer relation.
    """
    g = gram()
    curve_gram = [row[:C_INDEX] for row in g[:C_INDEX]]
    relations = [r.vector()[:C_INDEX] for r in b_relations()]
    in_kernel = all(not any(sum(x * curve_gram[k][m] for k, x in enumerate(v)) for m in range(C_INDEX))
                    for v in relations)
    kernel_rank = len(rational_kernel(curve_gram, C_INDEX))
    relation_rank = rank(relations)
    invariants = [d for d in smith_normal_form(relations).invariants if d]
    saturated = all(d == 1 for d in invariants)
    basis = [DivisorClass.from_vector([int(x) for x in v] + [0]) for v in lattice_basis(relations)]
    logger.debug('relation kernel rank {}, relation rank {}, invariants {}'.format(
        kernel_rank, relation_rank, invariants))
    return Record(rank=kernel_rank, basis=basis, relations_in_kernel=in_kernel,
                  relation_rank=relation_rank, saturated=saturated,
                  generates_kernel=in_kernel and saturated and relation_rank == kernel_rank)


def in_relations_kernel(divisor: DivisorClass) -> bool:
    """True iff the class pairs to zero with every curve and C."""
    return not any(divisor.pairings())


def verify_canonical_identities() -> Record:
    curve_products = [pair(CANONICAL, DivisorClass.curve(*label)) for label in CURVES]
    difference = SIGMA - 6 * INCIDENCE
    return Record(
        k_squared=pair(CANONICAL, CANONICAL),
        k_dot_curves=sorted(set(curve_products)),
        adjunction=all(SELF_INTERSECTION + value == 0 for value in curve_products),
        sigma_is_twice_canonical=not any(difference.pairings()),
        sigma_dot_c=pair(SIGMA, INCIDENCE),
    )


def sections_and_contractions(label: CurveLabel) -> Tuple[int, int]:
    """Curves E′ with (C − E)·E′ = 1 and with (C − E)·E′ = 0."""
    fibre = INCIDENCE - DivisorClass.curve(*label)
    values = [pair(fibre, DivisorClass.curve(*other)) for other in CURVES]
    return values.count(1), values.count(0)


def label_permutation(element: MonomialMatrix) -> Dict[CurveLabel, CurveLabel]:
    """The permutation of the 30 curves induced by the action on lines."""
    return {label: CurveLabel(*element.act_on_line(*label)) for label in CURVES}


def gram_invariant_under(element: MonomialMatrix) -> bool:
    mapping = label_permutation(element)
    if len(set(mapping.values())) != len(CURVES):
        return False
    return all(curve_pair(mapping[a], mapping[b]) == curve_pair(a, b) for a in CURVES for b in CURVES)


def gram_invariant_under_generators() -> bool:
    return all(gram_invariant_under(g) for g in GENERATORS)
