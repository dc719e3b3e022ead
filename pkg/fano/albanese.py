"""The period lattice of the Albanese variety of the Fermat Fano surface.

Lattices live in ℚ(α)⁵ = ℚ¹⁰ through EisVector.real_coordinates. Six
candidates sit between Λ₀ = Σ ℤ[α](e_i − βe_j) and Λ; integrality of ω, its
Pfaffian and Galois invariance single out H₁(A, ℤ) = Λ_{α²}.
"""
import logging
import time
from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from fano import fermat
from fano.eisenstein import (EisensteinInt, EisensteinRational, EisVector, LAMBDA, alpha_power, as_rational,
                             apply_matrix, hermitian_inner, invert_matrix, matrix_product)
from fano.errors import NotClosedUnderGalois, NotInNS, UnknownCandidate, ZeroVector
from fano.group import GENERATORS, MonomialMatrix, hermitian_coefficients, line_vector
from fano.lattice import (CubePairing, Lattice, RowSolver, TwoForm, determinant, generated_lattice_discriminant,
                          integral_preimage, pfaffian, quotient_invariants, rank, sublattice_index)
from fano.record import Record

logger = logging.getLogger(__name__)

CANDIDATES = ('L0', 'L1', 'Lw', 'Lw2', 'Lw-1', 'L')

DISPLAY_NAMES = {
    'L0': 'Λ₀',
    'L1': 'Λ₁',
    'Lw': 'Λ_α',
    'Lw2': 'Λ_{α²}',
    'Lw-1': 'Λ_{α−1}',
    'L': 'Λ',
}

ALPHA = EisensteinRational(alpha_power(1))

W = EisVector([1] * 5)

# α²e₁ + α²e₂ + αe₃ + αe₄ + e₅
TWISTED_W = EisVector([alpha_power(2), alpha_power(2), alpha_power(1), alpha_power(1), 1])


def omega(u: EisVector, v: EisVector) -> Fraction:
    """ω(u, v) = −(α-coefficient of Σ u_k·conj(v_k)); ω(e, αe) = 1."""
    return -hermitian_inner(u, v).alpha_part


class PeriodLattice:
    """A rank-10 lattice in ℚ(α)⁵ given by generators, with an ordered ℤ-basis.

    Raises:
        ValueError: if the generators do not have rank 10, or a given basis is
            not a ℤ-basis of the generated lattice
    """

    def __init__(self, name: str, generators: Iterable[EisVector], basis: Sequence[EisVector] = None):
        self.name = name
        self.generators = list(generators)
        self.lattice = Lattice([v.real_coordinates() for v in self.generators], dim=10)
        if self.lattice.rank != 10:
            raise ValueError(f'{name} has rank {self.lattice.rank}, expected 10')
        if basis is None:
            basis = [EisVector.from_real_coordinates(b) for b in self.lattice.basis]
        else:
            basis = list(basis)
            if len(basis) != 10 or Lattice([b.real_coordinates() for b in basis]) != self.lattice:
                raise ValueError(f'The given vectors are not a basis of {name}')
        self.basis = basis
        self._solver = RowSolver([b.real_coordinates() for b in basis], 10)

    @property
    def display_name(self) -> str:
        return DISPLAY_NAMES.get(self.name, self.name)

    def coordinates(self, v: EisVector) -> Optional[List]:
        """Rational coordinates of v in the ordered basis."""
        return self._solver.solve(v.real_coordinates())

    def __contains__(self, v: EisVector) -> bool:
        return v.real_coordinates() in self.lattice

    def contains_lattice(self, other: 'PeriodLattice') -> bool:
        return self.lattice.contains_lattice(other.lattice)

    def __eq__(self, other):
        if not isinstance(other, PeriodLattice):
            return NotImplemented
        return self.lattice == other.lattice

    __hash__ = None

    def index_in(self, other: 'PeriodLattice') -> int:
        return sublattice_index(self.lattice.basis, other.lattice)

    def conjugate(self) -> 'PeriodLattice':
        """Replace α by α² in every generator."""
        return PeriodLattice(self.name, [v.conjugate() for v in self.generators])

    def is_stable_under(self, element: MonomialMatrix) -> bool:
        return all(element.apply(b) in self for b in self.basis)

    def __repr__(self):
        return f'PeriodLattice({self.name!r})'


def _alpha_span(vectors: Iterable[EisVector]) -> List[EisVector]:
    """ℤ-generators of the ℤ[α]-module spanned by the vectors."""
    generators = []
    for v in vectors:
        generators.append(v)
        generators.append(v * ALPHA)
    return generators


def lambda_zero_generators() -> List[EisVector]:
    return _alpha_span(line_vector(i, j, beta) for i, j in combinations(range(1, 6), 2) for beta in range(3))


def split_lattice() -> PeriodLattice:
    """⊕ ℤ[α]e_i with the ordered basis e₁, αe₁, …, e₅, αe₅."""
    generators = _alpha_span(EisVector.basis(k) for k in range(1, 6))
    return PeriodLattice('split', generators, generators)


def congruence_lattice() -> PeriodLattice:
    """{a ∈ ℤ[α]⁵ : Σ a_i ∈ (1 − α)ℤ[α]}."""
    e5 = EisVector.basis(5)
    vectors = [EisVector.basis(k) - e5 for k in range(1, 5)] + [e5 * LAMBDA]
    return PeriodLattice('congruence', _alpha_span(vectors))


@lru_cache(maxsize=None)
def build_candidates() -> Dict[str, PeriodLattice]:
    """The six lattices between Λ₀ and Λ, keyed by CANDIDATES names."""
    started = time.perf_counter()
    base = lambda_zero_generators()
    scaled = W / (ALPHA - 1)
    candidates = OrderedDict()
    candidates['L0'] = PeriodLattice('L0', base)
    candidates['L1'] = PeriodLattice('L1', base + [scaled])
    candidates['Lw'] = PeriodLattice('Lw', base + [scaled * ALPHA])
    candidates['Lw2'] = PeriodLattice('Lw2', base + [scaled * ALPHA ** 2])
    candidates['Lw-1'] = PeriodLattice('Lw-1', base + [W])
    candidates['L'] = PeriodLattice('L', _alpha_span([EisVector.basis(k) for k in range(1, 5)] + [scaled]))
    logger.info('built {} candidate lattices in {:.2f}s'.format(len(candidates), time.perf_counter() - started))
    return candidates


def candidate(name: str) -> PeriodLattice:
    """
    Raises:
        UnknownCandidate: for a name outside CANDIDATES
    """
    candidates = build_candidates()
    if name not in candidates:
        raise UnknownCandidate(f'Unknown lattice {name}. Available lattices are {list(CANDIDATES)}')
    return candidates[name]


def candidate_structure() -> Record:
    """Inclusions and indices of the candidate chain Λ₀ ⊆ · ⊆ Λ."""
    candidates = build_candidates()
    bottom, top = candidates['L0'], candidates['L']
    intermediates = [name for name in CANDIDATES if name not in ('L0', 'L')]
    return Record(
        chain=all(top.contains_lattice(c) and c.contains_lattice(bottom) for c in candidates.values()),
        top_index=bottom.index_in(top),
        quotient=list(quotient_invariants(bottom.lattice.basis, top.lattice)),
        intermediate_indices=sorted({bottom.index_in(candidates[name]) for name in intermediates}),
        distinct=all(candidates[a] != candidates[b] for a, b in combinations(CANDIDATES, 2)),
    )


def omega_on_lattice(lattice: PeriodLattice) -> Tuple[TwoForm, bool]:
    form = TwoForm.from_pairing(lattice.basis, omega)
    return form, form.is_integral


def extra_generator_omega() -> Fraction:
    """ω(w/(α − 1), α·w/(α − 1)), the entry that keeps ω from being integral on Λ."""
    scaled = W / (ALPHA - 1)
    return omega(scaled, scaled * ALPHA)


def galois_substitute(lattice: PeriodLattice) -> str:
    """Name of the candidate obtained by replacing α with α².

    Raises:
        NotClosedUnderGalois: if the conjugate lattice is not a candidate
    """
    image = lattice.conjugate()
    for name, other in build_candidates().items():
        if other == image:
            return name
    raise NotClosedUnderGalois(f'The conjugate of {lattice.name} is not among {list(CANDIDATES)}')


def split_witness(lattice: PeriodLattice) -> bool:
    """The lattice is ⊕ ℤ[α]e_i and ω is block diagonal on the coordinate planes."""
    split = split_lattice()
    if lattice != split:
        return False
    form, _ = omega_on_lattice(split)
    return all(form(p, q) == 0 for p in range(10) for q in range(10) if p // 2 != q // 2)


def u_vectors() -> List[EisVector]:
    """u₁ = e₁ − e₂, …, u₄ = e₄ − e₅ and u₅ = α²/(1 − α)·(α²e₁ + α²e₂ + αe₃ + αe₄ + e₅)."""
    us = [EisVector.basis(k) - EisVector.basis(k + 1) for k in range(1, 5)]
    us.append(TWISTED_W * (as_rational(alpha_power(2)) / LAMBDA))
    return us


def h1_presentation_basis() -> List[EisVector]:
    """u₁, αu₁, …, u₄, αu₄, u₅, 3αu₅: the ℤ[α]·u_k for k ≤ 4 and ℤ[3α]·u₅."""
    us = u_vectors()
    basis = []
    for u in us[:4]:
        basis.extend([u, u * ALPHA])
    basis.extend([us[4], us[4] * (ALPHA * 3)])
    return basis


def h1_presentation() -> PeriodLattice:
    """H₁ as ℤ[α](e_i − e₅), i ≤ 4, plus (1 + α)/(1 − α)·ℤ[3α]·(α²e₁ + α²e₂ + αe₃ + αe₄ + e₅)."""
    e5 = EisVector.basis(5)
    generators = _alpha_span(EisVector.basis(k) - e5 for k in range(1, 5))
    twisted = TWISTED_W * (as_rational(EisensteinInt(1, 1)) / LAMBDA)
    generators.extend([twisted, twisted * (ALPHA * 3)])
    return PeriodLattice('presentation', generators)


@lru_cache(maxsize=None)
def h1() -> PeriodLattice:
    """Λ_{α²} with the ordered basis of h1_presentation_basis."""
    return PeriodLattice('Lw2', candidate('Lw2').generators, h1_presentation_basis())


def elimination() -> Record:
    """The elimination chain leading from the six candidates to H₁(A, ℤ)."""
    candidates = build_candidates()
    steps = []
    remaining = list(CANDIDATES)

    if not omega_on_lattice(candidates['L'])[1]:
        remaining.remove('L')
        steps.append(Record(name='L', reason='omega is not integral', witness=str(extra_generator_omega())))

    det = omega_on_lattice(candidates['L0'])[0].determinant()
    if det != 1:
        remaining.remove('L0')
        steps.append(Record(name='L0', reason='omega is not unimodular', witness=str(det)))

    if split_witness(candidates['Lw-1']):
        remaining.remove('Lw-1')
        steps.append(Record(name='Lw-1', reason='split lattice, a product of Jacobians (assumed)', witness='split'))

    unimodular = [name for name in remaining if abs(omega_on_lattice(candidates[name])[0].determinant()) == 1]
    fixed = [name for name in unimodular if galois_substitute(candidates[name]) == name]
    for name in remaining:
        if name not in fixed:
            steps.append(Record(name=name, reason='depends on the choice of a cube root of unity',
                                witness=galois_substitute(candidates[name])))
    logger.debug('elimination steps {}'.format([step.name for step in steps]))
    return Record(steps=steps, selected=fixed[0] if len(fixed) == 1 else None, survivors=fixed)


def select_H1() -> PeriodLattice:
    selected = elimination().selected
    if selected != 'Lw2':
        raise NotClosedUnderGalois(f'Elimination selected {selected}')
    return h1()


def line_intersection(lattice: PeriodLattice, direction: EisVector) -> List[EisVector]:
    """A ℤ-basis of the vectors of the lattice lying on the complex line ℂ·direction.

    Raises:
        ZeroVector: if direction is zero
    """
    if not direction:
        raise ZeroVector('A line needs a nonzero direction')
    first = lattice.lattice.coordinates(direction.real_coordinates())
    second = lattice.lattice.coordinates((direction * ALPHA).real_coordinates())
    constraints = [[x, y] for x, y in zip(first, second)]
    return [direction * x + direction * ALPHA * y for x, y in integral_preimage(constraints)]


class EndoMatrix:
    """A 5×5 matrix over ℚ(α) acting on column vectors in e-coordinates."""

    __slots__ = ('rows',)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if len(rows) != 5 or any(len(row) != 5 for row in rows):
            raise ValueError('An EndoMatrix is 5x5')
        self.rows = rows

    @classmethod
    def identity(cls) -> 'EndoMatrix':
        return cls([[int(p == q) for q in range(5)] for p in range(5)])

    @classmethod
    def scalar(cls, value) -> 'EndoMatrix':
        return cls([[value if p == q else 0 for q in range(5)] for p in range(5)])

    def __getitem__(self, item):
        return self.rows[item]

    def __eq__(self, other):
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return EndoMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, EndoMatrix):
            return EndoMatrix(matrix_product(self.rows, other.rows))
        return NotImplemented

    @property
    def is_symmetric(self) -> bool:
        """ᵗM = M̄, self-adjointness for Σ x_k ȳ_k in e-coordinates."""
        return self.is_self_adjoint(EndoMatrix.identity())

    def transpose(self) -> 'EndoMatrix':
        return EndoMatrix(list(zip(*self.rows)))

    def conjugate(self) -> 'EndoMatrix':
        return EndoMatrix([[x.conjugate() for x in row] for row in self.rows])

    def is_self_adjoint(self, gram: 'EndoMatrix') -> bool:
        """ᵗM·G = G·M̄ for the Hermitian form (x, y) ↦ ᵗx·G·ȳ."""
        return self.transpose() * gram == gram * self.conjugate()

    def trace(self) -> EisensteinRational:
        return sum((self.rows[p][p] for p in range(5)), EisensteinRational(0))

    def apply(self, v: EisVector) -> EisVector:
        return apply_matrix(self.rows, v)

    def preserves(self, lattice: PeriodLattice) -> bool:
        return all(self.apply(b) in lattice for b in lattice.basis)

    def in_u_basis(self) -> 'EndoMatrix':
        """P⁻¹·M·P where the columns of P are u₁, …, u₅."""
        return _u_change_inverse() * self * u_change_of_basis()

    def __repr__(self):
        return 'EndoMatrix([{}])'.format('; '.join(', '.join(str(x) for x in row) for row in self.rows))


@lru_cache(maxsize=None)
def u_change_of_basis() -> EndoMatrix:
    """P, whose columns are u₁, …, u₅ in e-coordinates."""
    columns = u_vectors()
    return EndoMatrix([[columns[q][p] for q in range(5)] for p in range(5)])


@lru_cache(maxsize=None)
def _u_change_inverse() -> EndoMatrix:
    return EndoMatrix(invert_matrix(u_change_of_basis().rows))


def u_gram() -> EndoMatrix:
    """ᵗP·P̄, the Gram matrix of Σ x_k ȳ_k in u-coordinates.

    H′ is (2/√3) times this; a real factor does not change self-adjointness.
    """
    change = u_change_of_basis()
    return change.transpose() * change.conjugate()


def self_adjoint_in_u_basis(matrix: EndoMatrix) -> bool:
    return matrix.in_u_basis().is_self_adjoint(u_gram())


@lru_cache(maxsize=None)
def symmetric_endomorphisms() -> Tuple[EndoMatrix, ...]:
    """A ℤ-basis of the symmetric matrices mapping H₁ into itself.

    Symmetric matrices form a 25-dimensional ℚ-space. Mapping each basis
    vector of H₁ to its coordinates gives integrality constraints whose
    integral preimage is End^s.
    """
    started = time.perf_counter()
    lattice = h1()
    entries = hermitian_coefficients()
    elementary = [EndoMatrix([[entries[p][q][t] for q in range(5)] for p in range(5)]) for t in range(25)]
    columns = []
    for matrix in elementary:
        column = []
        for b in lattice.basis:
            column.extend(lattice.coordinates(matrix.apply(b)))
        columns.append(column)
    constraints = [list(row) for row in zip(*columns)]
    basis = []
    for params in integral_preimage(constraints):
        rows = [[sum((entries[p][q][t] * params[t] for t in range(25) if params[t]), EisensteinRational(0))
                 for q in range(5)] for p in range(5)]
        basis.append(EndoMatrix(rows))
    logger.info('computed {} symmetric endomorphisms in {:.2f}s'.format(len(basis), time.perf_counter() - started))
    return tuple(basis)


def hermitian_value(x: EisVector, matrix: EndoMatrix, y: EisVector) -> EisensteinRational:
    """ᵗx·M·ȳ."""
    total = EisensteinRational(0)
    for p in range(5):
        if not x[p]:
            continue
        for q in range(5):
            if matrix[p][q] and y[q]:
                total = total + x[p] * matrix[p][q] * y[q].conjugate()
    return total


def chern_of_endomorphism(matrix: EndoMatrix, lattice: PeriodLattice = None) -> TwoForm:
    """The alternating form (x, y) ↦ −(α-coefficient of ᵗx·M·ȳ) on the basis of H₁.

    Raises:
        NotInNS: if the form is not integral
    """
    if not matrix.is_symmetric:
        raise NotInNS(f'{matrix!r} is not symmetric')
    lattice = lattice or h1()
    form = TwoForm.from_pairing(lattice.basis, lambda x, y: -hermitian_value(x, matrix, y).alpha_part)
    if not form.is_integral:
        raise NotInNS(f'{matrix!r} does not give an integral class')
    return form


@lru_cache(maxsize=None)
def theta_form() -> TwoForm:
    return chern_of_endomorphism(EndoMatrix.identity())


@lru_cache(maxsize=None)
def _cube_pairing() -> CubePairing:
    return CubePairing(theta_form())


def orientation() -> int:
    """+1 or −1, chosen so that Θ⁵/5! integrates to 1 on A."""
    return 1 if pfaffian(theta_form()) > 0 else -1


def q_theta_pairing(first: TwoForm, second: TwoForm):
    """∫ Θ³/3! ∧ f ∧ g over A, for forms on the basis of H₁."""
    return orientation() * _cube_pairing()(first, second)


def pullback_form(coefficients: Sequence) -> TwoForm:
    """The class of a fibre of A → ℂ/ℤ[α] given by ℓ = Σ a_i x_i, on the basis of H₁.

    Raises:
        NotInNS: if ℓ does not map H₁ into ℤ[α]
    """
    coefficients = [as_rational(a) for a in coefficients]

    def evaluate(v: EisVector) -> EisensteinRational:
        return sum((a * x for a, x in zip(coefficients, v)), EisensteinRational(0))

    values = [evaluate(b) for b in h1().basis]
    if not all(value.is_integral for value in values):
        raise NotInNS('The form does not map H1 into Z[w]')
    rows = [[-(values[p] * values[q].conjugate()).alpha_part for q in range(10)] for p in range(10)]
    return TwoForm(rows)


def q_theta_gram(forms: Sequence[TwoForm]) -> List[List[int]]:
    pairing = _cube_pairing()
    sign = orientation()
    size = len(forms)
    gram = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            gram[a][b] = gram[b][a] = sign * pairing(forms[a], forms[b])
    return gram


@lru_cache(maxsize=None)
def neron_severi_forms() -> Tuple[TwoForm, ...]:
    return tuple(chern_of_endomorphism(m) for m in symmetric_endomorphisms())


def abelian_ns_report() -> Record:
    """Rank and discriminant of NS(A) = φ(End^s) under the pairing q_Θ."""
    forms = neron_severi_forms()
    gram = q_theta_gram(forms)
    return Record(
        rank=len(forms),
        independent=rank([f.vector() for f in forms]) == len(forms),
        discriminant=abs(determinant(gram)),
        theta_square=q_theta_pairing(theta_form(), theta_form()),
    )


def pullback_generators() -> List[fermat.DivisorClass]:
    """C − E_ij^β for the 30 curves, and Σ_{i<j} E_ij¹."""
    classes = [fermat.INCIDENCE - fermat.DivisorClass.curve(*label) for label in fermat.CURVES]
    classes.append(fermat.DivisorClass.sum_of(label for label in fermat.CURVES if label.beta == 0))
    return classes


def pullback_image_check() -> Record:
    classes = pullback_generators()
    rows = [c.pairings() for c in classes]
    gram = [[fermat.pair(a, b) for b in classes] for a in classes]
    discriminant = generated_lattice_discriminant(gram)
    return Record(
        rank=rank(rows),
        discriminant=discriminant,
        index=sublattice_index(rows, fermat.gram()),
        ns_discriminant=fermat.ns_discriminant(),
    )


def omega_invariant_under_generators() -> bool:
    vectors = split_lattice().basis
    return all(omega(g.apply(u), g.apply(v)) == omega(u, v) for g in GENERATORS for u in vectors for v in vectors)


def candidates_group_stable() -> bool:
    return all(c.is_stable_under(g) for c in build_candidates().values() for g in GENERATORS)


def lattice_report(name: str) -> Record:
    """ω on the basis of a candidate, with its determinant, Pfaffian and Galois image."""
    lattice = candidate(name)
    form, integral = omega_on_lattice(lattice)
    return Record(
        name=name,
        display_name=lattice.display_name,
        omega=[[str(x) for x in row] for row in form.rows()],
        determinant=str(form.determinant()),
        pfaffian=str(form.pfaffian()),
        integral=integral,
        galois_image=galois_substitute(lattice),
    )
