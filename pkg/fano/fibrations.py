"""Fibre classes F_ℓ of the elliptic fibrations given by linear forms ℓ ∈ Λ_A^*.

Λ_A^* is the ℤ[α]-span of the forms x_i − βx_j. For ℓ in it:
F·E_ij^β = |ℓ(e_i − βe_j)|², F·C = 2‖ℓ‖² and g(F) = 1 + 3‖ℓ‖².
"""
import logging
import random
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence

from fano import albanese, fermat
from fano.eisenstein import (EisensteinInt, EisVector, LAMBDA, ONE, ZERO, alpha_power, divisible_by_lambda,
                             eis_norm)
from fano.errors import NotInNS, NotSublattice, ZeroForm
from fano.fermat import CURVES, CurveLabel, DivisorClass
from fano.lattice import IntegralSolver
from fano.record import Record

logger = logging.getLogger(__name__)

COEFFICIENT_BOUND = 3


class LinearForm:
    """ℓ = Σ a_i x_i with Eisenstein integer coefficients."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(c if isinstance(c, EisensteinInt) else EisensteinInt(c) for c in coeffs)
        if len(coeffs) != 5:
            raise ValueError(f'A linear form has 5 coefficients, got {len(coeffs)}')
        self.coeffs = coeffs

    @classmethod
    def difference(cls, i: int, j: int, beta: int = 0) -> 'LinearForm':
        """x_i − α^beta·x_j, 1-based."""
        coeffs = [ZERO] * 5
        coeffs[i - 1] = ONE
        coeffs[j - 1] = -alpha_power(beta)
        return cls(coeffs)

    def __getitem__(self, item):
        return self.coeffs[item]

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __mul__(self, scalar):
        scalar = scalar if isinstance(scalar, EisensteinInt) else EisensteinInt(scalar)
        return LinearForm(scalar * a for a in self.coeffs)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return LinearForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return LinearForm(-a for a in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self + (-other)

    def norm_squared(self) -> int:
        """‖ℓ‖² = Σ |a_i|²."""
        return sum(eis_norm(a) for a in self.coeffs)

    def inner(self, other: 'LinearForm') -> EisensteinInt:
        """⟨ℓ, ℓ′⟩ = Σ ℓ(e_k)·conj(ℓ′(e_k))."""
        total = ZERO
        for a, b in zip(self.coeffs, other.coeffs):
            total = total + a * b.conjugate()
        return total

    def vector(self) -> EisVector:
        return EisVector(self.coeffs)

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs, start=1):
            if not a:
                continue
            if a == ONE:
                terms.append(f'x{k}')
            else:
                terms.append(f'({a})*x{k}')
        return ' + '.join(terms) if terms else '0'

    def __repr__(self):
        return f'LinearForm({self})'


def lambda_star_membership(form: LinearForm) -> bool:
    """Σ a_i ∈ (1 − α)ℤ[α]."""
    return divisible_by_lambda(sum(form.coeffs, ZERO))


def span_membership(form: LinearForm) -> bool:
    """Membership in the ℤ-span of the coefficient vectors of α^k(x_i − βx_j)."""
    return form.vector() in albanese.candidate('L0')


def _check(form: LinearForm):
    if not form:
        raise ZeroForm('The zero form defines no fibration')
    if not lambda_star_membership(form):
        raise NotInNS(f'{form} is not in the span of the forms x_i - b*x_j')


def curve_value(form: LinearForm, label: CurveLabel) -> int:
    """F_ℓ·E_ij^β = |a_i − β·a_j|²."""
    return eis_norm(form[label.i - 1] - alpha_power(label.beta) * form[label.j - 1])


def fiber_intersections(form: LinearForm) -> Record:
    """
    Raises:
        ZeroForm: for ℓ = 0
        NotInNS: for ℓ outside Λ_A^*
    """
    _check(form)
    return Record(curves={label: curve_value(form, label) for label in CURVES},
                  incidence=2 * form.norm_squared())


def fiber_genus(form: LinearForm) -> int:
    _check(form)
    return 1 + 3 * form.norm_squared()


def fiber_pair_degree(first: LinearForm, second: LinearForm) -> int:
    """F_ℓ·F_ℓ′ = ‖ℓ‖²‖ℓ′‖² − |⟨ℓ, ℓ′⟩|²."""
    _check(first)
    _check(second)
    return first.norm_squared() * second.norm_squared() - eis_norm(first.inner(second))


def exterior_pair_degree(first: LinearForm, second: LinearForm) -> int:
    """F_ℓ·F_ℓ′ computed as ∫ Θ³/3! ∧ Γ_ℓ*η ∧ Γ_ℓ′*η on A."""
    _check(first)
    _check(second)
    return albanese.q_theta_pairing(albanese.pullback_form(first.coeffs), albanese.pullback_form(second.coeffs))


def fiber_pairings(form: LinearForm) -> List[int]:
    """Intersection numbers of F_ℓ with the 31 generators."""
    values = fiber_intersections(form)
    return [values.curves[label] for label in CURVES] + [values.incidence]


@lru_cache(maxsize=None)
def _basis_solver() -> IntegralSolver:
    _, basis = fermat.ns_rank_and_basis()
    return IntegralSolver([b.pairings() for b in basis])


def fiber_class_coordinates(form: LinearForm) -> DivisorClass:
    """F_ℓ as an integer combination of the 25 basis curves and C.

    Raises:
        NotInNS: if no integral combination reproduces the intersection numbers
    """
    target = fiber_pairings(form)
    _, basis = fermat.ns_rank_and_basis()
    try:
        coefficients = _basis_solver().solve(target)
    except NotSublattice:
        raise NotInNS(f'F for {form} is not an integral class')
    result = DivisorClass()
    for value, generator in zip(coefficients, basis):
        if value:
            result = result + value * generator
    if list(result.pairings()) != target or fermat.pair(result, result) != 0:
        raise NotInNS(f'The class found for {form} does not reproduce its intersections')
    return result


def contracted(form: LinearForm) -> List[CurveLabel]:
    values = fiber_intersections(form).curves
    return [label for label in CURVES if values[label] == 0]


def sections(form: LinearForm) -> List[CurveLabel]:
    values = fiber_intersections(form).curves
    return [label for label in CURVES if values[label] == 1]


def lambda_multiple(i: int) -> LinearForm:
    """(1 − α)·x_i."""
    coeffs = [ZERO] * 5
    coeffs[i - 1] = LAMBDA
    return LinearForm(coeffs)


def singular_fibres(i: int) -> List[DivisorClass]:
    """B_jr + B_st, B_js + B_rt and B_jt + B_rs for {j < r < s < t} = {1..5} − {i}."""
    j, r, s, t = [k for k in range(1, 6) if k != i]
    return [fermat.b_sum(j, r) + fermat.b_sum(s, t), fermat.b_sum(j, s) + fermat.b_sum(r, t),
            fermat.b_sum(j, t) + fermat.b_sum(r, s)]


def critical_points(form: LinearForm) -> int:
    """Number of intersection points between contracted curves."""
    curves = contracted(form)
    return sum(fermat.curve_pair(a, b) for a, b in combinations(curves, 2) if a.indices.isdisjoint(b.indices))


def lambda_fibration_report(i: int) -> Record:
    form = lambda_multiple(i)
    fibre = fiber_class_coordinates(form)
    killed = set(contracted(form))
    fibres = singular_fibres(i)
    return Record(
        index=i,
        genus=fiber_genus(form),
        fibres=[str(f) for f in fibres],
        self_intersections=[fermat.pair(f, f) for f in fibres],
        genera=[fermat.genus_of_class(f) for f in fibres],
        components_contracted=all(set(f.curve_coeffs) <= killed for f in fibres),
        equal_to_fibre=all(f.numerically_equal(fibre) for f in fibres),
        critical_points=critical_points(form),
    )


def ten_curve_report(exponents: Sequence[int]) -> Record:
    """The fibration of ℓ = (1 − α)·Σ α^{k_i} x_i and the divisor Σ_{i<j} E_ij^{a_i/a_j}."""
    form = LinearForm(LAMBDA * alpha_power(k) for k in exponents)
    divisor = fermat.ten_curve_divisor(exponents)
    fibre = fiber_class_coordinates(form)
    killed = set(contracted(form))
    return Record(
        exponents=list(exponents),
        self_intersection=fermat.pair(divisor, divisor),
        genus=fermat.genus_of_class(divisor),
        fibre_genus=fiber_genus(form),
        components_contracted=set(divisor.curve_coeffs) <= killed,
        fibre_is_three_times=fibre.numerically_equal(3 * divisor),
    )


def shifted_form(a: EisensteinInt) -> LinearForm:
    """x₁ − (1 + (1 − α)a)·x₂."""
    return LinearForm([ONE, -(ONE + LAMBDA * a), ZERO, ZERO, ZERO])


def section_report(a: EisensteinInt) -> Record:
    form = shifted_form(a)
    values = fiber_intersections(form).curves
    listed_sections = [CurveLabel(1, j, beta) for j in (3, 4, 5) for beta in range(3)]
    listed_contracted = [CurveLabel(h, k, beta) for h, k in combinations((3, 4, 5), 2) for beta in range(3)]
    return Record(
        a=str(a),
        sections=sum(1 for label in listed_sections if values[label] == 1),
        contracted=sum(1 for label in listed_contracted if values[label] == 0),
        e12=values[CurveLabel(1, 2, 0)],
    )


def incidence_counts() -> List[tuple]:
    """(sections, contracted) for each fibration x_i − β²x_j."""
    counts = []
    for label in CURVES:
        form = LinearForm.difference(label.i, label.j, 2 * label.beta)
        counts.append((len(sections(form)), len(contracted(form))))
    return counts


def non_reduced_report() -> Record:
    """For ℓ = (1 − α)(x_i + βx_j) the curve E_ij^{β²} is contracted.

    The multiplicity of the single singular fibre is not visible numerically.
    """
    checked = []
    for i, j in combinations(range(1, 6), 2):
        for beta in range(3):
            coeffs = [ZERO] * 5
            coeffs[i - 1] = LAMBDA
            coeffs[j - 1] = LAMBDA * alpha_power(beta)
            checked.append(curve_value(LinearForm(coeffs), CurveLabel(i, j, (2 * beta) % 3)) == 0)
    return Record(contracted=all(checked), cases=len(checked), multiplicity='unverifiable')


def corollary_reports(seed: int = None) -> Record:
    rng = random.Random(seed)
    exponents = fermat.unit_product_exponents(rng)
    a = EisensteinInt(rng.randint(-COEFFICIENT_BOUND, COEFFICIENT_BOUND),
                      rng.randint(-COEFFICIENT_BOUND, COEFFICIENT_BOUND))
    return Record(
        lambda_fibrations=[lambda_fibration_report(i) for i in range(1, 6)],
        ten_curve=ten_curve_report(exponents),
        sections=section_report(a),
        connected_witness=section_report(alpha_power(2) - ONE),
        degenerate=section_report(ZERO),
        non_reduced=non_reduced_report(),
    )


def random_form(rng: random.Random) -> LinearForm:
    """A nonzero form of Λ_A^* with |a|, |b| ≤ COEFFICIENT_BOUND, a₅ adjusted for membership."""
    while True:
        pairs = [[rng.randint(-COEFFICIENT_BOUND, COEFFICIENT_BOUND) for _ in range(2)] for _ in range(5)]
        pairs[4][0] -= sum(a + b for a, b in pairs) % 3
        form = LinearForm(EisensteinInt(a, b) for a, b in pairs)
        if form:
            return form


def random_forms(seed: int, count: int) -> List[LinearForm]:
    rng = random.Random(seed)
    return [random_form(rng) for _ in range(count)]
