"""Verification suites.

Each suite recomputes the claims listed in the matching fano.claims module
and compares exact renderings of the expected and computed values.
"""
import json
import logging
import random
import sys
import time
from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, List, Sequence, TextIO

from sympy import factorint

from fano import albanese, fermat, fibrations, twelve
from fano.claims import CLAIMS, claims_for
from fano.eisenstein import (EisensteinInt, EisVector, LAMBDA, ONE, ZERO, alpha_power, as_rational,
                             canonical_line_rep, divisible_by_lambda, eis_div_exact, eis_mul, eis_norm,
                             hermitian_inner)
from fano.errors import FanoError, NotDivisible, UnknownSuite
from fano.fermat import CurveLabel, DivisorClass
from fano.fibrations import LinearForm
from fano.group import (TRANSPOSITIONS, enumerate_group, invariant_hermitian_forms, line_orbit, line_vector)
from fano.lattice import (Lattice, determinant, generated_lattice_discriminant, pfaffian, rank, smith_normal_form,
                          sublattice_index)
from fano.record import Record

logger = logging.getLogger(__name__)

DEFAULT_SUITE = 'all'

DEFAULT_SEED = 1729

# integers at least this large are also shown factored
FACTOR_THRESHOLD = 1000

FORMATS = ('text', 'json')


def render(value) -> str:
    """Exact rendering shared by expected and computed values."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return render(value.numerator)
        return f'{value.numerator}/{value.denominator}'
    if isinstance(value, int):
        if abs(value) < FACTOR_THRESHOLD:
            return str(value)
        factors = '*'.join(f'{p}^{e}' if e > 1 else str(p) for p, e in sorted(factorint(abs(value)).items()))
        sign = '-' if value < 0 else ''
        return f'{sign}{factors} ({value})'
    if isinstance(value, (list, tuple)):
        return '[{}]'.format(', '.join(render(v) for v in value))
    return str(value)


def _random_eisenstein(rng: random.Random, bound: int = 50) -> EisensteinInt:
    return EisensteinInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def _random_vector(rng: random.Random) -> EisVector:
    return EisVector(_random_eisenstein(rng, 5) for _ in range(5))


def _random_unit(rng: random.Random) -> EisensteinInt:
    return rng.choice((ONE, -ONE)) * alpha_power(rng.randrange(3))


def ring_axioms_hold(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        x, y, z = (_random_eisenstein(rng) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * y != y * x or x * (y + z) != x * y + x * z:
            return False
        if eis_mul(x, y) != x * y or x - x != ZERO or x * ONE != x:
            return False
    return True


def norm_multiplicative(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        x, y = _random_eisenstein(rng), _random_eisenstein(rng)
        if eis_norm(x * y) != eis_norm(x) * eis_norm(y):
            return False
    return True


def lambda_criterion(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    return all(divisible_by_lambda(x) == (eis_norm(x) % 3 == 0)
               for x in (_random_eisenstein(rng) for _ in range(cases)))


def hermitian_symmetry(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        u, v = _random_vector(rng), _random_vector(rng)
        if hermitian_inner(u, v) != hermitian_inner(v, u).conjugate():
            return False
    return True


def line_rep_unit_invariance(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        v = _random_vector(rng)
        if not v:
            continue
        if canonical_line_rep(v * _random_unit(rng)) != canonical_line_rep(v):
            return False
        checked += 1
    return True


def pfaffian_squares_to_determinant(seed: int, cases: int = 50) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        dim = 2 * rng.randint(1, 4)
        rows = [[0] * dim for _ in range(dim)]
        for p, q in combinations(range(dim), 2):
            rows[p][q] = rng.randint(-5, 5)
            rows[q][p] = -rows[p][q]
        if pfaffian(rows) ** 2 != determinant(rows):
            return False
    return True


def _two_not_divisible() -> bool:
    try:
        eis_div_exact(EisensteinInt(2), LAMBDA)
    except NotDivisible:
        return True
    return False


def arith_checks(seed: int) -> Dict[str, Callable]:
    scaled = albanese.W / (albanese.ALPHA - 1)
    # A2 spanned by a, b and a + b
    a2_dependent = [[2, -1, 1], [-1, 2, 1], [1, 1, 2]]
    return {
        'arith.alpha_cubed': lambda: alpha_power(1) ** 3,
        'arith.alpha_squared': lambda: alpha_power(1) * alpha_power(1),
        'arith.one_plus_alpha_squared': lambda: (ONE + alpha_power(1)) ** 2,
        'arith.lambda_norm': lambda: LAMBDA * LAMBDA.conjugate(),
        'arith.three_over_lambda': lambda: eis_div_exact(EisensteinInt(3), LAMBDA),
        'arith.two_not_divisible': _two_not_divisible,
        'arith.inner_pair': lambda: LinearForm.difference(4, 5, 2).inner(LinearForm.difference(4, 5, 1)),
        'arith.inner_scaled_w': lambda: hermitian_inner(scaled, scaled * albanese.ALPHA),
        'arith.ring_axioms': lambda: ring_axioms_hold(seed),
        'arith.norm_multiplicative': lambda: norm_multiplicative(seed),
        'arith.lambda_criterion': lambda: lambda_criterion(seed),
        'arith.hermitian_symmetry': lambda: hermitian_symmetry(seed),
        'arith.line_rep_unit_invariance': lambda: line_rep_unit_invariance(seed),
        'core.smith_example': lambda: smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).invariants,
        'core.index_example': lambda: sublattice_index([[2, 0], [0, 3]], [[1, 0], [0, 1]]),
        'core.infinite_index': lambda: sublattice_index([[1, 0]], [[1, 0], [0, 1]]) == float('inf'),
        'core.discriminant_dependent': lambda: generated_lattice_discriminant(a2_dependent),
        'core.pfaffian_squared': lambda: pfaffian_squares_to_determinant(seed),
    }


def _sorted_group():
    return sorted(enumerate_group(), key=lambda g: (g.perm, g.exps))


def group_closure(seed: int, cases: int = 200) -> bool:
    rng = random.Random(seed)
    elements = _sorted_group()
    members = enumerate_group()
    for _ in range(cases):
        g, h = rng.choice(elements), rng.choice(elements)
        if g * h not in members or g.inverse() not in members or g * g.inverse() != h * h.inverse():
            return False
    return True


def _all_lines():
    return {line_vector(i, j, beta) for i, j in combinations(range(1, 6), 2) for beta in range(3)}


def _invariant_forms_are_scalar() -> bool:
    forms = invariant_hermitian_forms()
    for h in forms.basis:
        if any(h[p][q] for p in range(5) for q in range(5) if p != q):
            return False
        if len({h[p][p] for p in range(5)}) != 1:
            return False
    return True


def group_checks(seed: int) -> Dict[str, Callable]:
    orbit = lru_cache(maxsize=None)(lambda: line_orbit(line_vector(1, 2, 0)))
    identity = tuple(range(5))
    return {
        'group.order': lambda: len(enumerate_group()),
        'group.monomial': lambda: all(g.in_group for g in enumerate_group()),
        'group.diagonal_subgroup': lambda: sum(1 for g in enumerate_group() if g.perm == identity),
        'group.closure': lambda: group_closure(seed),
        'group.orbit_size': lambda: len(orbit()),
        'group.orbit_is_all_lines': lambda: set(orbit()) == {canonical_line_rep(v) for v in _all_lines()},
        'group.invariant_dimension': lambda: invariant_hermitian_forms().dimension,
        'group.invariant_scalar': _invariant_forms_are_scalar,
        'group.permutation_invariant_dimension': lambda: invariant_hermitian_forms(TRANSPOSITIONS).dimension,
        'group.gram_invariant': fermat.gram_invariant_under_generators,
        'group.omega_invariant': albanese.omega_invariant_under_generators,
    }


def _ns_rank_bounds() -> bool:
    g = fermat.gram()
    curves = [row[:fermat.C_INDEX] for row in g[:fermat.C_INDEX]]
    basis = [fermat.CURVE_INDEX[label] for label in fermat.basis_labels()]
    ranks = [rank(g), rank(curves), rank([[g[a][b] for b in basis] for a in basis])]
    return all(1 <= r <= 25 for r in ranks)


def _seeded_exponents(seed: int) -> List[int]:
    return fermat.unit_product_exponents(random.Random(seed))


def ns_fermat_checks(seed: int) -> Dict[str, Callable]:
    kernel = lru_cache(maxsize=None)(fermat.relations_kernel)
    canonical = lru_cache(maxsize=None)(fermat.verify_canonical_identities)
    b_fibre = fermat.b_sum(1, 2) + fermat.b_sum(3, 4)
    ten = fermat.ten_curve_divisor(_seeded_exponents(seed))
    incidence_fibre = fermat.INCIDENCE - DivisorClass.curve(1, 2, 0)
    return {
        'ns.rank': lambda: fermat.ns_rank_and_basis()[0],
        'ns.basis_size': lambda: len(fermat.ns_rank_and_basis()[1]),
        'ns.basis_curve_determinant': fermat.basis_curve_determinant,
        'ns.discriminant': fermat.ns_discriminant,
        'ns.basis_discriminant': fermat.basis_discriminant,
        'ns.curve_discriminant': fermat.curve_lattice_discriminant,
        'ns.curve_index': fermat.curve_sublattice_index,
        'ns.basis_index_in_curves': fermat.basis_index_in_curves,
        'ns.signature': fermat.gram_signature,
        'ns.rank_bounds': _ns_rank_bounds,
        'ns.kernel_rank': lambda: kernel().rank,
        'ns.relations_in_kernel': lambda: kernel().relations_in_kernel,
        'ns.relations_generate_kernel': lambda: kernel().generates_kernel,
        'ns.k_squared': lambda: canonical().k_squared,
        'ns.k_dot_curves': lambda: canonical().k_dot_curves,
        'ns.adjunction': lambda: canonical().adjunction,
        'ns.sigma_twice_canonical': lambda: canonical().sigma_is_twice_canonical,
        'ns.sigma_dot_c': lambda: canonical().sigma_dot_c,
        'ns.b_fibre_square': lambda: fermat.pair(b_fibre, b_fibre),
        'ns.b_fibre_genus': lambda: fermat.genus_of_class(b_fibre),
        'ns.ten_curve_square': lambda: fermat.pair(ten, ten),
        'ns.ten_curve_genus': lambda: fermat.genus_of_class(ten),
        'ns.incidence_fibre_genus': lambda: fermat.genus_of_class(incidence_fibre),
        'ns.sections_contractions': lambda: sorted({fermat.sections_and_contractions(label)
                                                    for label in fermat.CURVES}),
    }


def _line_lattice(vectors: Sequence[EisVector]) -> Lattice:
    return Lattice([v.real_coordinates() for v in vectors], dim=10)


def _h1_line(direction: EisVector, expected: Sequence[EisVector]) -> bool:
    return _line_lattice(albanese.line_intersection(albanese.h1(), direction)) == _line_lattice(expected)


def period_lattice_checks(seed: int) -> Dict[str, Callable]:
    structure = lru_cache(maxsize=None)(albanese.candidate_structure)
    omega_l0 = lru_cache(maxsize=None)(lambda: albanese.omega_on_lattice(albanese.candidate('L0'))[0])
    curve_direction = line_vector(1, 2, 1)
    w_direction = albanese.W * (as_rational(alpha_power(2)) / LAMBDA)
    return {
        'lattice.chain': lambda: structure().chain,
        'lattice.distinct': lambda: structure().distinct,
        'lattice.top_index': lambda: structure().top_index,
        'lattice.quotient': lambda: structure().quotient,
        'lattice.intermediate_indices': lambda: structure().intermediate_indices,
        'lattice.congruence': lambda: albanese.congruence_lattice() == albanese.candidate('L0'),
        'lattice.split_is_lw1': lambda: albanese.split_lattice() == albanese.candidate('Lw-1'),
        'lattice.split_witness': lambda: albanese.split_witness(albanese.candidate('Lw-1')),
        'lattice.omega_split_det': lambda: albanese.omega_on_lattice(albanese.split_lattice())[0].determinant(),
        'lattice.omega_l0_det': lambda: omega_l0().determinant(),
        'lattice.omega_l0_pfaffian': lambda: abs(omega_l0().pfaffian()),
        'lattice.omega_l_integral': lambda: albanese.omega_on_lattice(albanese.candidate('L'))[1],
        'lattice.omega_l_witness': lambda: abs(albanese.extra_generator_omega()),
        'lattice.galois_swap': lambda: [albanese.galois_substitute(albanese.candidate(name)) for name in ('L1', 'Lw')],
        'lattice.galois_fixed': lambda: [name for name in albanese.CANDIDATES
                                         if albanese.galois_substitute(albanese.candidate(name)) == name],
        'lattice.group_stable': albanese.candidates_group_stable,
        'h1.selected': lambda: albanese.DISPLAY_NAMES[albanese.elimination().selected],
        'h1.pfaffian': lambda: abs(albanese.omega_on_lattice(albanese.select_H1())[0].pfaffian()),
        'h1.presentations_equal': lambda: albanese.h1_presentation() == albanese.candidate('Lw2'),
        'h1.line_curve': lambda: _h1_line(curve_direction, [curve_direction, curve_direction * albanese.ALPHA]),
        'h1.line_w': lambda: _h1_line(w_direction, [w_direction, w_direction * (albanese.ALPHA * 3)]),
    }


def trace_formula_holds(count: int = 5) -> bool:
    """q(φ(M), φ(N)) = tr M·tr N − tr MN on the first basis endomorphisms."""
    matrices = albanese.symmetric_endomorphisms()[:count]
    forms = albanese.neron_severi_forms()[:count]
    for a, b in combinations_with_replacement(range(len(matrices)), 2):
        expected = matrices[a].trace() * matrices[b].trace() - (matrices[a] * matrices[b]).trace()
        if expected.alpha_part != 0:
            return False
        if albanese.q_theta_pairing(forms[a], forms[b]) != expected.rational_part:
            return False
    return True


def _fibre_form(form: LinearForm):
    return albanese.pullback_form(form.coeffs)


def ns_albanese_checks(seed: int) -> Dict[str, Callable]:
    report = lru_cache(maxsize=None)(albanese.abelian_ns_report)
    pullback = lru_cache(maxsize=None)(albanese.pullback_image_check)
    x4x5 = LinearForm.difference(4, 5)
    return {
        'ends.rank': lambda: len(albanese.symmetric_endomorphisms()),
        'ends.preserve_h1': lambda: all(m.preserves(albanese.h1()) for m in albanese.symmetric_endomorphisms()),
        'ends.self_adjoint_u': lambda: all(albanese.self_adjoint_in_u_basis(m)
                                           for m in albanese.symmetric_endomorphisms()),
        'ends.independent': lambda: report().independent,
        'ends.theta_pfaffian': lambda: abs(pfaffian(albanese.theta_form())),
        'ends.theta_square': lambda: report().theta_square,
        'ends.trace_formula': trace_formula_holds,
        'ends.discriminant': lambda: report().discriminant,
        'ends.fibre_square': lambda: albanese.q_theta_pairing(_fibre_form(x4x5), _fibre_form(x4x5)),
        'ends.fibre_pair': lambda: albanese.q_theta_pairing(_fibre_form(LinearForm.difference(4, 5, 2)),
                                                            _fibre_form(LinearForm.difference(4, 5, 1))),
        'pullback.rank': lambda: pullback().rank,
        'pullback.discriminant': lambda: pullback().discriminant,
        'pullback.index': lambda: pullback().index,
        'pullback.consistency': lambda: pullback().discriminant == 4 * pullback().ns_discriminant,
    }


def membership_agrees(seed: int, cases: int = 50) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        raw = LinearForm(_random_eisenstein(rng, fibrations.COEFFICIENT_BOUND) for _ in range(5))
        adjusted = fibrations.random_form(rng)
        for form in (raw, adjusted):
            if fibrations.lambda_star_membership(form) != fibrations.span_membership(form):
                return False
    return True


def incidence_fibres_match() -> bool:
    for label in fermat.CURVES:
        form = LinearForm.difference(label.i, label.j, 2 * label.beta)
        expected = fermat.INCIDENCE - DivisorClass.curve(*label)
        if not fibrations.fiber_class_coordinates(form).numerically_equal(expected):
            return False
    return True


def pair_degrees_agree(seed: int, cases: int = 100) -> bool:
    forms = fibrations.random_forms(seed, 2 * cases)
    return all(fibrations.fiber_pair_degree(a, b) == fibrations.exterior_pair_degree(a, b)
               for a, b in zip(forms[::2], forms[1::2]))


def fibre_squares_vanish(seed: int, cases: int = 50) -> bool:
    for form in fibrations.random_forms(seed, cases):
        try:
            fibre = fibrations.fiber_class_coordinates(form)
        except FanoError:
            return False
        if fermat.pair(fibre, fibre) != 0 or fibrations.fiber_pair_degree(form, form) != 0:
            return False
        if fermat.genus_of_class(fibre) != fibrations.fiber_genus(form):
            return False
    return True


def curve_sums(seed: int, cases: int = 50) -> bool:
    return all(sum(fibrations.fiber_intersections(form).curves.values()) == 12 * form.norm_squared()
               for form in fibrations.random_forms(seed, cases))


def unit_invariance(seed: int, cases: int = 30) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        form, other = fibrations.random_form(rng), fibrations.random_form(rng)
        scaled = form * _random_unit(rng)
        if fibrations.fiber_intersections(scaled) != fibrations.fiber_intersections(form):
            return False
        if fibrations.fiber_genus(scaled) != fibrations.fiber_genus(form):
            return False
        if fibrations.fiber_pair_degree(scaled, other) != fibrations.fiber_pair_degree(form, other):
            return False
        if fibrations.sections(scaled) != fibrations.sections(form):
            return False
        first = fibrations.fiber_class_coordinates(scaled)
        if not first.numerically_equal(fibrations.fiber_class_coordinates(form)):
            return False
    return True


def _lambda_fibres_ok(reports) -> bool:
    return all(r.self_intersections == [0, 0, 0] and r.genera == [10, 10, 10]
               and r.components_contracted and r.equal_to_fibre for r in reports)


def _section_values(a: EisensteinInt) -> List[int]:
    r = fibrations.section_report(a)
    return [r.sections, r.contracted, r.e12]


def fibration_checks(seed: int) -> Dict[str, Callable]:
    reports = lru_cache(maxsize=None)(lambda: [fibrations.lambda_fibration_report(i) for i in range(1, 6)])
    ten = lru_cache(maxsize=None)(lambda: fibrations.ten_curve_report(_seeded_exponents(seed)))
    x4x5 = LinearForm.difference(4, 5)

    def x4x5_values():
        values = fibrations.fiber_intersections(x4x5)
        return [values.curves[CurveLabel(4, 5, 0)], values.curves[CurveLabel(4, 5, 1)],
                values.curves[CurveLabel(1, 2, 0)], values.incidence]

    return {
        'fib.membership_examples': lambda: [fibrations.lambda_star_membership(f) for f in (
            LinearForm.difference(1, 2), fibrations.lambda_multiple(1), LinearForm([1, 0, 0, 0, 0]))],
        'fib.membership_agrees': lambda: membership_agrees(seed),
        'fib.x4x5_intersections': x4x5_values,
        'fib.incidence_fibre_class': incidence_fibres_match,
        'fib.incidence_counts': lambda: sorted(set(fibrations.incidence_counts())),
        'fib.lambda_genus': lambda: fibrations.fiber_genus(fibrations.lambda_multiple(1)),
        'fib.lambda_singular_fibres': lambda: _lambda_fibres_ok(reports()),
        'fib.critical_points': lambda: sorted({r.critical_points for r in reports()}),
        'fib.ten_curve_square': lambda: ten().self_intersection,
        'fib.ten_curve_genus': lambda: ten().genus,
        'fib.ten_curve_fibre_genus': lambda: ten().fibre_genus,
        'fib.ten_curve_stein': lambda: ten().components_contracted and ten().fibre_is_three_times,
        'fib.shifted_witness': lambda: _section_values(alpha_power(2) - ONE),
        'fib.shifted_degenerate': lambda: _section_values(ZERO),
        'fib.non_reduced': lambda: fibrations.non_reduced_report().contracted,
        'fib.pair_degree_example': lambda: fibrations.fiber_pair_degree(LinearForm.difference(4, 5, 2),
                                                                       LinearForm.difference(4, 5, 1)),
        'fib.pair_degree_exterior': lambda: pair_degrees_agree(seed),
        'fib.fibre_square': lambda: fibre_squares_vanish(seed),
        'fib.curve_sum': lambda: curve_sums(seed),
        'fib.unit_invariance': lambda: unit_invariance(seed),
    }


def twelve_checks(seed: int) -> Dict[str, Callable]:
    lattice = lru_cache(maxsize=None)(twelve.lattice_report)
    canonical = lru_cache(maxsize=None)(twelve.canonical_check_twelve)
    cover = lru_cache(maxsize=None)(twelve.cover_consistency)
    return {
        'twelve.rank': lambda: lattice().rank,
        'twelve.discriminant': lambda: lattice().discriminant,
        'twelve.curve_determinant': lambda: lattice().curve_determinant,
        'twelve.signature': lambda: lattice().signature,
        'twelve.fermat_restriction': twelve.matches_fermat_restriction,
        'twelve.k_dot_curves': lambda: canonical().k_dot_curves,
        'twelve.k_squared': lambda: canonical().k_squared,
        'twelve.picard_cases': lambda: [twelve.picard_rank_cases(case) for case in twelve.HOM_RANKS],
        'twelve.rank_bounds': lambda: all(1 <= r <= 25 for r in [lattice().rank] + [
            twelve.picard_rank_cases(case) for case in twelve.HOM_RANKS]),
        'twelve.diagonal_square': lambda: cover().diagonal_square,
        'twelve.canonical_dot_diagonal': lambda: cover().canonical_dot_diagonal,
        'twelve.transforms_disjoint': lambda: cover().disjoint,
        'twelve.transform_genera': lambda: cover().genera,
        'twelve.t1_expression': lambda: cover().t1_expression,
        'twelve.branch_divisible': lambda: cover().branch_divisible,
        'twelve.c2': lambda: cover().c2,
        'twelve.k_squared_terms': lambda: cover().k_squared_terms,
        'twelve.cover_k_squared': lambda: cover().k_squared,
        'twelve.ramification': lambda: cover().ramification_pullback,
        'twelve.noether': lambda: cover().noether,
    }


SUITES = OrderedDict([
    ('arith', arith_checks),
    ('group', group_checks),
    ('ns-fermat', ns_fermat_checks),
    ('period-lattice', period_lattice_checks),
    ('ns-albanese', ns_albanese_checks),
    ('fibrations', fibration_checks),
    ('twelve-family', twelve_checks),
])


def suite_names() -> List[str]:
    return list(SUITES) + ['all']


def _run_claim(claim_id: str, claim: Record, check: Callable) -> Record:
    started = time.perf_counter()
    try:
        computed = render(check())
    except (FanoError, ArithmeticError, ValueError) as e:
        # a failing computation fails its own claim and the suite carries on
        logger.error('{} raised {}: {}'.format(claim_id, type(e).__name__, e))
        computed = f'error: {type(e).__name__}: {e}'
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))
    expected = render(claim.expected)
    status = 'pass' if computed == expected else 'fail'
    if status == 'fail':
        logger.warning('{} failed: expected {}, computed {}'.format(claim_id, expected, computed))
    return Record(
        claim_id=claim_id,
        description=claim.description,
        paper_anchor=claim.paper_anchor,
        expected=expected,
        computed=computed,
        status=status,
        elapsed_ms=elapsed_ms,
    )


def run_suite(name: str = DEFAULT_SUITE, seed: int = DEFAULT_SEED) -> List[Record]:
    """Verification reports for a suite, in claim order.

    Raises:
        UnknownSuite: for a name outside suite_names()
    """
    if name == 'all':
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuite(f'Unknown suite {name}. Available suites are {suite_names()}')
    reports = []
    for suite in names:
        started = time.perf_counter()
        checks = SUITES[suite](seed)
        for claim_id, claim in claims_for(suite).items():
            reports.append(_run_claim(claim_id, claim, checks[claim_id]))
        logger.info('suite {} ran in {:.2f}s'.format(suite, time.perf_counter() - started))
    return reports


def failed(reports: Sequence[Record]) -> List[Record]:
    return [r for r in reports if r.status != 'pass']


def exit_code(reports: Sequence[Record]) -> int:
    return 1 if failed(reports) else 0


def emit_report(reports: Sequence[Record], fmt: str = 'text', destination: TextIO = None,
                suite: str = DEFAULT_SUITE, seed: int = DEFAULT_SEED):
    """Write reports as aligned text lines or as one json document.

    Raises:
        ValueError: for an empty report list or an unknown format
    """
    if not reports:
        raise ValueError('There are no reports to emit')
    if fmt not in FORMATS:
        raise ValueError(f'Unknown format {fmt}. Available formats are {list(FORMATS)}')
    destination = destination or sys.stdout
    if fmt == 'json':
        document = Record(suite=suite, seed=seed, reports=list(reports))
        destination.write(json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + '\n')
        return
    id_width = max(len(r.claim_id) for r in reports)
    computed_width = max(len(r.computed) for r in reports)
    for r in reports:
        line = '{} {} {} {}'.format(r.status.upper().ljust(4), r.claim_id.ljust(id_width),
                                    r.computed.ljust(computed_width), r.expected)
        destination.write(line.rstrip() + '\n')
    destination.write('{} claims, {} failed (suite {}, seed {})\n'.format(len(reports), len(failed(reports)),
                                                                          suite, seed))


def load_reports(text: str) -> Record:
    """Parse a json document written by emit_report."""
    return Record.from_json(text)


def check_registry() -> List[str]:
    """Claim ids that have no check or checks that have no claim; empty when consistent."""
    problems = []
    for suite, builder in SUITES.items():
        claims = set(CLAIMS[suite])
        checks = set(builder(DEFAULT_SEED))
        problems.extend(sorted(claims ^ checks))
    return problems
