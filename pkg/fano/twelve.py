"""The family of Fano surfaces S_λ containing 12 elliptic curves.

The curves are E_45^β and E_ij^β with i < j ≤ 3. The second half of the
module does the intersection bookkeeping of the triple cover of the
blow-up Z of E_λ × E_λ at the nine 3-torsion points of the diagonal.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Tuple

from fano import fermat
from fano.lattice import determinant, generated_lattice_discriminant, rank, signature
from fano.record import Record

logger = logging.getLogger(__name__)

INDEX_PAIRS = ((4, 5), (1, 2), (1, 3), (2, 3))


class TwelveLabel(namedtuple('TwelveLabel', ['i', 'j', 'beta'])):

    __slots__ = ()

    def __new__(cls, i: int, j: int, beta: int = 0):
        if (i, j) not in INDEX_PAIRS or beta not in (0, 1, 2):
            raise ValueError(f'E{i}{j}^{beta} is not one of the twelve curves')
        return super().__new__(cls, i, j, beta)

    @property
    def kind(self) -> str:
        return 'E45' if (self.i, self.j) == (4, 5) else 'Eij'

    def as_fermat(self) -> fermat.CurveLabel:
        return fermat.CurveLabel(self.i, self.j, self.beta)

    def __str__(self):
        return str(self.as_fermat())


TWELVE = tuple(TwelveLabel(i, j, beta) for i, j in INDEX_PAIRS for beta in range(3))


def twelve_pair(first: TwelveLabel, second: TwelveLabel) -> int:
    if first == second:
        return fermat.SELF_INTERSECTION
    if first.kind != second.kind:
        return 1
    return 0


def gram_thirteen() -> List[List[int]]:
    """Gram matrix of the twelve curves and C, C last."""
    rows = [[twelve_pair(a, b) for b in TWELVE] + [fermat.C_DOT_CURVE] for a in TWELVE]
    rows.append([fermat.C_DOT_CURVE] * len(TWELVE) + [fermat.C_SQUARED])
    return rows


def matches_fermat_restriction() -> bool:
    g = fermat.gram()
    idx = [fermat.CURVE_INDEX[label.as_fermat()] for label in TWELVE] + [fermat.C_INDEX]
    return gram_thirteen() == [[g[a][b] for b in idx] for a in idx]


def lattice_report() -> Record:
    gram = gram_thirteen()
    curves = [row[:len(TWELVE)] for row in gram[:len(TWELVE)]]
    return Record(
        rank=rank(gram),
        discriminant=generated_lattice_discriminant(gram),
        curve_rank=rank(curves),
        curve_determinant=determinant(curves),
        signature=list(signature(gram)),
    )


def canonical_divisor() -> Dict[TwelveLabel, int]:
    """K = Σ_β 2E_45^β + E_12^β + E_13^β + E_23^β."""
    return {label: 2 if label.kind == 'E45' else 1 for label in TWELVE}


def _pair_combinations(first: Mapping[TwelveLabel, int], second: Mapping[TwelveLabel, int]) -> int:
    return sum(x * y * twelve_pair(a, b) for a, x in first.items() for b, y in second.items())


def canonical_check_twelve() -> Record:
    k = canonical_divisor()
    products = [_pair_combinations(k, {label: 1}) for label in TWELVE]
    return Record(
        k_dot_curves=sorted(set(products)),
        adjunction=all(fermat.SELF_INTERSECTION + value == 0 for value in products),
        k_squared=_pair_combinations(k, k),
    )


# rank of Hom between the factors of E₀³ × E_λ²: (E₀, E₀), (E_λ, E_λ), (E₀, E_λ)
HOM_RANKS = {
    'no_cm': (2, 1, 0),
    'cm_other_field': (2, 2, 0),
    'cm_Q_alpha': (2, 2, 2),
}


def picard_rank_cases(case: str) -> int:
    """ρ(E₀³ × E_λ²) = 5 + Σ over pairs of factors of rk Hom.

    Raises:
        ValueError: for a case outside HOM_RANKS
    """
    if case not in HOM_RANKS:
        raise ValueError(f'Unknown case {case}. Available cases are {list(HOM_RANKS.keys())}')
    same_zero, same_lambda, mixed = HOM_RANKS[case]
    factors = ['0'] * 3 + ['l'] * 2
    total = len(factors)
    for a, b in combinations(factors, 2):
        total += same_zero if a == b == '0' else same_lambda if a == b else mixed
    return total


BLOWUP_BASIS = ('f1', 'f2', 'D', 'T1', 'T2') + tuple(f'e{k}' for k in range(1, 10))

_PULLBACK_PAIRS = {
    ('f1', 'f2'): 1,
    ('f1', 'D'): 1, ('f2', 'D'): 1,
    ('f1', 'T1'): 4, ('f2', 'T1'): 1,
    ('f1', 'T2'): 1, ('f2', 'T2'): 4,
    ('D', 'T1'): 9, ('D', 'T2'): 9, ('T1', 'T2'): 9,
}


def _basis_pair(first: str, second: str) -> int:
    if first.startswith('e') or second.startswith('e'):
        return -1 if first == second and first.startswith('e') else 0
    return _PULLBACK_PAIRS.get((first, second), _PULLBACK_PAIRS.get((second, first), 0))


class BlowupClass:
    """A divisor on Z: pullbacks of fibres f₁, f₂, the diagonal Δ, the curves T₁, T₂,
    and the exceptional curves e₁, …, e₉."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Mapping[str, int] = None, **kwargs):
        values = dict(coeffs or {}, **kwargs)
        unknown = set(values) - set(BLOWUP_BASIS)
        if unknown:
            raise ValueError(f'Unknown generators {sorted(unknown)}. Available generators are {list(BLOWUP_BASIS)}')
        self.coeffs = {name: int(value) for name, value in values.items() if value}

    @classmethod
    def exceptional_sum(cls) -> 'BlowupClass':
        return cls({f'e{k}': 1 for k in range(1, 10)})

    def __add__(self, other):
        if not isinstance(other, BlowupClass):
            return NotImplemented
        values = dict(self.coeffs)
        for name, value in other.coeffs.items():
            values[name] = values.get(name, 0) + value
        return BlowupClass(values)

    def __neg__(self):
        return BlowupClass({name: -value for name, value in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, BlowupClass):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return BlowupClass({name: scalar * value for name, value in self.coeffs.items()})

    def __mul__(self, other):
        """Intersection number."""
        if not isinstance(other, BlowupClass):
            return NotImplemented
        return sum(x * y * _basis_pair(a, b) for a, x in self.coeffs.items() for b, y in other.coeffs.items())

    def pairings(self) -> Tuple[int, ...]:
        return tuple(self * BlowupClass({name: 1}) for name in BLOWUP_BASIS)

    def numerically_equal(self, other: 'BlowupClass') -> bool:
        return self.pairings() == other.pairings()

    def __eq__(self, other):
        if not isinstance(other, BlowupClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return 'BlowupClass({})'.format(' + '.join(f'{v}*{k}' for k, v in self.coeffs.items()) or '0')


def adjunction_genus(curve: BlowupClass, canonical: BlowupClass) -> int:
    total = curve * curve + canonical * curve
    return 1 + total // 2


def cover_consistency() -> Record:
    exceptional = BlowupClass.exceptional_sum()
    canonical = exceptional
    diagonal = BlowupClass(D=1) - exceptional
    first = BlowupClass(T1=1) - exceptional
    second = BlowupClass(T2=1) - exceptional
    transforms = [diagonal, first, second]
    branch = diagonal + first + second
    # c₂(Y) = 0 and each of the nine points adds 1
    c2_blowup = 0 + 9
    # the ramification curves are elliptic
    c2_surface = 3 * c2_blowup - 2 * 0
    ramification_square = _third(branch * branch)
    k_squared = 3 * (canonical * canonical) + 4 * (canonical * branch) + 4 * ramification_square
    return Record(
        diagonal_square=diagonal * diagonal,
        canonical_dot_diagonal=canonical * diagonal,
        disjoint=all(a * b == 0 for a, b in combinations(transforms, 2)),
        genera=[adjunction_genus(c, canonical) for c in transforms],
        t1_expression=BlowupClass(T1=1).numerically_equal(BlowupClass(f1=3, f2=6, D=-2)),
        branch_divisible=(BlowupClass(D=1, T1=1, T2=1)).numerically_equal(3 * BlowupClass(f1=3, f2=3, D=-1)),
        blowup_c1_squared=canonical * canonical,
        blowup_c2=c2_blowup,
        c2=c2_surface,
        k_squared_terms=[3 * (canonical * canonical), 4 * (canonical * branch), 4 * ramification_square],
        k_squared=k_squared,
        ramification_pullback=[9 * fermat.SELF_INTERSECTION, 3 * (diagonal * diagonal)],
        noether=Fraction(k_squared + c2_surface, 12),
    )


def _third(value: int) -> int:
    """R² from the branch divisor B = π(R): π*B = 3R gives 3B² = 9R²."""
    if value % 3:
        raise ValueError(f'{value} is not divisible by 3')
    return value // 3
