"""The complex reflection group G(3,3,5) acting on ℚ(α)⁵.

Elements are monomial matrices with cube roots of unity as entries whose
product is 1. They are stored as a permutation and an exponent vector:
M·e_j = α^{exps[j]}·e_{perm[j]}, indices 0-based.
"""
import logging
import time
from collections import deque, namedtuple
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from fano.eisenstein import EisensteinRational, EisVector, alpha_power, canonical_line_rep
from fano.lattice import rational_kernel

logger = logging.getLogger(__name__)

DIMENSION = 5

InvariantForms = namedtuple('InvariantForms', ['dimension', 'basis'])


class MonomialMatrix:

    __slots__ = ('perm', 'exps')

    def __init__(self, perm: Sequence[int], exps: Sequence[int] = (0,) * DIMENSION):
        perm = tuple(int(p) for p in perm)
        exps = tuple(int(e) % 3 for e in exps)
        if sorted(perm) != list(range(DIMENSION)) or len(exps) != DIMENSION:
            raise ValueError(f'Not a monomial {DIMENSION}x{DIMENSION} matrix: {perm}, {exps}')
        self.perm = perm
        self.exps = exps

    @classmethod
    def identity(cls) -> 'MonomialMatrix':
        return cls(range(DIMENSION))

    @classmethod
    def transposition(cls, i: int, j: int) -> 'MonomialMatrix':
        perm = list(range(DIMENSION))
        perm[i], perm[j] = perm[j], perm[i]
        return cls(perm)

    @classmethod
    def diagonal(cls, exps: Sequence[int]) -> 'MonomialMatrix':
        return cls(range(DIMENSION), exps)

    @property
    def in_group(self) -> bool:
        """The product of the nonzero entries is 1."""
        return sum(self.exps) % 3 == 0

    def __mul__(self, other: 'MonomialMatrix') -> 'MonomialMatrix':
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        perm = tuple(self.perm[other.perm[j]] for j in range(DIMENSION))
        exps = tuple(other.exps[j] + self.exps[other.perm[j]] for j in range(DIMENSION))
        return MonomialMatrix(perm, exps)

    def inverse(self) -> 'MonomialMatrix':
        perm = [0] * DIMENSION
        exps = [0] * DIMENSION
        for j in range(DIMENSION):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = -self.exps[j]
        return MonomialMatrix(perm, exps)

    def __eq__(self, other):
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.perm == other.perm and self.exps == other.exps

    def __hash__(self):
        return hash((self.perm, self.exps))

    def rows(self) -> List[List[EisensteinRational]]:
        rows = [[EisensteinRational(0)] * DIMENSION for _ in range(DIMENSION)]
        for j in range(DIMENSION):
            rows[self.perm[j]][j] = EisensteinRational(alpha_power(self.exps[j]))
        return rows

    def apply(self, v: EisVector) -> EisVector:
        coords = [EisensteinRational(0)] * DIMENSION
        for j in range(DIMENSION):
            coords[self.perm[j]] = v[j] * alpha_power(self.exps[j])
        return EisVector(coords)

    def act_on_line(self, i: int, j: int, beta: int) -> Tuple[int, int, int]:
        """Image of the line ℂ(e_i − α^beta·e_j), as (i', j', beta') with 1-based i' < j'."""
        return line_label(canonical_line_rep(self.apply(line_vector(i, j, beta))))

    def __repr__(self):
        return f'MonomialMatrix(perm={self.perm}, exps={self.exps})'


def line_vector(i: int, j: int, beta: int) -> EisVector:
    """e_i − α^beta·e_j for 1-based indices."""
    return EisVector.basis(i) - EisVector.basis(j) * alpha_power(beta)


def line_label(v: EisVector) -> Tuple[int, int, int]:
    """(i, j, beta) for a canonical vector e_i − α^beta·e_j.

    Raises:
        ValueError: if v is not of that shape
    """
    support = [k for k, c in enumerate(v) if c]
    if len(support) == 2 and v[support[0]] == 1:
        for beta in range(3):
            if -v[support[1]] == alpha_power(beta):
                return support[0] + 1, support[1] + 1, beta
    raise ValueError(f'{v!r} is not a line of the form e_i - b*e_j')


TRANSPOSITIONS = tuple(MonomialMatrix.transposition(i, i + 1) for i in range(DIMENSION - 1))

GENERATORS = TRANSPOSITIONS + (MonomialMatrix.diagonal((1, 1, 1, 1, 2)),)


@lru_cache(maxsize=None)
def enumerate_group() -> FrozenSet[MonomialMatrix]:
    """All elements of G(3,3,5), by breadth-first closure of GENERATORS."""
    started = time.perf_counter()
    seen = {MonomialMatrix.identity()}
    queue = deque(seen)
    while queue:
        element = queue.popleft()
        for g in GENERATORS:
            product = g * element
            if product not in seen:
                seen.add(product)
                queue.append(product)
    logger.info('enumerated {} group elements in {:.2f}s'.format(len(seen), time.perf_counter() - started))
    return frozenset(seen)


def line_orbit(start: EisVector, generators: Iterable[MonomialMatrix] = GENERATORS) -> FrozenSet[EisVector]:
    """Canonical representatives of the orbit of the line ℂ·start."""
    generators = tuple(generators)
    first = canonical_line_rep(start)
    seen = {first}
    queue = deque([first])
    while queue:
        line = queue.popleft()
        for g in generators:
            image = canonical_line_rep(g.apply(line))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def hermitian_coefficients():
    """Entries of a Hermitian matrix as linear forms in 25 rational parameters.

    Parameters 0..4 are the diagonal; each pair p < q then gets two parameters
    x, y with H_pq = x + yα and H_qp = x + yα².
    """
    size = DIMENSION * DIMENSION
    zero = EisensteinRational(0)
    alpha = EisensteinRational(alpha_power(1))
    alpha_bar = EisensteinRational(alpha_power(2))
    entries = [[[zero] * size for _ in range(DIMENSION)] for _ in range(DIMENSION)]
    for p in range(DIMENSION):
        entries[p][p][p] = EisensteinRational(1)
    t = DIMENSION
    for p in range(DIMENSION):
        for q in range(p + 1, DIMENSION):
            entries[p][q][t] = EisensteinRational(1)
            entries[q][p][t] = EisensteinRational(1)
            entries[p][q][t + 1] = alpha
            entries[q][p][t + 1] = alpha_bar
            t += 2
    return entries


def invariant_hermitian_forms(generators: Iterable[MonomialMatrix] = GENERATORS) -> InvariantForms:
    """Hermitian H with ᵗM·H·M̄ = H for every generator M.

    For monomial M this reads H_pq = α^{e_p − e_q}·H_{π(p)π(q)}; each such
    identity splits into a rational and an α part.
    """
    entries = hermitian_coefficients()
    size = DIMENSION * DIMENSION
    equations = []
    for g in generators:
        for p in range(DIMENSION):
            for q in range(DIMENSION):
                twist = alpha_power(g.exps[p] - g.exps[q])
                image = entries[g.perm[p]][g.perm[q]]
                coefficients = [image[t] * twist - entries[p][q][t] for t in range(size)]
                equations.append([c.rational_part for c in coefficients])
                equations.append([c.alpha_part for c in coefficients])
    kernel = rational_kernel(equations, size)
    basis = []
    for params in kernel:
        basis.append([[sum((entries[p][q][t] * params[t] for t in range(size) if params[t]), EisensteinRational(0))
                       for q in range(DIMENSION)] for p in range(DIMENSION)])
    logger.debug('invariant hermitian forms: dimension {}'.format(len(basis)))
    return InvariantForms(len(basis), basis)
