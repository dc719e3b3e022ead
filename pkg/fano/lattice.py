"""Exact linear algebra for lattices presented by generators.

Vectors are sequences of integers or fractions.Fraction. Matrix work is done
with sympy's DomainMatrix over ZZ and QQ; Hermite and Smith normal forms come
from sympy.polys.matrices.normalforms.
"""
import logging
import math
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors

from fano.errors import DegeneratePairing, NotSublattice

logger = logging.getLogger(__name__)

INFINITE_INDEX = math.inf

SmithForm = namedtuple('SmithForm', ['invariants', 'left', 'right'])


def _simplify(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def qq_matrix(rows: Sequence[Sequence], ncols: int = None) -> DomainMatrix:
    rows = [[Fraction(x) for x in row] for row in rows]
    ncols = len(rows[0]) if ncols is None else ncols
    data = [[QQ(x.numerator, x.denominator) for x in row] for row in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def zz_matrix(rows: Sequence[Sequence], ncols: int = None) -> DomainMatrix:
    rows = [list(row) for row in rows]
    ncols = len(rows[0]) if ncols is None else ncols
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), ncols), ZZ)


def fraction_rows(matrix: DomainMatrix) -> List[List[Fraction]]:
    if matrix.domain == ZZ:
        return [[Fraction(int(x)) for x in row] for row in matrix.to_list()]
    return [[_fraction(x) for x in row] for row in matrix.to_list()]


def is_integral(values: Iterable) -> bool:
    return all(Fraction(x).denominator == 1 for x in values)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return qq_matrix(rows).rank()


def determinant(rows: Sequence[Sequence]):
    if len(rows) == 0:
        return 1
    if any(len(row) != len(rows) for row in rows):
        raise ValueError('Determinant of a non-square matrix')
    return _simplify(_fraction(qq_matrix(rows).det()))


def pivot_rows(rows: Sequence[Sequence]) -> List[int]:
    """Indices of the lexicographically first maximal independent set of rows."""
    if not rows:
        return []
    _, pivots = qq_matrix(rows).transpose().rref()
    return list(pivots)


def rational_kernel(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """A basis of {x ∈ ℚⁿ : rows·x = 0}, one vector per free column of the rref."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = qq_matrix(rows, ncols).rref()
    entries = fraction_rows(reduced)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -entries[r][free]
        basis.append(v)
    return basis


def lattice_basis(generators: Iterable[Sequence]) -> List[Tuple[Fraction, ...]]:
    """A ℤ-basis of the group generated by rational vectors, read off the Hermite normal form."""
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    gens = [g for g in gens if any(g)]
    if not gens:
        return []
    dim = len(gens[0])
    scale = 1
    for g in gens:
        for x in g:
            scale = _lcm(scale, x.denominator)
    columns = [[int(x * scale) for x in g] for g in gens]
    # hermite_normal_form only scans the last min(rows, cols) rows
    columns += [[0] * dim for _ in range(dim - len(columns))]
    hnf = hermite_normal_form(zz_matrix(columns).transpose())
    entries = hnf.to_list()
    return [tuple(Fraction(int(entries[i][j]), scale) for i in range(dim)) for j in range(hnf.shape[1])]


class RowSolver:
    """Solves c·B = v for a matrix B with independent rows."""

    def __init__(self, rows: Sequence[Sequence], dim: int):
        self.dim = dim
        self.size = len(rows)
        if rows:
            b = qq_matrix(rows, dim)
            bt = b.transpose()
            self._b = b
            self._right = bt * (b * bt).inv()

    def solve(self, v: Sequence) -> Optional[List[Fraction]]:
        v = [Fraction(x) for x in v]
        if not self.size:
            return [] if not any(v) else None
        row = qq_matrix([v], self.dim)
        c = row * self._right
        if fraction_rows(c * self._b)[0] != v:
            return None
        return fraction_rows(c)[0]


class Lattice:
    """The subgroup of ℚⁿ generated by a finite list of vectors."""

    def __init__(self, generators: Iterable[Sequence], dim: int = None):
        self.generators = [tuple(Fraction(x) for x in g) for g in generators]
        if dim is None:
            if not self.generators:
                raise ValueError('The dimension of an empty lattice must be given')
            dim = len(self.generators[0])
        self.dim = dim
        self.basis = lattice_basis(self.generators)
        self._solver = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence) -> Optional[List[Fraction]]:
        """Rational coordinates of v in self.basis, or None when v is outside the rational span."""
        if self._solver is None:
            self._solver = RowSolver(self.basis, self.dim)
        return self._solver.solve(v)

    def __contains__(self, v) -> bool:
        c = self.coordinates(v)
        return c is not None and is_integral(c)

    def contains_lattice(self, other: 'Lattice') -> bool:
        return all(v in self for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.rank == other.rank and self.contains_lattice(other) and other.contains_lattice(self)

    __hash__ = None

    def index_in(self, other: 'Lattice'):
        return sublattice_index(self.generators, other)

    def __repr__(self):
        return f'Lattice(rank={self.rank}, dim={self.dim})'


def smith_normal_form(rows: Sequence[Sequence[int]], transforms: bool = False) -> SmithForm:
    """Invariant factors d₁ | d₂ | … of an integer matrix, zeros last.

    With transforms=True the unimodular matrices S, T with S·M·T diagonal are
    returned too (needs sympy's smith_normal_decomp).
    """
    matrix = zz_matrix(rows)
    size = min(matrix.shape)
    if transforms:
        from sympy.polys.matrices.normalforms import smith_normal_decomp
        smf, left, right = smith_normal_decomp(matrix)
        diagonal = [int(smf.to_list()[i][i]) for i in range(size)]
        return SmithForm(tuple(diagonal),
                         [[int(x) for x in row] for row in left.to_list()],
                         [[int(x) for x in row] for row in right.to_list()])
    nonzero = sorted(abs(int(d)) for d in invariant_factors(matrix) if d)
    return SmithForm(tuple(nonzero + [0] * (size - len(nonzero))), None, None)


def quotient_invariants(sub_generators: Iterable[Sequence], sup) -> Optional[Tuple[int, ...]]:
    """Invariant factors d > 1 of the finite group ⟨sup⟩/⟨sub⟩, or None when the index is infinite.

    Raises:
        NotSublattice: when some generator of sub is not in ⟨sup⟩
    """
    big = sup if isinstance(sup, Lattice) else Lattice(sup)
    if big.rank == 0:
        return ()
    coordinates = []
    for v in sub_generators:
        c = big.coordinates(v)
        if c is None or not is_integral(c):
            raise NotSublattice(f'{tuple(str(x) for x in v)} is not in the ambient lattice')
        coordinates.append([int(x) for x in c])
    if rank(coordinates) < big.rank:
        return None
    invariants = smith_normal_form(coordinates).invariants[:big.rank]
    logger.debug('quotient invariants {} (rank {})'.format(invariants, big.rank))
    return tuple(d for d in invariants if d > 1)


def sublattice_index(sub_generators: Iterable[Sequence], sup) -> int:
    """The index [⟨sup⟩ : ⟨sub⟩], or INFINITE_INDEX when the rational spans differ.

    Raises:
        NotSublattice: when some generator of sub is not in ⟨sup⟩
    """
    invariants = quotient_invariants(sub_generators, sup)
    if invariants is None:
        return INFINITE_INDEX
    index = 1
    for d in invariants:
        index *= d
    return index


def generated_lattice_discriminant(gram: Sequence[Sequence[int]]) -> int:
    """Discriminant of the lattice spanned by n classes with the given Gram matrix.

    The classes need not be independent. A class is identified with its row
    of pairings, so relations among the generators are quotiented out. A
    maximal independent set P of rows spans a sublattice of index m and the
    discriminant is |det G[P, P]| / m².

    Raises:
        ValueError: if the Gram matrix is not square and symmetric
        DegeneratePairing: if the induced pairing is degenerate
    """
    g = [[int(x) for x in row] for row in gram]
    n = len(g)
    if any(len(row) != n for row in g) or any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
        raise ValueError('A Gram matrix must be square and symmetric')
    pivots = pivot_rows(g)
    if not pivots:
        raise DegeneratePairing('The generators span the zero lattice')
    det = determinant([[g[i][j] for j in pivots] for i in pivots])
    if det == 0:
        raise DegeneratePairing('The induced pairing on the span is degenerate')
    index = sublattice_index([g[i] for i in pivots], g)
    disc = Fraction(abs(det), index * index)
    if disc.denominator != 1:
        raise DegeneratePairing(f'Non-integral discriminant {disc}')
    logger.debug('rank {} discriminant {} (pivot index {})'.format(len(pivots), disc, index))
    return disc.numerator


class IntegralSolver:
    """Finds integers x with Σ x_i·rows[i] = target for a fixed list of rows.

    Pivot rows are solved over ℚ; the remaining rows are fixed to a residue
    modulo the index of the pivot lattice in the full one.
    """

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.dim = len(self.rows[0]) if self.rows else 0
        self.pivots = pivot_rows(self.rows)
        self.rest = [i for i in range(len(self.rows)) if i not in self.pivots]
        self._solver = RowSolver([self.rows[i] for i in self.pivots], self.dim)
        self.modulus = sublattice_index([self.rows[i] for i in self.pivots], self.rows) if self.rest else 1

    def solve(self, target: Sequence) -> List[int]:
        """
        Raises:
            NotSublattice: if target is not an integral combination of the rows
        """
        target = [Fraction(x) for x in target]
        for residues in product(range(self.modulus), repeat=len(self.rest)):
            shifted = list(target)
            for r, i in zip(residues, self.rest):
                shifted = [t - r * x for t, x in zip(shifted, self.rows[i])]
            c = self._solver.solve(shifted)
            if c is not None and is_integral(c):
                x = [0] * len(self.rows)
                for value, i in zip(c, self.pivots):
                    x[i] = int(value)
                for r, i in zip(residues, self.rest):
                    x[i] = r
                return x
        raise NotSublattice('The target is not an integral combination of the rows')


def integral_coordinates(rows: Sequence[Sequence], target: Sequence) -> List[int]:
    """Integers x with Σ x_i·rows[i] = target.

    Raises:
        NotSublattice: if target is not an integral combination of rows
    """
    return IntegralSolver(rows).solve(target)


def integral_preimage(rows: Sequence[Sequence]) -> List[Tuple[Fraction, ...]]:
    """A ℤ-basis of {θ ∈ ℚⁿ : r·θ ∈ ℤ for every row r}.

    Raises:
        ValueError: if the rows do not span ℚⁿ
    """
    n = len(rows[0])
    basis = lattice_basis(rows)
    if len(basis) != n:
        raise ValueError(f'The constraints have rank {len(basis)}, expected {n}')
    inverse = fraction_rows(qq_matrix(basis).inv())
    return [tuple(inverse[i][j] for i in range(n)) for j in range(n)]


def signature(gram: Sequence[Sequence]) -> Tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a rational symmetric matrix.

    Exact: the characteristic polynomial of a real symmetric matrix has only
    real roots, so Descartes' rule of signs counts them.
    """
    n = len(gram)
    coeffs = [_fraction(c) for c in qq_matrix(gram).charpoly()]
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1
    kept = coeffs[:n + 1 - zero]

    def changes(values):
        signs = [v > 0 for v in values if v != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    positive = changes(kept)
    negative = changes([c * (-1) ** (n - i) for i, c in enumerate(kept)])
    return positive, negative, zero


class TwoForm:
    """An alternating form, stored as its antisymmetric matrix on a lattice basis."""

    __slots__ = ('dim', 'coeffs')

    def __init__(self, coeffs: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in coeffs)
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise ValueError('A TwoForm needs a square coefficient matrix')
        for p in range(dim):
            if rows[p][p] != 0:
                raise ValueError('A TwoForm has a zero diagonal')
            for q in range(p):
                if rows[p][q] != -rows[q][p]:
                    raise ValueError(f'Coefficients are not antisymmetric at ({p}, {q})')
        self.dim = dim
        self.coeffs = rows

    @classmethod
    def from_pairing(cls, vectors: Sequence, pairing) -> 'TwoForm':
        """The matrix (pairing(v_p, v_q)) on an ordered basis."""
        n = len(vectors)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for p in range(n):
            for q in range(p + 1, n):
                value = Fraction(pairing(vectors[p], vectors[q]))
                rows[p][q] = value
                rows[q][p] = -value
        return cls(rows)

    @classmethod
    def plane(cls, dim: int, p: int, q: int, value=1) -> 'TwoForm':
        """value·dx_p ∧ dx_q, with 0-based indices."""
        rows = [[0] * dim for _ in range(dim)]
        rows[p][q] = value
        rows[q][p] = -value
        return cls(rows)

    def __call__(self, p: int, q: int) -> Fraction:
        return self.coeffs[p][q]

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return TwoForm([[x + y for x, y in zip(r, s)] for r, s in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return TwoForm([[x - y for x, y in zip(r, s)] for r, s in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TwoForm([[-x for x in row] for row in self.coeffs])

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return TwoForm([[scalar * x for x in row] for row in self.coeffs])

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(is_integral(row) for row in self.coeffs)

    def vector(self) -> Tuple:
        """Upper-triangle entries in the order (0,1), (0,2), …, (dim−2, dim−1)."""
        return tuple(_simplify(self.coeffs[p][q]) for p, q in _pairs(self.dim))

    def determinant(self):
        return determinant(self.coeffs)

    def pfaffian(self):
        return pfaffian(self)

    def rows(self) -> List[List]:
        return [[_simplify(x) for x in row] for row in self.coeffs]

    def __repr__(self):
        return f'TwoForm(dim={self.dim})'


@lru_cache(maxsize=None)
def _pairs(dim: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((p, q) for p in range(dim) for q in range(p + 1, dim))


def pfaffian(form):
    """Pfaffian by expansion along the first row; Pf² = det.

    Raises:
        ValueError: for odd dimension
    """
    a = form.coeffs if isinstance(form, TwoForm) else TwoForm(form).coeffs
    if len(a) % 2:
        raise ValueError(f'Pfaffian of an odd-dimensional form ({len(a)})')
    return _simplify(_pfaffian(a, tuple(range(len(a)))))


def _pfaffian(a, idx):
    if not idx:
        return Fraction(1)
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    for k, j in enumerate(rest):
        if a[first][j]:
            sign = -1 if k % 2 else 1
            total += sign * a[first][j] * _pfaffian(a, rest[:k] + rest[k + 1:])
    return total


def perfect_matchings(items: Sequence):
    """Yields (sign, pairs) for every perfect matching of the sorted items.

    The sign is that of the permutation (p₁ q₁ p₂ q₂ …) with p < q in each pair.
    """
    items = list(items)
    if not items:
        yield 1, []
        return
    first, rest = items[0], items[1:]
    for k, item in enumerate(rest):
        for sign, pairs in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield (-sign if k % 2 else sign), [(first, item)] + pairs


@lru_cache(maxsize=None)
def _matchings(dim: int):
    return tuple((sign, tuple(pairs)) for sign, pairs in perfect_matchings(range(dim)))


def wedge_top_coefficient(forms: Sequence[TwoForm]):
    """Coefficient of dx₁ ∧ … ∧ dx_n in f₁ ∧ … ∧ f_k, n = 2k.

    This is the mixed Pfaffian: a sum over the perfect matchings of the
    coordinates, each weighted by its sign and by the permanent assigning the
    forms to its pairs.
    """
    forms = list(forms)
    dim = forms[0].dim
    if any(f.dim != dim for f in forms) or 2 * len(forms) != dim:
        raise ValueError(f'Need {dim // 2} forms of dimension {dim}')
    total = Fraction(0)
    for sign, pairs in _matchings(dim):
        values = [[f.coeffs[p][q] for p, q in pairs] for f in forms]
        term = Fraction(0)
        for perm in permutations(range(len(forms))):
            prod = Fraction(1)
            for i, j in enumerate(perm):
                prod *= values[i][j]
                if not prod:
                    break
            term += prod
        total += sign * term
    return _simplify(total)


class CubePairing:
    """The symmetric pairing (f, g) ↦ coefficient of θ^{k−2} ∧ f ∧ g divided by (k−2)!.

    θ is fixed, so the pairing matrix on the upper-triangle coordinates of
    the forms is computed once from the perfect matchings.
    """

    def __init__(self, theta: TwoForm):
        self.theta = theta
        dim = theta.dim
        index = {pair: i for i, pair in enumerate(_pairs(dim))}
        size = len(index)
        matrix = [[0] * size for _ in range(size)]
        for sign, pairs in _matchings(dim):
            values = [_simplify(theta.coeffs[p][q]) for p, q in pairs]
            for a, pa in enumerate(pairs):
                for b, pb in enumerate(pairs):
                    if a == b:
                        continue
                    prod = sign
                    for c, value in enumerate(values):
                        if c != a and c != b:
                            prod *= value
                            if not prod:
                                break
                    if prod:
                        matrix[index[pa]][index[pb]] += prod
        self.matrix = [[_simplify(x) for x in row] for row in matrix]

    def __call__(self, f: TwoForm, g: TwoForm):
        fv = f.vector()
        gv = g.vector()
        total = 0
        for a, x in enumerate(fv):
            if not x:
                continue
            row = self.matrix[a]
            total += x * sum(m * y for m, y in zip(row, gv) if m and y)
        return _simplify(total)
