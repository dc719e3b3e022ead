"""Exact arithmetic over the Eisenstein integers ℤ[α], the order ℤ[3α] and ℚ(α).

α is a primitive cube root of unity, so α² = −1 − α. An element a + bα is
stored as the integer pair (a, b) and never as a complex number. Wherever an
imaginary part is needed, (2/√3)·Im(a + bα) is read off as the α-coefficient b.
"""
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from sympy import Integer, Rational, expand, ilcm, im, re, sqrt
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from fano.errors import NotDivisible, ZeroVector


class EisensteinInt:
    """The Eisenstein integer a + bα."""

    __slots__ = ('a', 'b')

    def __init__(self, a: int = 0, b: int = 0):
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, EisensteinInt):
            return other
        if isinstance(other, int):
            return cls(other, 0)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return eis_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f'Only nonnegative integer powers are supported, got {exp!r}')
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __truediv__(self, other):
        return EisensteinRational(self) / other

    def __rtruediv__(self, other):
        return EisensteinRational(other) / EisensteinRational(self)

    def conjugate(self) -> 'EisensteinInt':
        # a + bα² = (a − b) − bα
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return eis_norm(self)

    def __repr__(self):
        return f'EisensteinInt({self.a}, {self.b})'

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        if b == 1:
            w = 'w'
        elif b == -1:
            w = '-w'
        else:
            w = f'{b}*w'
        if a == 0:
            return w
        if w.startswith('-'):
            return f'{a}{w}'
        return f'{a}+{w}'


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
ALPHA = EisensteinInt(0, 1)
# the prime 1 − α above 3
LAMBDA = EisensteinInt(1, -1)


def alpha_power(k: int) -> EisensteinInt:
    """α^k, for any integer k."""
    return (ONE, ALPHA, EisensteinInt(-1, -1))[k % 3]


def eis_mul(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    ac = x.a * y.a
    bd = x.b * y.b
    return EisensteinInt(ac - bd, x.a * y.b + x.b * y.a - bd)


def eis_norm(x: EisensteinInt) -> int:
    return x.a * x.a - x.a * x.b + x.b * x.b


def eis_div_exact(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """Divide x by y inside ℤ[α].

    Raises:
        NotDivisible: when y is zero or y does not divide x
    """
    n = eis_norm(y)
    if n == 0:
        raise NotDivisible('Division by zero in Z[w]')
    p = eis_mul(x, y.conjugate())
    if p.a % n or p.b % n:
        raise NotDivisible(f'{y} does not divide {x} in Z[w]')
    return EisensteinInt(p.a // n, p.b // n)


def divisible_by_lambda(x: EisensteinInt) -> bool:
    """True iff x lies in the prime ideal (1 − α)."""
    try:
        eis_div_exact(x, LAMBDA)
    except NotDivisible:
        return False
    return True


class EisensteinRational:
    """An element num/den of ℚ(α), always kept in lowest terms with den > 0."""

    __slots__ = ('num', 'den')

    def __init__(self, num=0, den: int = 1):
        if isinstance(num, EisensteinRational):
            num, den = num.num, num.den * den
        elif isinstance(num, Fraction):
            num, den = EisensteinInt(num.numerator), num.denominator * den
        elif isinstance(num, int):
            num = EisensteinInt(num)
        if not isinstance(num, EisensteinInt):
            raise TypeError(f'Cannot build an element of Q(w) from {num!r}')
        if den == 0:
            raise ZeroDivisionError('EisensteinRational with zero denominator')
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(num.a, num.b), den)
        if g > 1:
            num, den = EisensteinInt(num.a // g, num.b // g), den // g
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, EisensteinRational):
            return other
        if isinstance(other, (EisensteinInt, int, Fraction)):
            return cls(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.num.a, self.num.b, self.den))

    def __bool__(self):
        return bool(self.num)

    def __neg__(self):
        return EisensteinRational(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinRational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = eis_norm(other.num)
        if n == 0:
            raise ZeroDivisionError('Division by zero in Q(w)')
        return EisensteinRational(self.num * other.num.conjugate() * other.den, self.den * n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exp: int):
        if exp < 0:
            return EisensteinRational(1) / self ** -exp
        return EisensteinRational(self.num ** exp, self.den ** exp)

    def conjugate(self) -> 'EisensteinRational':
        return EisensteinRational(self.num.conjugate(), self.den)

    def norm(self) -> Fraction:
        return Fraction(eis_norm(self.num), self.den * self.den)

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.num.a, self.den)

    @property
    def alpha_part(self) -> Fraction:
        """The α-coefficient; equals (2/√3)·Im of the element."""
        return Fraction(self.num.b, self.den)

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def in_order_three(self) -> bool:
        """Membership in the order ℤ[3α]."""
        return self.den == 1 and self.num.b % 3 == 0

    def to_integer(self) -> EisensteinInt:
        if self.den != 1:
            raise NotDivisible(f'{self} is not in Z[w]')
        return self.num

    def __repr__(self):
        return f'EisensteinRational({self.num!r}, {self.den})'

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f'({self.num})/{self.den}'


def as_rational(x) -> EisensteinRational:
    if isinstance(x, EisensteinRational):
        return x
    return EisensteinRational(x)


class EisVector:
    """A vector of ℚ(α)⁵ written in the basis e₁, …, e₅."""

    __slots__ = ('coords',)

    DIMENSION = 5

    def __init__(self, coords: Iterable):
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != self.DIMENSION:
            raise ValueError(f'An EisVector has exactly {self.DIMENSION} coordinates, got {len(coords)}')
        self.coords = coords

    @classmethod
    def basis(cls, k: int) -> 'EisVector':
        """The standard vector e_k, 1 ≤ k ≤ 5."""
        return cls(1 if i == k else 0 for i in range(1, cls.DIMENSION + 1))

    @classmethod
    def zero(cls) -> 'EisVector':
        return cls([0] * cls.DIMENSION)

    @classmethod
    def from_real_coordinates(cls, values: Sequence) -> 'EisVector':
        """Inverse of real_coordinates."""
        coords = []
        for k in range(cls.DIMENSION):
            a, b = Fraction(values[2 * k]), Fraction(values[2 * k + 1])
            den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
            coords.append(EisensteinRational(EisensteinInt(int(a * den), int(b * den)), den))
        return cls(coords)

    def real_coordinates(self) -> Tuple[Fraction, ...]:
        """The ten rational coordinates (a₁, b₁, …, a₅, b₅) of Σ (a_k + b_k α) e_k."""
        values = []
        for c in self.coords:
            values.append(c.rational_part)
            values.append(c.alpha_part)
        return tuple(values)

    def __getitem__(self, item):
        return self.coords[item]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return self.DIMENSION

    def __eq__(self, other):
        if not isinstance(other, EisVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        if not isinstance(other, EisVector):
            return NotImplemented
        return EisVector(x + y for x, y in zip(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, EisVector):
            return NotImplemented
        return EisVector(x - y for x, y in zip(self.coords, other.coords))

    def __neg__(self):
        return EisVector(-x for x in self.coords)

    def __mul__(self, scalar):
        scalar = EisensteinRational._coerce(scalar)
        if scalar is None:
            return NotImplemented
        return EisVector(scalar * x for x in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (EisensteinRational(1) / as_rational(scalar))

    def conjugate(self) -> 'EisVector':
        return EisVector(x.conjugate() for x in self.coords)

    def __repr__(self):
        return 'EisVector([{}])'.format(', '.join(str(c) for c in self.coords))


def hermitian_inner(u: EisVector, v: EisVector) -> EisensteinRational:
    """⟨u, v⟩ = Σ u_k · conj(v_k)."""
    total = EisensteinRational(0)
    for x, y in zip(u, v):
        total = total + x * y.conjugate()
    return total


def canonical_line_rep(v: EisVector) -> EisVector:
    """The multiple of v whose first nonzero coordinate is 1.

    Raises:
        ZeroVector: if v is zero
    """
    for c in v:
        if c:
            return v / c
    raise ZeroVector('The zero vector does not span a line')


# ℚ(α) as a sympy number field
_FIELD = QQ.algebraic_field(sqrt(-3))
_SYMPY_ALPHA = (sqrt(-3) - 1) / 2


def _to_field(x):
    x = as_rational(x)
    return _FIELD.from_sympy((Integer(x.num.a) + Integer(x.num.b) * _SYMPY_ALPHA) / Integer(x.den))


def _from_field(element) -> EisensteinRational:
    value = expand(_FIELD.to_sympy(element))
    b = Rational(2 * im(value) / sqrt(3))
    a = Rational(re(value)) + b / 2
    den = int(ilcm(a.q, b.q))
    return EisensteinRational(EisensteinInt(int(a.p) * (den // int(a.q)), int(b.p) * (den // int(b.q))), den)


def invert_matrix(rows: Sequence[Sequence]) -> List[List[EisensteinRational]]:
    """Inverse of a square matrix over ℚ(α), computed by sympy in ℚ(√−3).

    Raises:
        ValueError: if the matrix is not square or is singular
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError('Only square matrices can be inverted')
    matrix = DomainMatrix([[_to_field(x) for x in row] for row in rows], (n, n), _FIELD)
    if not matrix.det():
        raise ValueError('Matrix is singular over Q(w)')
    return [[_from_field(x) for x in row] for row in matrix.inv().to_list()]


def matrix_product(left: Sequence[Sequence], right: Sequence[Sequence]) -> List[List[EisensteinRational]]:
    inner = len(right)
    cols = len(right[0])
    return [[sum((as_rational(row[k]) * right[k][j] for k in range(inner)), EisensteinRational(0))
             for j in range(cols)] for row in left]


def apply_matrix(rows: Sequence[Sequence], v: EisVector) -> EisVector:
    """The vector M·v for a 5×5 matrix M over ℚ(α)."""
    return EisVector(sum((as_rational(m) * x for m, x in zip(row, v)), EisensteinRational(0)) for row in rows)
