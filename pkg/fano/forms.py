"""Concrete syntax for linear forms ℓ = Σ a_i x_i.

Coefficients are written with integer literals, 'w' for α, '+', '-', '*',
'^' with a nonnegative integer exponent, and parentheses. Whitespace is
ignored. Examples: "(1-w)*x1", "x4 - (w^2)*x5", "x1 - (1+(1-w)*2)*x2".
"""
import re
from collections import namedtuple
from typing import List, Tuple

from fano.eisenstein import ALPHA, EisensteinInt, ONE, ZERO
from fano.errors import FormSyntaxError
from fano.fibrations import LinearForm

Token = namedtuple('Token', ['kind', 'text', 'position'])

FormExpr = namedtuple('FormExpr', ['source', 'form'])

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<alpha>w)|(?P<op>[-+*^()]))')


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == '':
            break
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            raise FormSyntaxError(f'Unexpected character {text[position:].lstrip()[:1]!r}',
                                  len(text) - len(text[position:].lstrip()))
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class _Linear:
    """constant + Σ coeffs[k]·x_{k+1} with Eisenstein integer coefficients."""

    __slots__ = ('constant', 'coeffs')

    def __init__(self, constant: EisensteinInt = ZERO, coeffs: Tuple = (ZERO,) * 5):
        self.constant = constant
        self.coeffs = tuple(coeffs)

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return _Linear(self.constant + other.constant, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return _Linear(-self.constant, [-a for a in self.coeffs])

    def scale(self, factor: EisensteinInt) -> '_Linear':
        return _Linear(factor * self.constant, [factor * a for a in self.coeffs])


class _Parser:

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str):
        if self.current.text != text:
            raise FormSyntaxError(f'Expected {text!r}', self.current.position)
        return self.advance()

    def parse(self) -> _Linear:
        value = self.expression()
        if self.current.kind != 'end':
            raise FormSyntaxError(f'Unexpected {self.current.text!r}', self.current.position)
        return value

    def expression(self) -> _Linear:
        value = self.term()
        while self.current.text in ('+', '-'):
            sign = self.advance().text
            right = self.term()
            value = value + (right if sign == '+' else -right)
        return value

    def term(self) -> _Linear:
        value = self.unary()
        while self.current.text == '*':
            token = self.advance()
            right = self.unary()
            if value.is_constant:
                value = right.scale(value.constant)
            elif right.is_constant:
                value = value.scale(right.constant)
            else:
                raise FormSyntaxError('Product of two variables is not linear', token.position)
        return value

    def unary(self) -> _Linear:
        if self.current.text == '-':
            self.advance()
            return -self.unary()
        if self.current.text == '+':
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> _Linear:
        base = self.atom()
        if self.current.text == '^':
            token = self.advance()
            if self.current.kind != 'int':
                raise FormSyntaxError('Exponents are nonnegative integers', self.current.position)
            exponent = int(self.advance().text)
            if not base.is_constant:
                raise FormSyntaxError('Only constants can be raised to a power', token.position)
            return _Linear(base.constant ** exponent)
        return base

    def atom(self) -> _Linear:
        token = self.current
        if token.kind == 'int':
            self.advance()
            return _Linear(EisensteinInt(int(token.text)))
        if token.kind == 'alpha':
            self.advance()
            return _Linear(ALPHA)
        if token.kind == 'var':
            index = int(token.text[1:])
            if not 1 <= index <= 5:
                raise FormSyntaxError(f'Unknown variable {token.text}, expected x1..x5', token.position)
            self.advance()
            coeffs = [ZERO] * 5
            coeffs[index - 1] = ONE
            return _Linear(ZERO, coeffs)
        if token.text == '(':
            self.advance()
            value = self.expression()
            self.expect(')')
            return value
        if token.kind == 'end':
            raise FormSyntaxError('Unexpected end of input', token.position)
        raise FormSyntaxError(f'Unexpected {token.text!r}', token.position)


def parse_linear_form(text: str) -> LinearForm:
    """
    Raises:
        FormSyntaxError: on malformed input, a nonlinear term, a variable
            outside x1..x5 or a nonzero constant term
    """
    value = _Parser(text).parse()
    if value.constant:
        raise FormSyntaxError(f'The form has a constant term {value.constant}')
    return LinearForm(value.coeffs)


def parse_form_expr(text: str) -> FormExpr:
    return FormExpr(text, parse_linear_form(text))
