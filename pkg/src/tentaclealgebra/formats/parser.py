"""Recursive-descent parser for the polynomial text grammar.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := signed (("*" | "/")? signed)*      implicit "*" between factors
    signed := ("+" | "-") signed | power
    power  := atom ("^" "-"? INTEGER)?
    atom   := NUMBER | NAME | "(" expr ")"

Coefficients are integers, decimals or ``p/q`` written with "/". Division is
only allowed by a constant, and negative powers only of monomials.
"""
import re
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import PolynomialSyntaxError
from ..exact.multipoly import MultiPoly, default_names

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into ``(kind, value, column)`` tokens; kinds are num, name and op."""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            break
        number, name, op = match.groups()
        column = match.start(match.lastindex or 0) + 1
        if number is not None:
            tokens.append(("num", number, column))
        elif name is not None:
            tokens.append(("name", name, column))
        elif op is not None:
            if op not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {op!r} at column {column}")
            tokens.append(("op", op, column))
        position = match.end()
    return tokens


class PolynomialParser:
    """Parser for one polynomial string over a fixed list of variable names."""

    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.tokens = tokenize(text)
        self.index = 0

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial")
        result = self._expr()
        if self.index < len(self.tokens):
            _, value, column = self.tokens[self.index]
            raise PolynomialSyntaxError(f"unexpected {value!r} at column {column}")
        return result

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token is not None and token[0] == "op" and token[1] == op:
            self.index += 1
            return True
        return False

    def _expect_end_column(self) -> int:
        return len(self.text) + 1

    def _expr(self) -> MultiPoly:
        result = self._term()
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _starts_factor(self) -> bool:
        token = self._peek()
        return token is not None and (token[0] in ("num", "name") or token[1] == "(")

    def _term(self) -> MultiPoly:
        result = self._signed()
        while True:
            if self._accept("*"):
                result = result * self._signed()
            elif self._accept("/"):
                column = self.tokens[self.index - 1][2]
                divisor = self._signed()
                constant = _constant_value(divisor)
                if constant is None or constant == 0:
                    raise PolynomialSyntaxError(
                        f"division at column {column} must be by a non-zero constant"
                    )
                result = result.scale(1 / constant)
            elif self._starts_factor():
                result = result * self._signed()
            else:
                return result

    def _signed(self) -> MultiPoly:
        if self._accept("-"):
            return -self._signed()
        if self._accept("+"):
            return self._signed()
        return self._power()

    def _power(self) -> MultiPoly:
        base = self._atom()
        if not self._accept("^"):
            return base
        negative = self._accept("-")
        token = self._peek()
        if token is None or token[0] != "num" or not token[1].isdigit():
            column = token[2] if token else self._expect_end_column()
            raise PolynomialSyntaxError(f"expected an integer exponent at column {column}")
        self.index += 1
        exponent = int(token[1])
        if not negative:
            return base ** exponent
        terms = base.terms
        if len(terms) != 1:
            raise PolynomialSyntaxError(
                f"negative power at column {token[2]} of something that is not a monomial"
            )
        ((exps, coeff),) = terms.items()
        return MultiPoly(
            self.nvars, {tuple(-exponent * e for e in exps): Fraction(1) / coeff ** exponent}
        )

    def _atom(self) -> MultiPoly:
        token = self._peek()
        if token is None:
            raise PolynomialSyntaxError(
                f"unexpected end of input at column {self._expect_end_column()}"
            )
        kind, value, column = token
        self.index += 1
        if kind == "num":
            return MultiPoly.constant(self.nvars, Fraction(value))
        if kind == "name":
            if value not in self.names:
                raise PolynomialSyntaxError(
                    f"unknown variable {value!r} at column {column}; expected one of "
                    f"{', '.join(self.names)}"
                )
            return MultiPoly.variable(self.nvars, self.names.index(value))
        if value == "(":
            inner = self._expr()
            if not self._accept(")"):
                raise PolynomialSyntaxError(f"unbalanced parenthesis opened at column {column}")
            return inner
        raise PolynomialSyntaxError(f"unexpected {value!r} at column {column}")


def _constant_value(poly: MultiPoly) -> Optional[Fraction]:
    terms = poly.terms
    if not terms:
        return Fraction(0)
    if len(terms) == 1:
        ((exps, coeff),) = terms.items()
        if not any(exps):
            return coeff
    return None


def variable_names(nvars: int, lifted: bool = False) -> Tuple[str, ...]:
    """Names for an n-variable polynomial, with ``t`` appended for lifted inputs."""
    names = default_names(nvars)
    return names + ("t",) if lifted else names


def parse_polynomial(text: str, names: Sequence[str] = ("x", "y")) -> MultiPoly:
    """Parse ``text`` into a polynomial over ``names``.

    Raises:
        PolynomialSyntaxError: With the column of the offending token
    """
    return PolynomialParser(text, names).parse()
