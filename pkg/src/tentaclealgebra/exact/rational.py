"""Exact rationals and polynomials in the generic parameter xi."""
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, str, Fraction]


def as_rat(value: RatLike) -> Fraction:
    """Convert an int, a Fraction or a ``"p/q"`` string to a Fraction.

    Floats are refused so that nothing inexact leaks into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rat(value: Fraction) -> str:
    """Render a rational canonically as ``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(a, b)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """Smallest N with every value in (1/N)Z."""
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


class XiPoly:
    """Univariate polynomial in xi with rational coefficients.

    Coefficients are indexed by xi-power; trailing zeros are trimmed, so the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RatLike] = ()):
        values = [as_rat(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: RatLike) -> "XiPoly":
        return cls((value,))

    @classmethod
    def xi(cls) -> "XiPoly":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree in xi; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on xi")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, value: RatLike) -> Fraction:
        point = as_rat(value)
        result = Fraction(0)
        for coeff in reversed(self.coeffs):
            result = result * point + coeff
        return result

    def scale(self, factor: RatLike) -> "XiPoly":
        factor = as_rat(factor)
        return XiPoly([c * factor for c in self.coeffs])

    def __add__(self, other: "XiPoly") -> "XiPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return XiPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "XiPoly":
        return XiPoly([-c for c in self.coeffs])

    def __sub__(self, other: "XiPoly") -> "XiPoly":
        return self + (-other)

    def __mul__(self, other: "XiPoly") -> "XiPoly":
        if self.is_zero() or other.is_zero():
            return XiPoly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return XiPoly(product)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XiPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[power]
            if coeff == 0:
                continue
            if power == 0:
                body = format_rat(coeff)
            else:
                name = "xi" if power == 1 else f"xi^{power}"
                if coeff == 1:
                    body = name
                elif coeff == -1:
                    body = f"-{name}"
                else:
                    body = f"{format_rat(coeff)}*{name}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")
