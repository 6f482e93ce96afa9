"""Laurent-Puiseux series with a generic coefficient and planar Laurent polynomials.

Everything here is a finite exact sum; there is no truncation policy.
"""
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..errors import InputError, NoLeadingTermError, UnsupportedInputError
from .rational import RatLike, XiPoly, as_rat, format_rat, lcm_of_denominators

Term = Tuple[Fraction, XiPoly]


class PuiseuxSeries:
    """Finite sum of terms ``c(xi) * x^e`` with rational exponents.

    Terms are kept with strictly descending exponents and no zero coefficient.
    """

    __slots__ = ("_terms", "_index")

    def __init__(self, terms: Union[Mapping[Fraction, XiPoly], Iterable[Term], None] = None):
        collected: Dict[Fraction, XiPoly] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                exp = as_rat(exp)
                if not isinstance(coeff, XiPoly):
                    coeff = XiPoly.constant(coeff)
                if exp in collected:
                    coeff = collected[exp] + coeff
                collected[exp] = coeff
        ordered = sorted(
            ((e, c) for e, c in collected.items() if not c.is_zero()),
            key=lambda term: term[0],
            reverse=True,
        )
        self._terms: Tuple[Term, ...] = tuple(ordered)
        self._index: Dict[Fraction, XiPoly] = dict(ordered)

    @classmethod
    def zero(cls) -> "PuiseuxSeries":
        return cls()

    @classmethod
    def constant(cls, value: RatLike) -> "PuiseuxSeries":
        return cls([(Fraction(0), XiPoly.constant(value))])

    @classmethod
    def monomial(cls, coeff: Union[RatLike, XiPoly], exp: RatLike) -> "PuiseuxSeries":
        if not isinstance(coeff, XiPoly):
            coeff = XiPoly.constant(coeff)
        return cls([(as_rat(exp), coeff)])

    @classmethod
    def generic_monomial(cls, exp: RatLike) -> "PuiseuxSeries":
        """The term ``xi * x^exp``."""
        return cls([(as_rat(exp), XiPoly.xi())])

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    @property
    def ram(self) -> int:
        """Smallest N with every exponent in (1/N)Z."""
        return lcm_of_denominators(e for e, _ in self._terms)

    def exponents(self) -> List[Fraction]:
        return [e for e, _ in self._terms]

    def coefficient(self, exp: RatLike) -> XiPoly:
        return self._index.get(as_rat(exp), XiPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def is_xi_free(self) -> bool:
        return all(c.is_constant() for _, c in self._terms)

    def leading_term(self) -> Term:
        if not self._terms:
            raise NoLeadingTermError("no leading term: the series is zero")
        return self._terms[0]

    def lowest_exponent(self) -> Optional[Fraction]:
        return self._terms[-1][0] if self._terms else None

    def above(self, bound: RatLike) -> "PuiseuxSeries":
        """Terms with exponent strictly greater than ``bound``."""
        bound = as_rat(bound)
        return PuiseuxSeries([(e, c) for e, c in self._terms if e > bound])

    def at_xi(self, value: RatLike) -> "PuiseuxSeries":
        """Specialize the generic parameter to a rational value."""
        return PuiseuxSeries(
            [(e, XiPoly.constant(c.evaluate(value))) for e, c in self._terms]
        )

    def scale(self, factor: Union[RatLike, XiPoly]) -> "PuiseuxSeries":
        if not isinstance(factor, XiPoly):
            factor = XiPoly.constant(factor)
        return PuiseuxSeries([(e, c * factor) for e, c in self._terms])

    def shift_exponent(self, delta: RatLike) -> "PuiseuxSeries":
        """Multiply by ``x^delta``."""
        delta = as_rat(delta)
        return PuiseuxSeries([(e + delta, c) for e, c in self._terms])

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return PuiseuxSeries(list(self._terms) + list(other._terms))

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries([(e, -c) for e, c in self._terms])

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        product: Dict[Fraction, XiPoly] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                exp = e1 + e2
                term = c1 * c2
                product[exp] = product[exp] + term if exp in product else term
        return PuiseuxSeries(product)

    def __pow__(self, power: int) -> "PuiseuxSeries":
        if power < 0:
            raise InputError("series powers must be non-negative")
        result = PuiseuxSeries.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PuiseuxSeries):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"PuiseuxSeries({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self._terms:
            power = "" if exp == 0 else ("x" if exp == 1 else f"x^{format_rat(exp)}")
            if coeff.is_constant():
                value = coeff.constant_value()
                if not power:
                    body = format_rat(value)
                elif value == 1:
                    body = power
                elif value == -1:
                    body = f"-{power}"
                else:
                    body = f"{format_rat(value)}*{power}"
            else:
                body = f"({coeff})" + (f"*{power}" if power else "")
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


def series_combine(a: PuiseuxSeries, b: PuiseuxSeries, op: str) -> PuiseuxSeries:
    """Exact sum (``op="add"``) or product (``op="mul"``) of two series."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InputError(f"unknown series operation {op!r}; expected 'add' or 'mul'")


def leading_term(s: PuiseuxSeries) -> Term:
    """Highest exponent of ``s`` together with its coefficient."""
    return s.leading_term()


class LaurentPoly2:
    """Element of Q[x, 1/x, y]: coefficients keyed by ``(a, b)`` for ``x^a * y^b``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], RatLike]] = None):
        cleaned: Dict[Tuple[int, int], Fraction] = {}
        for (a, b), coeff in (terms or {}).items():
            if b < 0:
                raise InputError(f"negative y-exponent {b} in a Laurent polynomial")
            value = as_rat(coeff)
            if value != 0:
                cleaned[(int(a), int(b))] = value
        self._terms = cleaned

    @classmethod
    def x(cls) -> "LaurentPoly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "LaurentPoly2":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value: RatLike) -> "LaurentPoly2":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, coeff: RatLike, a: int, b: int) -> "LaurentPoly2":
        return cls({(a, b): coeff})

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def deg_y(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return max((b for _, b in self._terms), default=-1)

    def is_polynomial(self) -> bool:
        return all(a >= 0 for a, _ in self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def y_coefficients(self) -> List[Dict[int, Fraction]]:
        """Coefficients of the powers of y as ``{x-exponent: value}`` maps."""
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(self.deg_y() + 1)]
        for (a, b), coeff in self._terms.items():
            rows[b][a] = coeff
        return rows

    def is_monic_in_y(self) -> bool:
        top = self.deg_y()
        if top < 0:
            return False
        return self.y_coefficients()[top] == {0: Fraction(1)}

    def scale(self, factor: RatLike) -> "LaurentPoly2":
        factor = as_rat(factor)
        return LaurentPoly2({k: v * factor for k, v in self._terms.items()})

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, Fraction(0)) + coeff
        return LaurentPoly2(result)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        result: Dict[Tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return LaurentPoly2(result)

    def __pow__(self, power: int) -> "LaurentPoly2":
        if power < 0:
            raise InputError("polynomial powers must be non-negative")
        result = LaurentPoly2.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def divmod_y(self, divisor: "LaurentPoly2") -> Tuple["LaurentPoly2", "LaurentPoly2"]:
        """Division with remainder in y by a divisor that is monic in y."""
        if not divisor.is_monic_in_y():
            raise InputError(f"{divisor} is not monic in y")
        m = divisor.deg_y()
        quotient = LaurentPoly2()
        remainder = self
        while remainder.deg_y() >= m:
            top = remainder.deg_y()
            lead = LaurentPoly2(
                {(a, top - m): c for (a, b), c in remainder._terms.items() if b == top}
            )
            quotient = quotient + lead
            remainder = remainder - lead * divisor
        return quotient, remainder

    def evaluate(self, x: RatLike, y: RatLike) -> Fraction:
        xv, yv = as_rat(x), as_rat(y)
        return sum((c * xv ** a * yv ** b for (a, b), c in self._terms.items()), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Tuple[int, int], Fraction]]:
        """Terms ordered by descending y-power, then descending x-power."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), coeff in self.sorted_terms():
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            monomial = "*".join(factors)
            if not monomial:
                body = format_rat(coeff)
            elif coeff == 1:
                body = monomial
            elif coeff == -1:
                body = f"-{monomial}"
            else:
                body = f"{format_rat(coeff)}*{monomial}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


def _x_part(row: Mapping[int, Fraction]) -> PuiseuxSeries:
    return PuiseuxSeries([(Fraction(a), XiPoly.constant(c)) for a, c in row.items()])


def substitute(f: LaurentPoly2, y_series: PuiseuxSeries) -> PuiseuxSeries:
    """Expand ``f(x, y_series)`` exactly, collected by x-exponent."""
    rows = f.y_coefficients()
    result = PuiseuxSeries.zero()
    for row in reversed(rows):
        result = result * y_series + _x_part(row)
    return result


class SeriesPolyY:
    """Polynomial in y whose coefficients are Puiseux series in x.

    This is the working object of the Newton iteration: translating y by a
    series keeps it in this shape.
    """

    def __init__(self, coeffs: Iterable[PuiseuxSeries]):
        values = list(coeffs)
        while values and values[-1].is_zero():
            values.pop()
        self.coeffs: Tuple[PuiseuxSeries, ...] = tuple(values)

    @classmethod
    def from_laurent(cls, f: LaurentPoly2) -> "SeriesPolyY":
        return cls(_x_part(row) for row in f.y_coefficients())

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def low_order(self) -> int:
        """Largest k with y^k dividing the polynomial."""
        for k, coeff in enumerate(self.coeffs):
            if not coeff.is_zero():
                return k
        return 0

    def divide_by_y_power(self, k: int) -> "SeriesPolyY":
        return SeriesPolyY(self.coeffs[k:])

    def shift(self, s: PuiseuxSeries) -> "SeriesPolyY":
        """Return the polynomial of ``y + s``, i.e. ``g(x, y + s)``."""
        n = len(self.coeffs)
        powers = [PuiseuxSeries.constant(1)]
        for _ in range(1, n):
            powers.append(powers[-1] * s)
        shifted = []
        for k in range(n):
            acc = PuiseuxSeries.zero()
            for j in range(k, n):
                if self.coeffs[j].is_zero():
                    continue
                acc = acc + (self.coeffs[j] * powers[j - k]).scale(comb(j, k))
            shifted.append(acc)
        return SeriesPolyY(shifted)

    def to_laurent(self) -> LaurentPoly2:
        """Back to Q[x, 1/x, y]; all exponents must be integral and xi-free."""
        terms: Dict[Tuple[int, int], Fraction] = {}
        for b, coeff in enumerate(self.coeffs):
            for exp, value in coeff:
                if exp.denominator != 1 or not value.is_constant():
                    raise UnsupportedInputError(
                        f"coefficient {coeff} of y^{b} is not a Laurent polynomial in x"
                    )
                terms[(exp.numerator, b)] = value.constant_value()
        return LaurentPoly2(terms)


def shift_y(f: LaurentPoly2, s: PuiseuxSeries) -> LaurentPoly2:
    """Partial substitution ``f(x, y + s)`` keeping y as a variable.

    ``s`` must be a xi-free Laurent polynomial in x.
    """
    return SeriesPolyY.from_laurent(f).shift(s).to_laurent()
