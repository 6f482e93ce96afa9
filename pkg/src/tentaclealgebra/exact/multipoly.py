"""Sparse polynomials in n variables with exact rational coefficients."""
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar

from ..errors import InputError, ZeroPolynomialError
from .rational import RatLike, as_rat, format_rat
from .series import LaurentPoly2

Exponent = Tuple[int, ...]
Number = TypeVar("Number")


def default_names(nvars: int) -> Tuple[str, ...]:
    """``("x", "y")`` in the plane, ``("x1", ..., "xn")`` otherwise."""
    if nvars == 2:
        return ("x", "y")
    if nvars == 1:
        return ("x",)
    return tuple(f"x{i + 1}" for i in range(nvars))


class MultiPoly:
    """Polynomial in ``nvars`` variables keyed by exponent tuples.

    Negative exponents are allowed so that Laurent inputs survive parsing;
    ``is_polynomial`` tells the two apart.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], RatLike]] = None):
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        self.nvars = nvars
        cleaned: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != nvars:
                raise InputError(f"exponent {key} does not have {nvars} entries")
            value = as_rat(coeff)
            if value != 0:
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
                if cleaned[key] == 0:
                    del cleaned[key]
        self._terms = cleaned

    @classmethod
    def constant(cls, nvars: int, value: RatLike) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: RatLike = 1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def from_laurent2(cls, f: LaurentPoly2) -> "MultiPoly":
        return cls(2, {(a, b): c for (a, b), c in f.terms.items()})

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exps in self._terms for e in exps)

    def monomials(self) -> List[Exponent]:
        return sorted(self._terms, key=lambda exps: (-sum(exps), tuple(-e for e in exps)))

    def _require_nonzero(self) -> None:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")

    def total_degree(self) -> int:
        self._require_nonzero()
        return max(sum(exps) for exps in self._terms)

    def weighted_degree(self, weights: Sequence[RatLike]) -> Fraction:
        """Maximum of ``weights . alpha`` over the support."""
        self._require_nonzero()
        if len(weights) != self.nvars:
            raise InputError(f"weight vector has {len(weights)} entries, expected {self.nvars}")
        w = [as_rat(v) for v in weights]
        return max(sum((wi * e for wi, e in zip(w, exps)), Fraction(0)) for exps in self._terms)

    def to_laurent2(self) -> LaurentPoly2:
        if self.nvars != 2:
            raise InputError(f"expected a polynomial in x and y, got {self.nvars} variables")
        return LaurentPoly2({exps: c for exps, c in self._terms.items()})

    def extend(self, extra: int = 1) -> "MultiPoly":
        """The same polynomial viewed in ``nvars + extra`` variables."""
        return MultiPoly(
            self.nvars + extra, {exps + (0,) * extra: c for exps, c in self._terms.items()}
        )

    def split_last(self) -> Dict[int, "MultiPoly"]:
        """Group by the exponent of the last variable: ``{k: coefficient of v^k}``."""
        if self.nvars < 2:
            raise InputError("cannot split off the only variable")
        pieces: Dict[int, Dict[Exponent, Fraction]] = {}
        for exps, c in self._terms.items():
            pieces.setdefault(exps[-1], {})[exps[:-1]] = c
        return {k: MultiPoly(self.nvars - 1, terms) for k, terms in sorted(pieces.items())}

    def evaluate(
        self, point: Sequence[Number], convert: Callable[[Fraction], Number] = lambda c: c
    ) -> Number:
        """Evaluate at ``point``; ``convert`` maps coefficients into the point's number type."""
        if len(point) != self.nvars:
            raise InputError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = convert(Fraction(0))
        for exps, c in self._terms.items():
            value = convert(c)
            for coordinate, e in zip(point, exps):
                if e:
                    value = value * coordinate ** e
            total = total + value
        return total

    def scale(self, factor: RatLike) -> "MultiPoly":
        factor = as_rat(factor)
        return MultiPoly(self.nvars, {k: v * factor for k, v in self._terms.items()})

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise InputError(
                f"cannot combine polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        result = dict(self._terms)
        for key, c in other._terms.items():
            result[key] = result.get(key, Fraction(0)) + c
        return MultiPoly(self.nvars, result)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, result)

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise InputError("polynomial powers must be non-negative")
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def render(self, names: Optional[Iterable[str]] = None) -> str:
        labels = tuple(names) if names is not None else default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for exps in self.monomials():
            coeff = self._terms[exps]
            factors = []
            for label, e in zip(labels, exps):
                if e == 1:
                    factors.append(label)
                elif e:
                    factors.append(f"{label}^{e}")
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

    def __str__(self) -> str:
        return self.render()
