"""Evaluation of a semidegree through the key-form expansion of a polynomial."""
from fractions import Fraction
from typing import TYPE_CHECKING, List, Sequence, Tuple

from ..errors import InputError, ZeroPolynomialError
from ..exact.series import LaurentPoly2

if TYPE_CHECKING:
    from ..keyforms.sequence import KeyFormSequence

Digits = Tuple[int, ...]


def expand_in_forms(
    f: LaurentPoly2, forms: Sequence[LaurentPoly2]
) -> List[Tuple[Fraction, Digits]]:
    """Write ``f`` as a sum of ``c * x^a0 * f_1^a1 * ... * f_l^al``.

    Repeated division with remainder by the monic forms, top form first.
    Every digit except ``a0`` and the last one stays below the period.

    Returns:
        List of ``(c, (a0, ..., al))`` with distinct digit vectors
    """
    level = len(forms) - 1
    if level < 1:
        raise InputError("a key-form sequence starts with x and y")
    if level == 1:
        return [(c, (a, b)) for (a, b), c in f.terms.items()]
    divisor = forms[level]
    expansion: List[Tuple[Fraction, Digits]] = []
    quotient = f
    power = 0
    while not quotient.is_zero():
        quotient, remainder = quotient.divmod_y(divisor)
        for coeff, digits in expand_in_forms(remainder, forms[:level]):
            expansion.append((coeff, digits + (power,)))
        power += 1
    return expansion


def maclane_value(seq: "KeyFormSequence", f: LaurentPoly2) -> Fraction:
    """``max sum alpha_j omega_j`` over the key-form expansion of ``f``."""
    if f.is_zero():
        raise ZeroPolynomialError("the value of the zero polynomial is undefined")
    if len(seq.values) != len(seq.forms):
        raise InputError("every key form needs an assigned value")
    values = seq.values
    return max(
        sum((Fraction(a) * w for a, w in zip(digits, values)), Fraction(0))
        for _, digits in expand_in_forms(f, seq.forms)
    )
