"""Key-form sequences built from construction plans."""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import DegenerateRegionError, InvalidPlanError, NotRepresentableError
from ..exact.rational import RatLike, as_rat, format_rat, lcm_of_denominators
from ..exact.series import LaurentPoly2

logger = logging.getLogger(__name__)

PlanStep = Tuple[RatLike, RatLike]


class KeyFormSequence:
    """Key forms ``f_0 = x, f_1 = y, ..., f_l`` with their construction data.

    Lists are indexed by k. ``periods[0]``, ``digits[0]`` and ``consts[0]``
    are placeholders (1, ``()``, 1); entry k >= 1 holds ``p_k``,
    ``(alpha_{k,0}, ..., alpha_{k,k-1})`` and ``c_k`` of the step
    ``f_{k+1} = f_k^p_k - c_k * prod f_j^alpha_{k,j}``. ``values`` is one
    entry shorter than ``forms`` while the value of the last form is open.
    """

    def __init__(
        self,
        forms: Sequence[LaurentPoly2],
        values: Sequence[RatLike],
        periods: Sequence[int],
        digits: Sequence[Tuple[int, ...]],
        consts: Sequence[RatLike],
    ):
        self.forms: List[LaurentPoly2] = list(forms)
        self.values: List[Fraction] = [as_rat(v) for v in values]
        self.periods: List[int] = list(periods)
        self.digits: List[Tuple[int, ...]] = [tuple(d) for d in digits]
        self.consts: List[Fraction] = [as_rat(c) for c in consts]

    @property
    def length(self) -> int:
        """Index l of the last form."""
        return len(self.forms) - 1

    @property
    def omega_last(self) -> Optional[Fraction]:
        if len(self.values) == len(self.forms):
            return self.values[-1]
        return None

    @property
    def last_form(self) -> LaurentPoly2:
        return self.forms[-1]

    def with_last_value(self, omega: RatLike) -> "KeyFormSequence":
        """Copy of the sequence with ``omega`` as the value of the last form."""
        values = self.values[: self.length] + [as_rat(omega)]
        return KeyFormSequence(self.forms, values, self.periods, self.digits, self.consts)

    def validate(self) -> List[str]:
        """Check the construction rules; returns the list of violations."""
        errors = []
        if self.forms[:2] != [LaurentPoly2.x(), LaurentPoly2.y()]:
            errors.append("a key-form sequence starts with x, y")
            return errors
        if not self.values or self.values[0] != 1:
            errors.append("omega_0 must be 1")
            return errors
        for k in range(1, self.length):
            if k >= len(self.values):
                errors.append(f"missing value for f_{k}")
                break
            omega = self.values[k]
            expected = period(self.values[:k], omega)
            if self.periods[k] != expected:
                errors.append(f"p_{k} = {self.periods[k]}, expected {expected}")
                continue
            if k >= 2 and not omega < self.periods[k - 1] * self.values[k - 1]:
                errors.append(f"omega_{k} must be below p_{k - 1} * omega_{k - 1}")
            digits = self.digits[k]
            for j in range(1, k):
                if not 0 <= digits[j] < self.periods[j]:
                    errors.append(f"alpha_{k},{j} = {digits[j]} is outside [0, p_{j})")
            if self.consts[k] == 0:
                errors.append(f"c_{k} must be non-zero")
            rebuilt = self.forms[k] ** self.periods[k] - monomial_product(self.forms, digits).scale(
                self.consts[k]
            )
            if rebuilt != self.forms[k + 1]:
                errors.append(f"f_{k + 1} does not follow from f_{k}")
        last = self.omega_last
        if last is not None and self.length >= 2:
            if not last < self.periods[self.length - 1] * self.values[self.length - 1]:
                errors.append("the last value must be below the expected value")
        return errors

    def __repr__(self) -> str:
        forms = ", ".join(str(f) for f in self.forms)
        values = ", ".join(format_rat(v) for v in self.values)
        return f"KeyFormSequence(forms=[{forms}], values=[{values}])"


def period(values: Sequence[Fraction], omega: RatLike) -> int:
    """Smallest p >= 1 with ``p * omega`` in the group generated by ``values``.

    ``values`` starts with omega_0 = 1, so the group is (1/N)Z for the lcm N
    of the denominators.
    """
    group = lcm_of_denominators(values)
    return (as_rat(omega) * group).denominator


def digit_representation(
    values: Sequence[RatLike], periods: Sequence[int], target: RatLike
) -> Tuple[int, ...]:
    """Unique ``(alpha_0, ..., alpha_{k-1})`` with ``target = sum alpha_j omega_j``.

    The digits obey ``0 <= alpha_j < p_j`` for j >= 1; ``alpha_0`` is free.

    Raises:
        NotRepresentableError: If ``target`` is outside the value group
    """
    omegas = [as_rat(v) for v in values]
    remainder = as_rat(target)
    digits = [0] * len(omegas)
    for j in range(len(omegas) - 1, 0, -1):
        group = lcm_of_denominators(omegas[:j])
        for candidate in range(periods[j]):
            if ((remainder - candidate * omegas[j]) * group).denominator == 1:
                digits[j] = candidate
                break
        else:
            raise NotRepresentableError(
                f"{format_rat(as_rat(target))} is not representable by the values "
                f"{[format_rat(v) for v in omegas]}"
            )
        remainder -= digits[j] * omegas[j]
    quotient = remainder / omegas[0]
    if quotient.denominator != 1:
        raise NotRepresentableError(
            f"{format_rat(as_rat(target))} is not representable by the values "
            f"{[format_rat(v) for v in omegas]}"
        )
    digits[0] = quotient.numerator
    return tuple(digits)


def monomial_product(forms: Sequence[LaurentPoly2], digits: Sequence[int]) -> LaurentPoly2:
    """``x^alpha_0 * f_1^alpha_1 * ... `` for the given digits."""
    product = LaurentPoly2.monomial(1, digits[0], 0)
    for form, exponent in zip(forms[1:], digits[1:]):
        if exponent:
            product = product * form ** exponent
    return product


def _next_step(
    forms: List[LaurentPoly2], values: List[Fraction], periods: List[int], omega: Fraction
) -> Tuple[int, Tuple[int, ...], LaurentPoly2]:
    p = period(values, omega)
    digits = digit_representation(values, periods, p * omega)
    return p, digits, monomial_product(forms, digits)


def build_keyforms(
    plan: Sequence[PlanStep], omega_last: Optional[RatLike] = None
) -> KeyFormSequence:
    """Build ``f_0, ..., f_{m+1}`` from a plan ``[(omega_1, c_1), ..., (omega_m, c_m)]``.

    Args:
        plan: Value and constant for every inductive step
        omega_last: Optional value of the last form

    Raises:
        InvalidPlanError: If a value is not below the expected value or a constant is zero
    """
    forms = [LaurentPoly2.x(), LaurentPoly2.y()]
    values = [Fraction(1)]
    periods = [1]
    digits: List[Tuple[int, ...]] = [()]
    consts = [Fraction(1)]
    for k, (omega_raw, c_raw) in enumerate(plan, start=1):
        omega, c = as_rat(omega_raw), as_rat(c_raw)
        if c == 0:
            raise InvalidPlanError(f"invalid plan: c_{k} must be non-zero")
        if k >= 2 and not omega < periods[k - 1] * values[k - 1]:
            raise InvalidPlanError(
                f"invalid plan: omega_{k} = {format_rat(omega)} must be below "
                f"p_{k - 1} * omega_{k - 1} = {format_rat(periods[k - 1] * values[k - 1])}"
            )
        values.append(omega)
        p, alpha, mono = _next_step(forms, values[:k], periods, omega)
        forms.append(forms[k] ** p - mono.scale(c))
        periods.append(p)
        digits.append(alpha)
        consts.append(c)
        logger.debug("key form f_%d = %s", k + 1, forms[-1])
    seq = KeyFormSequence(forms, values, periods, digits, consts)
    if omega_last is not None:
        omega = as_rat(omega_last)
        last = seq.length
        if last >= 2 and not omega < periods[last - 1] * values[last - 1]:
            raise InvalidPlanError(
                f"invalid plan: omega_{last} = {format_rat(omega)} must be below "
                f"{format_rat(periods[last - 1] * values[last - 1])}"
            )
        seq = seq.with_last_value(omega)
    return seq


class RegionDescription:
    """Inequalities cutting out the tentacle between two boundary curves."""

    def __init__(
        self,
        r: Fraction,
        upper: LaurentPoly2,
        middle: LaurentPoly2,
        lower: LaurentPoly2,
        y_nonnegative: bool,
    ):
        self.r = r
        self.upper = upper
        self.middle = middle
        self.lower = lower
        self.y_nonnegative = y_nonnegative

    def constraints(self) -> List[str]:
        parts = [f"x >= {format_rat(self.r)}"]
        if self.y_nonnegative:
            parts.append("y >= 0")
        parts.append(f"{self.upper} >= {self.middle} >= {self.lower}")
        return parts

    @property
    def text(self) -> str:
        return ", ".join(self.constraints())

    def __str__(self) -> str:
        return self.text


def boundary_curves(
    seq: KeyFormSequence,
    omega_l_next: RatLike,
    c1: RatLike,
    c2: RatLike,
    r: RatLike = 1,
) -> Tuple[LaurentPoly2, LaurentPoly2, RegionDescription]:
    """The two curves ``f_l^p_l - c_i * prod f_j^alpha_{l,j}`` bounding a tentacle.

    ``omega_l_next`` is the value given to the last form ``f_l`` of ``seq``.

    Raises:
        DegenerateRegionError: If ``c1 == c2``
        InvalidPlanError: If the value is not below the expected value
    """
    c1, c2 = as_rat(c1), as_rat(c2)
    if c1 == c2:
        raise DegenerateRegionError(f"degenerate region: both constants equal {format_rat(c1)}")
    last = seq.length
    omega = as_rat(omega_l_next)
    values = seq.values[:last]
    if last >= 2 and not omega < seq.periods[last - 1] * values[last - 1]:
        raise InvalidPlanError(
            f"invalid plan: omega_{last} = {format_rat(omega)} must be below "
            f"{format_rat(seq.periods[last - 1] * values[last - 1])}"
        )
    p, _, mono = _next_step(seq.forms, values, seq.periods, omega)
    power = seq.last_form ** p
    f1 = power - mono.scale(c1)
    f2 = power - mono.scale(c2)
    first_value = (values + [omega])[1]
    y_nonnegative = first_value > 0 and (last == 1 or seq.consts[1] > 0)
    region = RegionDescription(
        as_rat(r), mono.scale(max(c1, c2)), power, mono.scale(min(c1, c2)), y_nonnegative
    )
    return f1, f2, region
