"""Exact rational arithmetic, canonical base-3 expansions, and affine maps.

Everything downstream is built from the three objects here:

* ``BigRational`` -- arbitrary-precision reduced fractions.  The stdlib
  ``fractions.Fraction`` already provides the exact semantics required
  (reduced form, positive denominator, exact arithmetic), so it is used
  directly rather than reimplemented.
* ``TernaryExpansion`` -- the eventually periodic base-3 expansion of a
  rational in [0, 1], held in a canonical form so each rational has exactly
  one representation.
* ``AffineMap`` -- maps v -> slope * v + intercept over the rationals, with
  exact composition and fixed points.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DigitError, DomainError, SingularMapError

BigRational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_DIGITS = frozenset((0, 1, 2))


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"expected an exact rational, got {type(x).__name__}")


def check_unit_interval(x, what: str = "x") -> Fraction:
    """Coerce to Fraction and require 0 <= x <= 1."""
    r = _as_rational(x)
    if r < 0 or r > 1:
        raise DomainError(f"{what} = {r} lies outside [0, 1]")
    return r


def _digits_to_int(digits: Sequence[int]) -> int:
    """Value of a digit string read as a base-3 integer.

    Split recursion keeps this subquadratic for the very long periods that
    denominators near 10**6 can produce.
    """
    n = len(digits)
    if n <= 64:
        acc = 0
        for d in digits:
            acc = acc * 3 + d
        return acc
    half = n // 2
    return _digits_to_int(digits[:half]) * pow(3, n - half) + _digits_to_int(digits[half:])


def _minimal_period(period: Sequence[int]) -> bool:
    n = len(period)
    for d in range(1, n):
        if n % d == 0 and tuple(period) == tuple(period[:d]) * (n // d):
            return False
    return True


@dataclass(frozen=True)
class TernaryExpansion:
    """Canonical eventually periodic base-3 expansion of a rational in [0, 1].

    Canonical form:

    * empty period means the expansion terminates, and then the preperiod
      does not end in 0;
    * a nonempty period is the minimal repeating block and is not all zeros;
    * the last preperiod digit differs from the last period digit (otherwise
      the preperiod could be shortened);
    * an all-2 tail only appears as the representation of 1 itself, which is
      the empty preperiod with period (2,).
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        pre = tuple(self.preperiod)
        per = tuple(self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)
        if not _DIGITS.issuperset(pre) or not _DIGITS.issuperset(per):
            raise DigitError("ternary digits must lie in {0, 1, 2}")
        if per:
            if set(per) == {0}:
                raise DigitError("a periodic tail of zeros must be the empty period")
            if not _minimal_period(per):
                raise DigitError(f"period {per} is not minimal")
            if pre and pre[-1] == per[-1]:
                raise DigitError("preperiod is not minimal (rotate the period instead)")
            if per == (2,) and pre:
                raise DigitError("an all-2 tail is only canonical for the value 1")
        elif pre and pre[-1] == 0:
            raise DigitError("terminating expansion must not end in digit 0")

    def digits(self) -> Iterator[int]:
        """Preperiod digits, then the period repeated forever (stops if terminating)."""
        yield from self.preperiod
        if self.period:
            while True:
                yield from self.period


def to_ternary(x) -> TernaryExpansion:
    """Canonical base-3 expansion of a rational in [0, 1].

    Base-3 long division.  Writing the reduced denominator as q = 3**v * q'
    with q' coprime to 3, the first v digits are the preperiod and the tail
    is purely periodic, so the period is read off by dividing until the
    remainder returns to its starting value -- at most q' steps, and the
    block found is automatically minimal.
    """
    r = check_unit_interval(x)
    if r == 1:
        return TernaryExpansion((), (2,))
    p, q = r.numerator, r.denominator
    v = 0
    q_free = q
    while q_free % 3 == 0:
        q_free //= 3
        v += 1
    pre = []
    num = p
    for _ in range(v):
        num *= 3
        d, num = divmod(num, q)
        pre.append(d)
    # Tail value num/q reduces to (num // 3**v) / q_free and is purely periodic.
    start = num // (3**v)
    per: list[int] = []
    if start:
        num = start
        while True:
            num *= 3
            d, num = divmod(num, q_free)
            per.append(d)
            if num == start:
                break
    return TernaryExpansion(tuple(pre), tuple(per))


def digit_stream(x) -> Iterator[int]:
    """Base-3 digits of x in [0, 1] by long division, produced lazily.

    Unlike ``to_ternary`` this never materializes a period, so it stays cheap
    even when the period is astronomically long (for example denominators
    divisible by large powers of 2 and 5).  Terminates after the last nonzero
    digit; yields the 222... tail for x = 1.
    """
    r = check_unit_interval(x)
    if r == 1:
        while True:
            yield 2
    num, den = r.numerator, r.denominator
    while num:
        num *= 3
        d, num = divmod(num, den)
        yield d


def from_ternary(e: TernaryExpansion) -> Fraction:
    """Exact value of a canonical expansion: preperiod part plus the periodic
    tail summed as a geometric series."""
    m = len(e.preperiod)
    value = Fraction(_digits_to_int(e.preperiod), 3**m)
    if e.period:
        length = len(e.period)
        value += Fraction(_digits_to_int(e.period), (3**length - 1) * 3**m)
    return value


@dataclass(frozen=True)
class AffineMap:
    """v -> slope * v + intercept over exact rationals."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", _as_rational(self.slope))
        object.__setattr__(self, "intercept", _as_rational(self.intercept))

    def __call__(self, v) -> Fraction:
        return self.slope * _as_rational(v) + self.intercept


IDENTITY = AffineMap(ONE, ZERO)


def affine_compose(outer: AffineMap, inner: AffineMap) -> AffineMap:
    """The map v -> outer(inner(v))."""
    return AffineMap(outer.slope * inner.slope,
                     outer.slope * inner.intercept + outer.intercept)


def compose_chain(maps: Sequence[AffineMap]) -> AffineMap:
    """Compose maps[0] o maps[1] o ... o maps[-1] (identity for an empty chain).

    Pairwise rounds keep intermediate numerators balanced, which matters when
    a chain covers a period thousands of digits long.
    """
    if not maps:
        return IDENTITY
    level = list(maps)
    while len(level) > 1:
        nxt = [affine_compose(level[k], level[k + 1]) for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def affine_fixed_point(m: AffineMap) -> Fraction:
    """The unique v with m(v) = v; requires slope != 1."""
    if m.slope == 1:
        raise SingularMapError("affine map with slope 1 has no unique fixed point")
    return m.intercept / (1 - m.slope)
