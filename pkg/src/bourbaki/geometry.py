"""Fractal geometry of the classical graph: box counts, covers, mass, length.

Counts and covers are exact; only final logarithms and square roots pass
through ``decimal`` contexts at 50 significant digits, with directed rounding
where an inequality must not be certified by rounding error.

Grid convention for box counting: the unit square is cut into closed boxes of
side 3**-i on the origin-anchored grid, and a box is counted when it meets
the graph in more than a single point (positive-length contact).  A segment
endpoint sitting exactly on a grid line therefore does not drag in the
neighboring box it merely touches.  This is the convention under which the
hand counts at levels 0, 1, 2 come out as 1, 5, 25, and the count is exactly
5**i at every level.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    ConsistencyError,
    DigitError,
    EmptyInputError,
    ParameterError,
    ResourceLimitError,
)
from .antiderivative import build_F_iterate
from .function import classical_table

MAX_BOX_LEVEL = 10
MAX_COVER_LEVEL = 10
MAX_MASS_LEVEL = 8
MAX_ARC_LEVEL = 12

_PRECISION = 50

_WEIGHTS = {0: Fraction(2, 5), 1: Fraction(1, 5), 2: Fraction(2, 5)}
_HEIGHT_FACTORS = {0: Fraction(2, 3), 1: Fraction(1, 3), 2: Fraction(2, 3)}


def _context(rounding: str) -> decimal.Context:
    return decimal.Context(prec=_PRECISION, rounding=rounding)


def _to_decimal(x: Fraction, ctx: decimal.Context) -> Decimal:
    return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))


@dataclass(frozen=True)
class BoxCountReport:
    level: int
    delta: Fraction
    count: int


def box_count(i: int) -> BoxCountReport:
    """Number of side-3**-i grid boxes meeting the graph of the i-th iterate.

    Column by column: over x in [k/3**i, (k+1)/3**i] the iterate is a single
    segment spanning y in [lo, hi]; the boxes with positive-length contact
    are the rows whose open interiors overlap [lo, hi].  At level i the
    breakpoint values are integer multiples of 3**-i, so the row count per
    column is exactly the integer span hi - lo (in grid units).
    """
    if not isinstance(i, int) or i < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {i!r}")
    if i > MAX_BOX_LEVEL:
        raise ResourceLimitError(f"box counting capped at level {MAX_BOX_LEVEL}")
    ynums = classical_table(i).y_numerators
    count = 0
    for k in range(len(ynums) - 1):
        span = ynums[k + 1] - ynums[k]
        if span == 0:
            raise ConsistencyError("degenerate flat segment in classical table")
        count += span if span > 0 else -span
    return BoxCountReport(i, Fraction(1, 3**i), count)


def dimension_estimate(reports: Sequence[BoxCountReport]) -> Decimal:
    """log(count) / (level * log 3) for the deepest supplied report."""
    usable = [r for r in reports if r.level >= 1]
    if not usable:
        raise EmptyInputError("need at least one report with level >= 1")
    deepest = max(usable, key=lambda r: r.level)
    ctx = _context(decimal.ROUND_HALF_EVEN)
    return ctx.divide(
        ctx.ln(Decimal(deepest.count)),
        ctx.multiply(Decimal(deepest.level), ctx.ln(Decimal(3))),
    )


@dataclass(frozen=True)
class CoverRectangle:
    """One rectangle of the self-similar cover, addressed by its digit path."""

    digits: tuple[int, ...]
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> Fraction:
        return self.y_hi - self.y_lo

    @property
    def area(self) -> Fraction:
        return self.width * self.height


def _check_digits(digits) -> tuple[int, ...]:
    ds = tuple(int(d) for d in digits) if not isinstance(digits, str) else tuple(
        int(c) for c in digits
    )
    if not all(d in (0, 1, 2) for d in ds):
        raise DigitError(f"digit path must use digits 0, 1, 2 only: {digits!r}")
    return ds


def cover_level(i: int) -> list[CoverRectangle]:
    """The 3**i rectangles covering the graph at depth i, in digit-path order.

    Children of [x0, x1] x [y0, y1] under the three plane maps:

        digit 0: [x0/3, x1/3]             x [2 y0/3, 2 y1/3]
        digit 1: [(2 - x1)/3, (2 - x0)/3] x [(1 + y0)/3, (1 + y1)/3]
        digit 2: [(2 + x0)/3, (2 + x1)/3] x [(1 + 2 y0)/3, (1 + 2 y1)/3]

    Heights shrink by 2/3 for digits 0 and 2 and by 1/3 for digit 1, so a
    rectangle's height is the product of those factors along its digit path.
    """
    if not isinstance(i, int) or i < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {i!r}")
    if i > MAX_COVER_LEVEL:
        raise ResourceLimitError(f"covers capped at level {MAX_COVER_LEVEL}")
    rects = [CoverRectangle((), Fraction(0), Fraction(1), Fraction(0), Fraction(1))]
    for _ in range(i):
        nxt = []
        for r in rects:
            x0, x1, y0, y1 = r.x_lo, r.x_hi, r.y_lo, r.y_hi
            nxt.append(
                CoverRectangle(r.digits + (0,), x0 / 3, x1 / 3, 2 * y0 / 3, 2 * y1 / 3)
            )
            nxt.append(
                CoverRectangle(
                    r.digits + (1,),
                    (2 - x1) / 3,
                    (2 - x0) / 3,
                    (1 + y0) / 3,
                    (1 + y1) / 3,
                )
            )
            nxt.append(
                CoverRectangle(
                    r.digits + (2,),
                    (2 + x0) / 3,
                    (2 + x1) / 3,
                    (1 + 2 * y0) / 3,
                    (1 + 2 * y1) / 3,
                )
            )
        rects = nxt
    return rects


def interval_mass(digits) -> Fraction:
    """Mass of the cover rectangle addressed by a digit path.

    The self-similar measure splits mass 2/5, 1/5, 2/5 across digits 0, 1, 2,
    so a path's mass is the product of its digit weights (1 for the empty
    path: the whole graph).
    """
    ds = _check_digits(digits)
    mass = Fraction(1)
    for d in ds:
        mass *= _WEIGHTS[d]
    return mass


@dataclass(frozen=True)
class MassMeasure:
    """All digit-path masses at one level."""

    level: int
    weights: dict[tuple[int, ...], Fraction]

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))


def mass_measure(level: int) -> MassMeasure:
    if not isinstance(level, int) or level < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {level!r}")
    if level > MAX_MASS_LEVEL:
        raise ResourceLimitError(f"mass tables capped at level {MAX_MASS_LEVEL}")
    paths: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for _ in range(level):
        paths = {
            path + (d,): m * _WEIGHTS[d] for path, m in paths.items() for d in (0, 1, 2)
        }
    return MassMeasure(level, paths)


def mass_bound_check(i: int) -> bool:
    """Verify mass(U) <= 5 * diam(U) ** log3(5) for every level-i rectangle.

    A rectangle's mass, height and diameter depend only on how many digit-1
    steps its path contains, so the 3**i rectangles reduce to i + 1 classes.
    The right-hand side is evaluated with all roundings directed downward
    (and the mass rounded upward), so a pass can never be an artifact of
    rounding; tested margins are far wider than 10**-50.
    """
    if not isinstance(i, int) or i < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {i!r}")
    if i > MAX_MASS_LEVEL:
        raise ResourceLimitError(f"mass bound checks capped at level {MAX_MASS_LEVEL}")
    down = _context(decimal.ROUND_FLOOR)
    up = _context(decimal.ROUND_CEILING)
    # Every rounding pushes the right side down and the mass up, so the
    # comparison can only fail conservatively.  With diam < 1 the product
    # s * ln(diam) is negative, so its lower bound needs s rounded *up* and
    # ln(diam) (via diam) rounded down.
    s_up = up.divide(up.ln(Decimal(5)), down.ln(Decimal(3)))
    width = Fraction(1, 3**i)
    for ones in range(i + 1):
        mass = Fraction(2, 5) ** (i - ones) * Fraction(1, 5) ** ones
        height = Fraction(2, 3) ** (i - ones) * Fraction(1, 3) ** ones
        diam_sq = width * width + height * height
        if diam_sq >= 1:
            continue  # diam >= 1 makes the bound at least 5 >= any mass
        diam_down = down.sqrt(_to_decimal(diam_sq, down))
        ln_down = down.ln(diam_down)  # negative
        power_down = down.exp(down.multiply(s_up, ln_down))
        rhs_down = down.multiply(Decimal(5), power_down)
        mass_up = _to_decimal(mass, up)
        if not mass_up <= rhs_down:
            return False
    return True


def iter_segment_squares(i: int) -> Iterator[Fraction]:
    """Exact squared segment lengths of the level-i antiderivative polyline."""
    t = build_F_iterate(i)
    dx_sq = Fraction(1, 9**i)
    yden = t.y_denominator
    nums = t.y_numerators
    for k in range(len(nums) - 1):
        dy = Fraction(nums[k + 1] - nums[k], yden)
        yield dx_sq + dy * dy


def _arc_length_from_ynums(level: int, ynums: list[int], ctx: decimal.Context) -> Decimal:
    """Sum of segment lengths; radicands are exact integers over (2 * 9**i)**2."""
    four9 = 4 * 9**level
    total = Decimal(0)
    prev = ynums[0]
    for n in ynums[1:]:
        d = n - prev
        total = ctx.add(total, ctx.sqrt(Decimal(four9 + d * d)))
        prev = n
    return ctx.divide(total, Decimal(2 * 9**level))


def arc_length(i: int) -> Decimal:
    """Length of the level-i antiderivative polyline, 50 significant digits.

    Lengths increase with i and stay strictly below the variation bound 3/2
    (each segment satisfies sqrt(dx**2 + dy**2) < dx + dy, and those sum to
    1 + 1/2 exactly); the level-0 chord gives the lower bound sqrt(5)/2.
    """
    length = None
    for length in arc_length_profile(i):
        pass
    return length


def arc_length_profile(max_level: int) -> Iterator[Decimal]:
    """Arc lengths for levels 0 .. max_level, reusing each table for the next."""
    if not isinstance(max_level, int) or max_level < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {max_level!r}")
    if max_level > MAX_ARC_LEVEL:
        raise ResourceLimitError(f"arc length capped at level {MAX_ARC_LEVEL}")

    def profile() -> Iterator[Decimal]:
        ctx = _context(decimal.ROUND_HALF_EVEN)
        for level in range(max_level + 1):
            yield _arc_length_from_ynums(level, build_F_iterate(level).y_numerators, ctx)

    return profile()
