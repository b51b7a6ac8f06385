"""Bourbaki's nowhere-differentiable function and its one-parameter family.

The function f is the uniform limit of piecewise-linear iterates on [0, 1].
Each refinement splits every segment in thirds and inserts values a fraction
``a`` and ``1 - a`` of the way up the segment (the classical function has
a = 2/3):

    f_{i+1}(x0 + w/3)     = y0 + a (y1 - y0)
    f_{i+1}(x0 + 2 w/3)   = y0 + (1 - a) (y1 - y0)        w = x1 - x0

Equivalently, prepending a base-3 digit to a point transforms the value by an
affine map, and the graph of the classical function is the attractor of three
plane affine maps.  Those three descriptions are implemented side by side and
cross-checked: refinement tables, digit maps with exact periodic-tail closure,
and the iterated function system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re

from .errors import (
    ConsistencyError,
    DomainError,
    ParameterError,
    ParseError,
    ResourceLimitError,
)
from .ternary import (
    IDENTITY,
    AffineMap,
    ZERO,
    affine_compose,
    check_unit_interval,
    digit_stream,
    to_ternary,
)

MAX_TABLE_LEVEL = 13


@dataclass(frozen=True)
class FamilyParam:
    """Vertical insertion factor a with 0 < a < 1; a = 2/3 is classical."""

    a: Fraction

    def __post_init__(self) -> None:
        a = self.a
        if not isinstance(a, Fraction):
            if isinstance(a, int):
                a = Fraction(a)
                object.__setattr__(self, "a", a)
            else:
                raise ParameterError("family parameter must be an exact rational")
        if not 0 < a < 1:
            raise ParameterError(f"family parameter a = {a} must satisfy 0 < a < 1")

    @property
    def is_classical(self) -> bool:
        return self.a == Fraction(2, 3)


CLASSICAL = FamilyParam(Fraction(2, 3))


@dataclass(frozen=True)
class PlanePoint:
    """A point of the unit square, exact coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", check_unit_interval(self.x, "x"))
        object.__setattr__(self, "y", check_unit_interval(self.y, "y"))


class IterateTable:
    """Breakpoints of one piecewise-linear iterate.

    Level i has 3**i + 1 breakpoints at x = k/3**i.  The y-values are stored
    as integer numerators over a common denominator (3**i classically,
    q**i for a = p/q) so deep tables stay compact.
    """

    __slots__ = ("level", "param", "_ynums", "_yden", "_xden", "_bp")

    def __init__(self, level: int, param: FamilyParam, ynums: list[int], yden: int):
        self.level = level
        self.param = param
        self._ynums = ynums
        self._yden = yden
        self._xden = 3**level
        self._bp: tuple[tuple[Fraction, Fraction], ...] | None = None

    def __len__(self) -> int:
        return len(self._ynums)

    def y_at(self, k: int) -> Fraction:
        """Exact value at breakpoint x = k/3**level."""
        return Fraction(self._ynums[k], self._yden)

    @property
    def y_numerators(self) -> list[int]:
        """Integer y-numerators over ``y_denominator`` (shared, do not mutate)."""
        return self._ynums

    @property
    def y_denominator(self) -> int:
        return self._yden

    @property
    def breakpoints(self) -> tuple[tuple[Fraction, Fraction], ...]:
        if self._bp is None:
            xd, yd = self._xden, self._yden
            self._bp = tuple(
                (Fraction(k, xd), Fraction(n, yd)) for k, n in enumerate(self._ynums)
            )
        return self._bp

    def __eq__(self, other) -> bool:
        if not isinstance(other, IterateTable):
            return NotImplemented
        return (
            self.level == other.level
            and self.param == other.param
            and self._yden == other._yden
            and self._ynums == other._ynums
        )

    def __repr__(self) -> str:
        return f"IterateTable(level={self.level}, a={self.param.a}, points={len(self)})"


def _check_level(i: int, cap: int = MAX_TABLE_LEVEL) -> None:
    if not isinstance(i, int) or i < 0:
        raise ParameterError(f"level must be a nonnegative integer, got {i!r}")
    if i > cap:
        raise ResourceLimitError(f"level {i} exceeds the supported cap {cap}")


def build_iterate(i: int, param: FamilyParam = CLASSICAL) -> IterateTable:
    """Breakpoint table of the i-th iterate, starting from f_0(x) = x."""
    _check_level(i)
    p = param.a.numerator
    q = param.a.denominator
    ynums = [0, 1]
    yden = 1
    for _ in range(i):
        nxt = []
        for k in range(len(ynums) - 1):
            n0, n1 = ynums[k], ynums[k + 1]
            d = n1 - n0
            nxt.append(n0 * q)
            nxt.append(n0 * q + p * d)
            nxt.append(n0 * q + (q - p) * d)
        nxt.append(ynums[-1] * q)
        ynums = nxt
        yden *= q
    return IterateTable(i, param, ynums, yden)


def eval_iterate(t: IterateTable, x) -> Fraction:
    """Exact value of the iterate at any x in [0, 1] by linear interpolation."""
    r = check_unit_interval(x)
    scaled = r * t._xden
    k = int(scaled)
    if k == t._xden:  # x == 1 sits on the last breakpoint
        k -= 1
    y0 = t.y_at(k)
    y1 = t.y_at(k + 1)
    return y0 + (scaled - k) * (y1 - y0)


def ifs_map_point(n: int, pt: PlanePoint) -> PlanePoint:
    """Apply one of the three plane maps whose attractor is the classical graph.

    w1 (x, y) = (x/3, 2y/3)
    w2 (x, y) = ((2 - x)/3, (1 + y)/3)   (reverses x-orientation)
    w3 (x, y) = ((2 + x)/3, (1 + 2y)/3)
    """
    x, y = pt.x, pt.y
    if n == 1:
        return PlanePoint(x / 3, 2 * y / 3)
    if n == 2:
        return PlanePoint((2 - x) / 3, (1 + y) / 3)
    if n == 3:
        return PlanePoint((2 + x) / 3, (1 + 2 * y) / 3)
    raise ParameterError(f"map index must be 1, 2 or 3, got {n!r}")


def ifs_refine(t: IterateTable) -> IterateTable:
    """Next classical iterate as the union of the three map images of ``t``.

    The w2 image is re-ordered (that map reverses x) and the shared corner
    points of adjacent images are deduplicated after an exact equality check.
    Must agree exactly with ``build_iterate(t.level + 1)``.
    """
    if not t.param.is_classical:
        raise ParameterError("the iterated function system applies to a = 2/3 only")
    _check_level(t.level + 1)
    pow3 = t._xden
    ynums = t._ynums
    # New common denominator 3**(level+1); x-index j runs over 0 .. 3**(level+1).
    left = [2 * n for n in ynums]
    middle = [pow3 + n for n in reversed(ynums)]
    right = [pow3 + 2 * n for n in ynums]
    if left[-1] != middle[0] or middle[-1] != right[0]:
        raise ConsistencyError("map images disagree at shared corners")
    merged = left + middle[1:] + right[1:]
    return IterateTable(t.level + 1, t.param, merged, 3 * pow3)


def digit_step_map(d: int, param: FamilyParam = CLASSICAL) -> AffineMap:
    """Affine action of prepending base-3 digit d to a point.

    With t the remaining tail and v = f(t):

        digit 0:  f(t/3)       = a v
        digit 1:  f((1 + t)/3) = a - (2a - 1) v
        digit 2:  f((2 + t)/3) = a v + (1 - a)

    For a = 2/3 these are (2/3)v, (2 - v)/3 and (2v + 1)/3.
    """
    a = param.a
    if d == 0:
        return AffineMap(a, ZERO)
    if d == 1:
        return AffineMap(1 - 2 * a, a)
    if d == 2:
        return AffineMap(a, 1 - a)
    raise ParameterError(f"base-3 digit must be 0, 1 or 2, got {d!r}")


def _closed_tail_value(period: tuple[int, ...], param: FamilyParam) -> Fraction:
    """Fixed point of the digit maps composed over one period.

    Same composition as ``compose_chain`` of ``digit_step_map`` but carried
    out on unreduced integer triples (slope, intercept, common denominator
    q**k); periods run to thousands of digits, and skipping the per-step gcd
    of Fraction arithmetic keeps the closure fast.  Reduction happens once,
    in the final fixed-point division.
    """
    p = param.a.numerator
    q = param.a.denominator
    leaf = {0: (p, 0, q), 1: (q - 2 * p, p, q), 2: (p, q - p, q)}
    level = [leaf[d] for d in period]
    while len(level) > 1:
        nxt = []
        for k in range(0, len(level) - 1, 2):
            so, bo, do = level[k]
            si, bi, di = level[k + 1]
            nxt.append((so * si, so * bi + bo * di, do * di))
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    s, b, den = level[0]
    if not -den < s < den:
        raise ConsistencyError("period map is not a contraction")
    return Fraction(b, den - s)


def eval_exact(x, param: FamilyParam = CLASSICAL) -> Fraction:
    """Exact value of the limit function at a rational point.

    The digit maps are composed over one full period of the expansion; the
    composite has |slope| <= max(a, 1-a, |2a-1|) ** period_length < 1, so the
    periodic tail value is its unique fixed point.  The preperiod maps are
    then applied from the innermost digit outward.
    """
    e = to_ternary(x)
    v = _closed_tail_value(e.period, param) if e.period else ZERO
    for d in reversed(e.preperiod):
        v = digit_step_map(d, param)(v)
    return v


def bracket_value(x, depth: int) -> tuple[Fraction, Fraction]:
    """Enclose the classical f(x) between iterate-segment endpoint values.

    Refines only the segment containing x through ``depth`` construction
    steps (the full level-``depth`` table would be astronomically large, but
    its values at the two surviving breakpoints are identical because
    refinement never moves an existing breakpoint).  Every deeper value on
    the segment stays between the endpoint values, so the pair brackets f(x)
    with gap at most (2/3)**depth.  Independent of the digit-map evaluator.
    """
    r = check_unit_interval(x)
    if not isinstance(depth, int) or depth < 0:
        raise ParameterError(f"depth must be a nonnegative integer, got {depth!r}")
    x0, y0 = Fraction(0), Fraction(0)
    x1, y1 = Fraction(1), Fraction(1)
    for _ in range(depth):
        w = x1 - x0
        dy = y1 - y0
        c1 = x0 + w / 3
        c2 = x0 + 2 * w / 3
        v1 = y0 + Fraction(2, 3) * dy
        v2 = y0 + Fraction(1, 3) * dy
        if r <= c1:
            x1, y1 = c1, v1
        elif r <= c2:
            x0, y0, x1, y1 = c1, v1, c2, v2
        else:
            x0, y0, x1, y1 = c2, v2, x1, y1
    return (min(y0, y1), max(y0, y1))


_CASES = ("i", "ii", "iii", "iv", "v", "vi")


def closed_form_value(case: str, i: int, j: int | None = None) -> tuple[Fraction, Fraction]:
    """Known exact values (x, f(x)) of the classical function.

    case  point              value
    i     1/(3**i + 1)       2**i / (3**i + 2**i)
    ii    1/(3**i - 1)       2**i / (3**i + 2**(i-1))
    iii   2/(3**i + 1)       2**(i-1) / (3**i - 2**(i-1))
    iv    2/(3**i - 1)       2**(i-1) / (3**i - 2**i)
    v     1/(3**j + 3**i)    (2/3)**i * 2**(j-i) / (3**(j-i) + 2**(j-i))
    vi    1/(3**j - 3**i)    (2/3)**i * 2**(j-i) / (3**(j-i) + 2**(j-i-1))

    Cases v and vi require j > i >= 1.
    """
    if case not in _CASES:
        raise ParameterError(f"case must be one of {_CASES}, got {case!r}")
    if not isinstance(i, int) or i < 1:
        raise ParameterError(f"index i must be a positive integer, got {i!r}")
    if case in ("v", "vi"):
        if j is None:
            raise ParameterError(f"case {case} requires the second index j")
        if not isinstance(j, int) or j <= i:
            raise ParameterError(f"case {case} requires j > i, got j = {j!r}")
    p3, p2 = 3**i, 2**i
    if case == "i":
        return Fraction(1, p3 + 1), Fraction(p2, p3 + p2)
    if case == "ii":
        return Fraction(1, p3 - 1), Fraction(p2, p3 + p2 // 2)
    if case == "iii":
        return Fraction(2, p3 + 1), Fraction(p2 // 2, p3 - p2 // 2)
    if case == "iv":
        return Fraction(2, p3 - 1), Fraction(p2 // 2, p3 - p2)
    k = j - i
    scale = Fraction(2, 3) ** i
    if case == "v":
        return Fraction(1, 3**j + p3), scale * Fraction(2**k, 3**k + 2**k)
    return Fraction(1, 3**j - p3), scale * Fraction(2**k, 3**k + 2 ** (k - 1))


_DECIMAL_RE = re.compile(r"^(\d+)(?:\.(\d*))?$|^\.(\d+)$")


def parse_decimal(text: str) -> Fraction:
    """Exact rational value of a plain decimal literal like '0.125'."""
    if not isinstance(text, str):
        raise ParseError(f"expected a decimal string, got {type(text).__name__}")
    m = _DECIMAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed decimal {text!r}")
    whole, frac_part, bare = m.groups()
    if bare is not None:
        whole, frac_part = "0", bare
    frac_part = frac_part or ""
    return Fraction(int(whole + frac_part), 10 ** len(frac_part))


def approx_eval(text: str, tol) -> tuple[Fraction, Fraction]:
    """Certified interval around f at the decimal point ``text``.

    Parses the decimal to the exact rational r = digits / 10**k, then walks
    base-3 digits of r composing digit maps until the envelope (the image of
    [0, 1] under the composite) is no wider than ``tol``.  The true f(r) lies
    inside the returned closed interval; the width shrinks like (2/3)**depth.
    """
    r = check_unit_interval(parse_decimal(text), "decimal input")
    tol = Fraction(tol)
    if tol <= 0:
        raise ParameterError(f"tolerance must be positive, got {tol}")
    m = IDENTITY
    digits = digit_stream(r)
    while not -tol <= m.slope <= tol:
        d = next(digits, None)
        if d is None:
            v = m(ZERO)  # terminating expansion: the tail is exactly 0
            return (v, v)
        m = affine_compose(m, digit_step_map(d))
    lo, hi = m(ZERO), m(Fraction(1))
    return (lo, hi) if lo <= hi else (hi, lo)


@lru_cache(maxsize=4)
def classical_table(i: int) -> IterateTable:
    """Cached classical tables for read-heavy consumers (geometry, verify)."""
    return build_iterate(i)
