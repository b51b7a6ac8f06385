"""Deterministic text renderings: rationals, decimals, CSV tables, SVG plots.

Every function here returns a string that depends only on its exact input,
never on platform float behaviour, so repeated runs emit identical bytes.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .errors import ParameterError

_CTX = Context(prec=40)
_SIG = 12

_VIEW = 900
_MARGIN = 2
_SPAN = _VIEW - 2 * _MARGIN


def format_rational(x) -> str:
    """Render a rational as "p/q", keeping the denominator even when 1."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_12(value) -> str:
    """Round to 12 significant digits and print in plain decimal notation.

    Accepts Fraction, Decimal or int.  Zero prints as "0.000000000000"
    since significant digits are undefined for it.
    """
    if isinstance(value, Fraction):
        d = _CTX.divide(Decimal(value.numerator), Decimal(value.denominator))
    elif isinstance(value, Decimal):
        d = value
    elif isinstance(value, int):
        d = Decimal(value)
    else:
        raise ParameterError(f"cannot render {value!r} as a decimal")
    if d == 0:
        return "0.000000000000"
    exponent = Decimal(1).scaleb(d.adjusted() - (_SIG - 1))
    q = d.quantize(exponent, rounding=ROUND_HALF_EVEN, context=_CTX)
    if q.adjusted() != d.adjusted():
        # Rounding carried into the next decade (0.99... became 1.00...),
        # so one fewer fractional digit keeps 12 significant digits.
        exponent = Decimal(1).scaleb(q.adjusted() - (_SIG - 1))
        q = q.quantize(exponent, rounding=ROUND_HALF_EVEN, context=_CTX)
    return format(q, "f")


def format_value(x) -> str:
    """Render "p/q (decimal)" as used by the evaluation subcommands."""
    return f"{format_rational(x)} ({decimal_12(x)})"


def csv_table(table) -> str:
    """CSV dump of a table's breakpoints, LF line endings, one trailing LF."""
    lines = ["x_num,x_den,y_num,y_den"]
    for x, y in table.breakpoints:
        lines.append(f"{x.numerator},{x.denominator},{y.numerator},{y.denominator}")
    return "\n".join(lines) + "\n"


def _coord(value: Fraction) -> str:
    d = _CTX.divide(Decimal(value.numerator), Decimal(value.denominator))
    return format(d.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN), "f")


def svg_polyline(table) -> str:
    """Plot a table's graph as a single polyline in a 900 x 900 viewBox.

    The unit square maps to the viewBox minus a 2-unit margin, with the
    y axis flipped so larger function values appear higher.
    """
    points = []
    for x, y in table.breakpoints:
        px = _MARGIN + _SPAN * x
        py = _MARGIN + _SPAN * (1 - y)
        points.append(f"{_coord(px)},{_coord(py)}")
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_VIEW} {_VIEW}" width="{_VIEW}" height="{_VIEW}">\n'
        '  <polyline fill="none" stroke="black" stroke-width="1" points="'
        + " ".join(points)
        + '"/>\n'
        "</svg>\n"
    )
