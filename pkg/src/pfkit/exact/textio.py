"""Bit-exact text format for rational power series.

::

    offset 1/2
    # comments start with '#'
    1
    -3/8

The offset line is optional on input (default 0) and always written first on
output.  Coefficients are canonical reduced fractions, one per line.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..errors import ParseError
from .series import PowerSeries


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str, line: int | None = None) -> Fraction:
    token = token.strip()
    try:
        if "/" in token:
            num, den = token.split("/")
            if not num.strip() or not den.strip():
                raise ValueError
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {token!r}", line) from None
    return value


def dumps_series(s: PowerSeries, comments: Iterable[str] = ()) -> str:
    lines = [f"offset {format_rational(s.offset)}"]
    lines.extend(f"# {c}" for c in comments)
    lines.extend(format_rational(c) for c in s.coeffs)
    return "\n".join(lines) + "\n"


def loads_series(text: str) -> PowerSeries:
    offset = Fraction(0)
    coeffs = []
    seen_offset = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("offset"):
            if seen_offset or coeffs:
                raise ParseError("offset must precede all coefficients and appear once", lineno)
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected 'offset p/q'", lineno)
            offset = parse_rational(parts[1], lineno)
            seen_offset = True
            continue
        coeffs.append(parse_rational(line, lineno))
    if not coeffs:
        raise ParseError("series file contains no coefficients")
    return PowerSeries(coeffs, offset)


def read_series(path) -> PowerSeries:
    with open(path, encoding="utf-8") as fh:
        return loads_series(fh.read())


def write_series(path, s: PowerSeries, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_series(s, comments))
