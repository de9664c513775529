"""Exact arithmetic kernel: rationals, truncated series, polynomials, jets."""

from fractions import Fraction as Rational

from .jet import EpsilonJet
from .poly import LaurentPoly, MultiPoly
from .quadext import QuadExtScalar, squarefree_split
from .series import (
    PowerSeries,
    derivative,
    rational_sqrt,
    series_compose,
    series_exp,
    series_inv,
    series_inv_sqrt,
    series_log1p,
    series_mul,
    series_power,
    series_reversion,
    theta_derivative,
)
from .textio import dumps_series, format_rational, loads_series, parse_rational

__all__ = [
    "Rational",
    "EpsilonJet",
    "LaurentPoly",
    "MultiPoly",
    "QuadExtScalar",
    "squarefree_split",
    "PowerSeries",
    "derivative",
    "rational_sqrt",
    "series_compose",
    "series_exp",
    "series_inv",
    "series_inv_sqrt",
    "series_log1p",
    "series_mul",
    "series_power",
    "series_reversion",
    "theta_derivative",
    "dumps_series",
    "format_rational",
    "loads_series",
    "parse_rational",
]
