"""Exact period expansions: simplex/Beta moments, constant terms, A1 Morse points."""

from .constant_term import constant_term_series, laurent_power_constant_terms
from .expansion import PeriodExpansion
from .morse import MorseNormalForm, MorseProblem, ball_moment, morse_normalize, morse_period
from .parser import (
    dumps_laurent,
    parse_laurent,
    parse_morse_problem,
    parse_polynomial,
    parse_simplex_problem,
    variable_names,
)
from .simplex import SimplexProblem, simplex_moment, simplex_period, simplex_period_reference

__all__ = [
    "constant_term_series",
    "laurent_power_constant_terms",
    "PeriodExpansion",
    "MorseNormalForm",
    "MorseProblem",
    "ball_moment",
    "morse_normalize",
    "morse_period",
    "dumps_laurent",
    "parse_laurent",
    "parse_morse_problem",
    "parse_polynomial",
    "parse_simplex_problem",
    "variable_names",
    "SimplexProblem",
    "simplex_moment",
    "simplex_period",
    "simplex_period_reference",
]
