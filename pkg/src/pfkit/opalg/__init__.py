"""Operator analysis: D/theta forms, local exponents, Riemann symbols, self-duality."""

from .dop import DOperator, compose, d_to_theta, formal_adjoint, stirling2, theta_to_d
from .local import (
    APPARENT,
    CONIFOLD,
    INFINITY,
    IRREGULAR,
    MUM,
    OTHER,
    REGULAR,
    AlgebraicPoint,
    NumericExponent,
    RationalPoint,
    as_point,
    classify_point,
    factor_rational,
    indicial_exponents,
    indicial_polynomial,
    singular_points,
)
from .numfield import AlgebraicNumber, NumberField
from .ratfunc import RationalFunction
from .selfdual import self_adjoint_check, self_adjoint_closed_form
from .symbol import RiemannSymbol, SingularPoint, analysis_report, fuchs_relation, has_mum_point, riemann_symbol

__all__ = [
    "DOperator",
    "compose",
    "d_to_theta",
    "formal_adjoint",
    "stirling2",
    "theta_to_d",
    "APPARENT",
    "CONIFOLD",
    "INFINITY",
    "IRREGULAR",
    "MUM",
    "OTHER",
    "REGULAR",
    "AlgebraicPoint",
    "NumericExponent",
    "RationalPoint",
    "as_point",
    "classify_point",
    "factor_rational",
    "indicial_exponents",
    "indicial_polynomial",
    "singular_points",
    "AlgebraicNumber",
    "NumberField",
    "RationalFunction",
    "self_adjoint_check",
    "self_adjoint_closed_form",
    "RiemannSymbol",
    "SingularPoint",
    "analysis_report",
    "fuchs_relation",
    "has_mum_point",
    "riemann_symbol",
]
