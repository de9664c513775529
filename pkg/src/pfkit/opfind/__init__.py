"""Operator guessing: fit a theta-form recursion to series coefficients."""

from .fit import (
    SearchResult,
    build_system,
    find_minimal_operator,
    fit_operator,
    required_terms,
    search_minimal_operator,
    search_order,
)
from .linalg import nullspace, rank, row_reduce
from .operator import (
    ThetaOperator,
    apply_operator,
    dumps_operator,
    loads_operator,
    normalize,
    pretty,
    read_operator,
    theta_poly_from_roots,
    write_operator,
)

__all__ = [
    "SearchResult",
    "build_system",
    "find_minimal_operator",
    "fit_operator",
    "required_terms",
    "search_minimal_operator",
    "search_order",
    "nullspace",
    "rank",
    "row_reduce",
    "ThetaOperator",
    "apply_operator",
    "dumps_operator",
    "loads_operator",
    "normalize",
    "pretty",
    "read_operator",
    "theta_poly_from_roots",
    "write_operator",
]
