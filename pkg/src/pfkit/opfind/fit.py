"""Guess a theta-form operator from a truncated period series."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InsufficientTermsWarning, NotFound
from ..exact.series import PowerSeries
from .linalg import nullspace, primitive_row
from .operator import ThetaOperator, apply_operator, normalize


def required_terms(d: int, r: int, holdout: int = 6) -> int:
    return (d + 1) * (r + 1) + holdout


def build_system(s: PowerSeries, d: int, r: int, n_eq: int) -> list[list[int]]:
    """Rows ``n = 0..n_eq-1`` of ``sum_i P_i(n-i+mu) a_(n-i) = 0``.

    Column ``i*(d+1) + j`` holds the coefficient of the unknown ``c_ij``
    (``t^i theta^j``).  Each row is returned as a primitive integer vector.
    """
    mu = s.offset
    a = s.coeffs
    rows = []
    for n in range(n_eq):
        row = [Fraction(0)] * ((d + 1) * (r + 1))
        for i in range(min(n, r) + 1):
            an = a[n - i]
            if not an:
                continue
            x = n - i + mu
            p = an
            for j in range(d + 1):
                row[i * (d + 1) + j] = p
                p *= x
        rows.append(primitive_row(row))
    return rows


def fit_operator(s: PowerSeries, d: int, r: int, n_eq: int | None = None) -> list[ThetaOperator]:
    """Normalized kernel basis of the ``n_eq`` recursion equations."""
    available = len(s.coeffs)
    if n_eq is None:
        n_eq = available
    if n_eq > available:
        raise ValueError(f"n_eq={n_eq} exceeds the {available} available coefficients")
    unknowns = (d + 1) * (r + 1)
    if n_eq < unknowns:
        warnings.warn(
            f"{n_eq} equations for {unknowns} unknowns; the kernel may be spuriously large",
            InsufficientTermsWarning,
            stacklevel=2,
        )
    rows = build_system(s, d, r, n_eq)
    return [normalize(ThetaOperator.from_vector(v, d, r)) for v in nullspace(rows, unknowns)]


@dataclass
class SearchResult:
    operator: ThetaOperator
    d: int
    r: int
    kernel_dim: int
    trace: list = field(default_factory=list)


def search_order(d_max: int, r_max: int, d_min: int = 0):
    pairs = [(d, r) for d in range(d_min, d_max + 1) for r in range(r_max + 1)]
    return sorted(pairs, key=lambda p: ((p[0] + 1) * (p[1] + 1), p[0]))


def _pick(kernel: list[ThetaOperator]) -> ThetaOperator:
    def key(P):
        P = P.trimmed()
        return ((P.order + 1) * (P.degree + 1), P.order)

    return min(kernel, key=key)


def search_minimal_operator(
    s: PowerSeries, d_max: int, r_max: int, holdout: int = 6, d_min: int = 1
) -> SearchResult:
    """Scan ``(d, r)`` by unknown count; fit on every available equation,
    requiring at least ``holdout`` more equations than unknowns, and accept
    the first kernel element whose residual vanishes to the full order."""
    if s.is_zero():
        raise NotFound("the zero series is annihilated by every operator", ["rejected: zero series"])
    available = len(s.coeffs)
    trace = []
    for d, r in search_order(d_max, r_max, d_min):
        unknowns = (d + 1) * (r + 1)
        need = unknowns + holdout
        if available < need:
            trace.append(f"d={d} r={r} unknowns={unknowns}: skipped, needs {need} terms")
            continue
        kernel = fit_operator(s, d, r, available)
        if not kernel:
            trace.append(f"d={d} r={r} unknowns={unknowns} equations={available}: kernel 0")
            continue
        P = _pick(kernel)
        residual = apply_operator(P, s)
        if not residual.is_zero():
            trace.append(f"d={d} r={r}: kernel {len(kernel)} but residual nonzero")
            continue
        trace.append(f"d={d} r={r} unknowns={unknowns} equations={available}: kernel {len(kernel)}, verified")
        return SearchResult(P, d, r, len(kernel), trace)
    raise NotFound(f"no operator with d <= {d_max}, r <= {r_max} annihilates the series", trace)


def find_minimal_operator(
    s: PowerSeries, d_max: int, r_max: int, holdout: int = 6, d_min: int = 1
) -> ThetaOperator:
    return search_minimal_operator(s, d_max, r_max, holdout, d_min).operator
