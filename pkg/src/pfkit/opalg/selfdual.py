"""Symplectic self-duality of order-4 operators.

With ``L = D^4 + a3 D^3 + a2 D^2 + a1 D + a0`` monic over Q(t), the operator
preserves a symplectic form iff ``w L* w^(-1) = L`` for the function ``w``
with ``w'/w = u = -a3/2``.  Since ``D o w^(-1) = w^(-1) (D - u)``, the
conjugate equals ``sum_j c_j (D - u)^j`` where ``L* = sum_j c_j D^j``; only
``u`` and its derivatives appear.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import NotSupported
from ..opfind.operator import ThetaOperator
from .dop import DOperator, theta_to_d
from .ratfunc import RationalFunction

RF = RationalFunction


def monic_coefficients(L: DOperator) -> list[RationalFunction]:
    lead = RF(L.leading)
    return [RF(b) / lead for b in L.coeffs]


def rf_adjoint(a: list[RationalFunction]) -> list[RationalFunction]:
    """Adjoint over Q(t): the ``D^j`` coefficient is ``sum_{k>=j} (-1)^k C(k,j) a_k^(k-j)``."""
    m = len(a) - 1
    ders = [ak.derivatives(m) for ak in a]
    out = []
    for j in range(m + 1):
        acc = RF.const(0)
        for k in range(j, m + 1):
            if a[k]:
                acc = acc + ders[k][k - j] * ((-1) ** k * math.comb(k, j))
        out.append(acc)
    return out


def rf_compose(A: list[RationalFunction], B: list[RationalFunction]) -> list[RationalFunction]:
    out = [RF.const(0) for _ in range(len(A) + len(B) - 1)]
    for k, ak in enumerate(A):
        if not ak:
            continue
        for l, bl in enumerate(B):
            if not bl:
                continue
            ders = bl.derivatives(k)
            for i in range(k + 1):
                term = ders[k - i]
                if term:
                    out[i + l] = out[i + l] + ak * term * math.comb(k, i)
    return out


def conjugated_adjoint(a: list[RationalFunction]) -> list[RationalFunction]:
    """``w L* w^(-1)`` for the monic order-4 operator with coefficients ``a``."""
    u = -a[3] / 2
    c = rf_adjoint(a)
    shift = [-u, RF.const(1)]  # D - u
    power = [RF.const(1)]
    out = [RF.const(0) for _ in range(len(a))]
    for j, cj in enumerate(c):
        if j > 0:
            power = rf_compose(power, shift)
        if cj:
            for i, p in enumerate(power):
                out[i] = out[i] + cj * p
    return out


def closed_form_defect(a: list[RationalFunction]) -> RationalFunction:
    """``a1 - (a2 a3/2 - a3^3/8 + a2' - 3/4 a3 a3' - a3''/2)``."""
    a3, a2, a1 = a[3], a[2], a[1]
    a3d = a3.derivative()
    rhs = (
        a2 * a3 * Fraction(1, 2)
        - a3 * a3 * a3 * Fraction(1, 8)
        + a2.derivative()
        - a3 * a3d * Fraction(3, 4)
        - a3d.derivative() * Fraction(1, 2)
    )
    return a1 - rhs


def _as_doperator(P) -> DOperator:
    return theta_to_d(P) if isinstance(P, ThetaOperator) else P


def self_adjoint_check(P) -> bool:
    L = _as_doperator(P)
    if L.order != 4:
        raise NotSupported(f"self-duality check needs order 4, got {L.order}")
    a = monic_coefficients(L)
    conj = conjugated_adjoint(a)
    return all(x == y for x, y in zip(conj, a))


def self_adjoint_closed_form(P) -> bool:
    """The closed-form coefficient identity; agrees with :func:`self_adjoint_check`."""
    L = _as_doperator(P)
    if L.order != 4:
        raise NotSupported(f"self-duality check needs order 4, got {L.order}")
    return closed_form_defect(monic_coefficients(L)).is_zero()
