"""Frobenius basis at a MUM point via the epsilon-deformed recursion.

``Phi(t, eps) = sum_n A_n(eps) t^(n+eps)`` with ``A_0 = 1`` solves
``P Phi = O(eps^m)``; writing ``t^eps = sum_j eps^j log(t)^j / j!`` the
``eps^k`` coefficient is the solution ``phi_k = sum_j log(t)^j/j! f_(k-j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotMUM
from ..exact.jet import EpsilonJet
from ..exact.series import PowerSeries, theta_derivative
from ..opfind.operator import ThetaOperator


class LogSeries:
    """``sum_j log(t)^j * s_j(t)`` with PowerSeries coefficients of equal offset."""

    __slots__ = ("parts",)

    def __init__(self, parts: dict):
        self.parts = {j: s for j, s in parts.items() if not s.is_zero()}

    @property
    def order(self) -> int:
        return min((s.order for s in self.parts.values()), default=0)

    def is_zero(self) -> bool:
        return not self.parts

    def log_degree(self) -> int:
        return max(self.parts, default=-1)

    def __add__(self, other: "LogSeries") -> "LogSeries":
        out = dict(self.parts)
        for j, s in other.parts.items():
            out[j] = out[j] + s if j in out else s
        return LogSeries(out)

    def scale(self, c) -> "LogSeries":
        return LogSeries({j: s * c for j, s in self.parts.items()})

    def theta(self) -> "LogSeries":
        """``theta(L^j g) = j L^(j-1) g + L^j theta(g)``."""
        out = {}
        for j, s in self.parts.items():
            ts = theta_derivative(s)
            out[j] = out[j] + ts if j in out else ts
            if j:
                term = s * j
                out[j - 1] = out[j - 1] + term if j - 1 in out else term
        return LogSeries(out)

    def shift_t(self, i: int) -> "LogSeries":
        """Multiply by ``t^i`` keeping the original truncation order."""
        out = {}
        for j, s in self.parts.items():
            cs = [s.zero] * i + list(s.coeffs)
            out[j] = PowerSeries(cs[: len(s.coeffs)], s.offset)
        return LogSeries(out)


def apply_operator_log(P: ThetaOperator, F: LogSeries) -> LogSeries:
    total = LogSeries({})
    for i, row in enumerate(P.coeffs):
        if not any(row):
            continue
        acc = LogSeries({})
        for c in reversed(row):  # Horner in theta
            acc = acc.theta() + F.scale(c)
        total = total + acc.shift_t(i)
    return total


def mum_normalized(P: ThetaOperator) -> ThetaOperator:
    """Scale so that ``P_0 = theta^m``; NotMUM unless ``P_0 = c theta^m``, ``m = order``."""
    m = P.order
    row0 = list(P.coeffs[0])
    if m < 1 or any(c != 0 for c in row0[:m]) or row0[m] == 0:
        raise NotMUM("P_0 must be c*theta^m with m the operator order (MUM point at t = 0)")
    c = row0[m]
    return ThetaOperator(tuple(tuple(x / c for x in row[: m + 1]) for row in P.coeffs))


@dataclass(frozen=True)
class FrobeniusBasis:
    operator: ThetaOperator  # normalized, P_0 = theta^m
    jets: tuple  # A_0(eps) .. A_N(eps)

    @property
    def m(self) -> int:
        return self.operator.order

    @property
    def N(self) -> int:
        return len(self.jets) - 1

    def f(self, i: int) -> PowerSeries:
        """``sum_n [eps^i] A_n t^n``."""
        return PowerSeries([a[i] for a in self.jets])

    @property
    def phi0(self) -> PowerSeries:
        return self.f(0)

    @property
    def rho(self) -> PowerSeries:
        return self.f(1)

    def solution(self, k: int) -> LogSeries:
        """``phi_k = sum_j log(t)^j / j! * f_(k-j)``."""
        if not 0 <= k < self.m:
            raise ValueError(f"solution index must be in 0..{self.m - 1}")
        return LogSeries({j: self.f(k - j) * Fraction(1, math.factorial(j)) for j in range(k + 1)})


def frobenius_solutions(P: ThetaOperator, N: int) -> FrobeniusBasis:
    Pn = mum_normalized(P)
    m = Pn.order
    rows = [Pn.row(i) for i in range(Pn.r + 1)]
    jets = [EpsilonJet.constant(1, m)]

    def at(row, n):
        x = EpsilonJet.eps(m, n)
        acc = EpsilonJet.constant(0, m)
        for c in reversed(row):
            acc = acc * x + c
        return acc

    for n in range(1, N + 1):
        s = EpsilonJet.constant(0, m)
        for i in range(1, min(n, Pn.r) + 1):
            if any(rows[i]):
                s = s + at(rows[i], n - i) * jets[n - i]
        jets.append(-s / EpsilonJet.eps(m, n) ** m)
    return FrobeniusBasis(Pn, tuple(jets))
