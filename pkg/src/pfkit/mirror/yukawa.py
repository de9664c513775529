"""Mirror map, Yukawa coupling and instanton numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..errors import NormalizationFailure, PreconditionError
from ..exact.series import (
    PowerSeries,
    series_compose,
    series_exp,
    series_mul,
    series_reversion,
    theta_derivative,
)
from ..exact.textio import format_rational
from ..opfind.operator import ThetaOperator
from .frobenius import FrobeniusBasis, frobenius_solutions


class MirrorMap(NamedTuple):
    q: PowerSeries  # q(t) = t exp(rho/phi0)
    t_of_q: PowerSeries  # compositional inverse


def mirror_map(basis: FrobeniusBasis) -> MirrorMap:
    r = basis.rho / basis.phi0
    e = series_exp(r)
    q = PowerSeries((Fraction(0),) + e.coeffs[:-1], 0)  # t * exp(r), same order
    return MirrorMap(q, series_reversion(q))


def yukawa(P: ThetaOperator, basis: FrobeniusBasis | None, n0, N: int | None = None) -> PowerSeries:
    """``K(q) = n0 * D^2(tau_2)`` with ``tau_2 = phi_2/phi_0`` and ``D = q d/dq``.

    ``tau_2 = (1/2) log(q)^2 + h`` with ``h = f2/f0 - (f1/f0)^2 / 2`` holomorphic,
    so ``W = 1 + D^2 h(t(q))``.
    """
    n0 = Fraction(n0)
    if n0 == 0:
        raise PreconditionError("n0 must be nonzero")
    if basis is None:
        if N is None:
            raise ValueError("need a basis or an order N")
        basis = frobenius_solutions(P, N)
    if basis.m < 3:
        raise PreconditionError("the Yukawa coupling needs an operator of order >= 3")
    if N is not None and N < basis.N:
        basis = FrobeniusBasis(basis.operator, basis.jets[: N + 1])
    f0, f1, f2 = basis.f(0), basis.f(1), basis.f(2)
    r = f1 / f0
    h = f2 / f0 - series_mul(r, r) * Fraction(1, 2)
    mm = mirror_map(basis)
    hq = series_compose(h, mm.t_of_q)
    W = theta_derivative(theta_derivative(hq)) + 1
    if W.coeffs[0] != 1:
        raise NormalizationFailure(f"W(0) = {W.coeffs[0]} != 1; Frobenius normalization broken")
    return W * n0


@dataclass(frozen=True)
class InstantonTable:
    n0: Fraction
    numbers: tuple  # n_1 .. n_D

    @property
    def D(self) -> int:
        return len(self.numbers)

    def __getitem__(self, d: int) -> Fraction:
        if d == 0:
            return self.n0
        return self.numbers[d - 1]

    def integral(self, d: int) -> bool:
        return self[d].denominator == 1

    def common_denominator(self) -> int:
        den = 1
        for n in self.numbers:
            den = math.lcm(den, n.denominator)
        return den

    def lambert(self) -> PowerSeries:
        """``n0 + sum_d n_d d^3 q^d / (1 - q^d)`` to order D."""
        cs = [self.n0] + [Fraction(0)] * self.D
        for d in range(1, self.D + 1):
            w = self.numbers[d - 1] * d**3
            for k in range(d, self.D + 1, d):
                cs[k] += w
        return PowerSeries(cs)

    def lines(self) -> list[str]:
        return [f"{d}: {format_rational(self[d])}" for d in range(1, self.D + 1)]


def instanton_numbers(K: PowerSeries, D: int) -> InstantonTable:
    if K.offset != 0 or K.coeffs[0] == 0:
        raise PreconditionError("K(0) = n0 must be nonzero")
    if D > K.order:
        raise ValueError(f"depth {D} exceeds the order {K.order} of K")
    n = [Fraction(0)] * (D + 1)
    for d in range(1, D + 1):
        s = K.coeffs[d]
        for e in range(1, d):
            if d % e == 0:
                s -= n[e] * e**3
        n[d] = s / d**3
    return InstantonTable(K.coeffs[0], tuple(n[1:]))


@dataclass(frozen=True)
class IntegralityReport:
    phi0_integral: bool
    q_integral: bool
    instantons_integral: bool
    instanton_denominator: int
    N: int
    D: int
    first_bad_phi0: int | None = None
    first_bad_q: int | None = None

    def lines(self) -> list[str]:
        def flag(ok, bad):
            return "yes" if ok else f"no (first at t^{bad})"

        return [
            f"phi0 integral to order {self.N}: {flag(self.phi0_integral, self.first_bad_phi0)}",
            f"q(t) integral to order {self.N}: {flag(self.q_integral, self.first_bad_q)}",
            f"instanton numbers n_1..n_{self.D} integral: "
            + ("yes" if self.instantons_integral else f"up to common denominator {self.instanton_denominator}"),
        ]


def _first_nonintegral(s: PowerSeries):
    return next((n for n, c in enumerate(s.coeffs) if Fraction(c).denominator != 1), None)


def integrality_report(P: ThetaOperator, N: int, D: int, n0=1) -> IntegralityReport:
    basis = frobenius_solutions(P, max(N, D))
    trunc = FrobeniusBasis(basis.operator, basis.jets[: N + 1])
    phi_bad = _first_nonintegral(trunc.phi0)
    q_bad = _first_nonintegral(mirror_map(trunc).q)
    table = instanton_numbers(yukawa(P, basis, n0, D), D)
    den = table.common_denominator()
    return IntegralityReport(phi_bad is None, q_bad is None, den == 1, den, N, D, phi_bad, q_bad)


def mirror_report(P: ThetaOperator, n0, D: int, N: int | None = None) -> str:
    N = max(N or 0, D)
    basis = frobenius_solutions(P, N)
    mm = mirror_map(basis)
    K = yukawa(P, basis, n0, D)
    table = instanton_numbers(K, D)
    integ = integrality_report(P, N, D, n0)

    def expansion(s: PowerSeries, var: str) -> str:
        terms = []
        for k, c in enumerate(s.coeffs):
            if c:
                mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
                if not mono:
                    terms.append(format_rational(c))
                else:
                    terms.append(mono if c == 1 else f"{format_rational(c)}*{mono}")
        return " + ".join(terms) + f" + O({var}^{s.order + 1})"

    lines = [
        f"phi0 = {expansion(basis.phi0.truncate(D), 't')}",
        f"q = {expansion(mm.q.truncate(D), 't')}",
        f"K = {expansion(K, 'q')}",
        "",
        "d | n_d | integral?",
    ]
    for d in range(1, D + 1):
        lines.append(f"{d} | {format_rational(table[d])} | {'yes' if table.integral(d) else 'no'}")
    lines.append("")
    lines += integ.lines()
    lines.append("")
    lines += table.lines()
    return "\n".join(lines) + "\n"
