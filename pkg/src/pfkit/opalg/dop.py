"""Operators ``sum_k b_k(t) (d/dt)^k`` with polynomial coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..exact.poly import padd, pcontent_normalize, pderiv, pmul, pscale, pstr, ptrim
from ..opfind.operator import ThetaOperator, normalize


@dataclass(frozen=True)
class DOperator:
    """``coeffs[k]`` is ``b_k(t)`` as an ascending coefficient list."""

    coeffs: tuple

    def __post_init__(self):
        cs = [tuple(Fraction(c) for c in ptrim(b)) for b in self.coeffs]
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) or ((),))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> list[Fraction]:
        return list(self.coeffs[-1])

    def b(self, k: int) -> list[Fraction]:
        return list(self.coeffs[k]) if 0 <= k <= self.order else []

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> "DOperator":
        """Coprime integer coefficients, leading coefficient of ``b_m`` positive."""
        if self.is_zero():
            return self
        ints = pcontent_normalize(self.coeffs)
        lead = ptrim(ints[-1])[-1]
        if lead < 0:
            ints = [[-c for c in b] for b in ints]
        return DOperator(tuple(tuple(b) for b in ints))

    def __add__(self, other: "DOperator") -> "DOperator":
        n = max(len(self.coeffs), len(other.coeffs))
        return DOperator(tuple(padd(self.b(k), other.b(k)) for k in range(n)))

    def __neg__(self):
        return DOperator(tuple(pscale(b, -1) for b in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "DOperator") -> "DOperator":
        return compose(self, other)

    def apply(self, y: Sequence) -> list[Fraction]:
        """Apply to a polynomial ``y(t)``."""
        out, der = [], list(y)
        for b in self.coeffs:
            out = padd(out, pmul(b, der))
            der = pderiv(der)
        return out

    def __str__(self):
        parts = []
        for k, b in enumerate(self.coeffs):
            if ptrim(b):
                d = "" if k == 0 else ("D" if k == 1 else f"D^{k}")
                parts.append(f"({pstr(b)}){d}")
        return " + ".join(reversed(parts)) or "0"


@lru_cache(maxsize=None)
def stirling2(j: int, k: int) -> int:
    if j == k:
        return 1
    if k == 0 or k > j:
        return 0
    return k * stirling2(j - 1, k) + stirling2(j - 1, k - 1)


def falling_factorial_poly(k: int) -> list[Fraction]:
    """``x (x-1) ... (x-k+1)`` ascending."""
    p = [Fraction(1)]
    for i in range(k):
        p = pmul(p, [Fraction(-i), Fraction(1)])
    return p


def theta_to_d(P: ThetaOperator, normalize_result: bool = True) -> DOperator:
    """``theta^j = sum_k S(j,k) t^k D^k``."""
    d = P.d
    b = [[] for _ in range(d + 1)]
    for i, row in enumerate(P.coeffs):
        for j, c in enumerate(row):
            if not c:
                continue
            for k in range(j + 1):
                s = stirling2(j, k)
                if s:
                    mono = [Fraction(0)] * (i + k) + [c * s]
                    b[k] = padd(b[k], mono)
    L = DOperator(tuple(b))
    return L.normalized() if normalize_result else L


def d_to_theta(L: DOperator) -> ThetaOperator:
    """``D^k = t^(-k) theta(theta-1)...(theta-k+1)``, cleared by the smallest
    left power of ``t`` and normalized."""
    terms = {}  # t-power -> theta polynomial
    for k, b in enumerate(L.coeffs):
        ff = falling_factorial_poly(k)
        for e, c in enumerate(b):
            if c:
                key = e - k
                terms[key] = padd(terms.get(key, []), pscale(ff, c))
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        return ThetaOperator(((0,),))
    lo, hi = min(terms), max(terms)
    rows = [terms.get(i, []) for i in range(lo, hi + 1)]
    return normalize(ThetaOperator.from_rows(rows))


def _poly_derivative(b, times: int) -> list[Fraction]:
    for _ in range(times):
        b = pderiv(b)
    return list(b)


def formal_adjoint(L: DOperator) -> DOperator:
    """``L* y = sum_k (-1)^k (b_k y)^(k)``; the ``D^j`` coefficient is
    ``sum_{k>=j} (-1)^k C(k,j) b_k^(k-j)``."""
    m = L.order
    out = []
    for j in range(m + 1):
        acc = []
        for k in range(j, m + 1):
            term = _poly_derivative(L.b(k), k - j)
            acc = padd(acc, pscale(term, (-1) ** k * math.comb(k, j)))
        out.append(acc)
    return DOperator(tuple(out))


def compose(A: DOperator, B: DOperator) -> DOperator:
    """``A o B`` by Leibniz: ``D^k b = sum_i C(k,i) b^(k-i) D^i``."""
    out = [[] for _ in range(A.order + B.order + 1)]
    for k, a in enumerate(A.coeffs):
        if not a:
            continue
        for l, b in enumerate(B.coeffs):
            if not b:
                continue
            for i in range(k + 1):
                bd = _poly_derivative(b, k - i)
                if bd:
                    out[i + l] = padd(out[i + l], pscale(pmul(a, bd), math.comb(k, i)))
    return DOperator(tuple(out))
