"""Constant-term series ``sum_m [f^m]_0 t^m`` of a Laurent polynomial.

``g -> g * f`` is iterated with support pruning: a monomial ``x^e`` of
``f^m`` survives only if some ``f^(m+s)``, ``s <= N - m``, can still bring it
back to ``x^0`` given the per-coordinate exponent range of ``f``.  The
pruning is exact; it never changes a constant term.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..exact.poly import LaurentPoly
from ..exact.series import PowerSeries

_BITS = 20
_HALF = 1 << (_BITS - 1)
_FULL = 1 << _BITS


def _pack(e) -> int:
    key = 0
    for j, x in enumerate(e):
        if abs(x) >= _HALF:
            raise ValueError("exponent out of range")
        key += x << (_BITS * j)
    return key


def _unpack(key: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        r = key & (_FULL - 1)
        if r >= _HALF:
            r -= _FULL
        out.append(r)
        key = (key - r) >> _BITS
    return out


def _as_integer(f: LaurentPoly) -> tuple[dict[int, int], int]:
    den = 1
    for c in f.terms.values():
        den = math.lcm(den, Fraction(c).denominator)
    return {_pack(e): int(Fraction(c) * den) for e, c in f.terms.items()}, den


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def reachable_window(e, lo, hi, remaining: int) -> bool:
    """Whether ``x^e`` can reach ``x^0`` within ``s <= remaining`` more factors."""
    smin, smax = 0, remaining
    for ej, l, h in zip(e, lo, hi):
        # need e_j + s*l <= 0 <= e_j + s*h
        if l < 0:
            smin = max(smin, _ceil_div(ej, -l))
        elif l == 0:
            if ej > 0:
                return False
        else:
            smax = min(smax, (-ej) // l)
        if h > 0:
            smin = max(smin, _ceil_div(-ej, h))
        elif h == 0:
            if ej < 0:
                return False
        else:
            smax = min(smax, ej // (-h))
        if smin > smax:
            return False
    return smin <= smax


def constant_term_series(f: LaurentPoly, N: int, prune: bool = True) -> PowerSeries:
    """``sum_{m=0}^{N} [f^m]_0 t^m``."""
    n = f.nvars
    if not f.terms:
        return PowerSeries([1] + [0] * N)
    F, den = _as_integer(f)
    lo, hi = f.exponent_bounds()
    fitems = list(F.items())
    g = {0: 1}
    out = [Fraction(1)]
    scale = Fraction(1)
    for m in range(1, N + 1):
        nxt: dict[int, int] = {}
        get = nxt.get
        for gk, gv in g.items():
            for fk, fv in fitems:
                k = gk + fk
                nxt[k] = get(k, 0) + gv * fv
        if prune:
            remaining = N - m
            g = {k: v for k, v in nxt.items() if v and reachable_window(_unpack(k, n), lo, hi, remaining)}
        else:
            g = {k: v for k, v in nxt.items() if v}
        scale /= den
        out.append(g.get(0, 0) * scale)
    return PowerSeries(out)


def laurent_power_constant_terms(f: LaurentPoly, N: int) -> list[Fraction]:
    """Unpruned reference: constant terms of ``f^0 .. f^N`` by plain LaurentPoly
    multiplication."""
    g = LaurentPoly.constant(1, f.nvars)
    out = [Fraction(1)]
    for _ in range(N):
        g = g * f
        out.append(Fraction(g.constant_term()))
    return out
