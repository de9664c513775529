"""Truncated power series ``t^mu * (a_0 + a_1 t + ... + a_N t^N + O(t^(N+1)))``.

Coefficients are exact ring elements (``Fraction`` by default, but
``EpsilonJet`` and ``QuadExtScalar`` work as well).  The offset ``mu`` is an
arbitrary rational, so Puiseux-type expansions such as ``t^(n/2-1)(...)``
need no substitution tricks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import BadLeading, NonSquareLeading, ZeroLeading


def _frac(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return x


class PowerSeries:
    """Immutable truncated series with a rational exponent offset."""

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable, offset=0, order: int | None = None):
        cs = tuple(_frac(c) for c in coeffs)
        if order is not None:
            if order + 1 <= len(cs):
                cs = cs[: order + 1]
            else:
                zero = cs[0] * 0 if cs else Fraction(0)
                cs = cs + (zero,) * (order + 1 - len(cs))
        self.coeffs = cs
        self.offset = Fraction(offset)

    # -- basic protocol -------------------------------------------------
    @property
    def order(self) -> int:
        """Relative truncation order N: coefficients a_0..a_N are known."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if c != 0) or "0"
        pre = f"t^({self.offset})*" if self.offset else ""
        return f"{pre}({body} + O(t^{self.order + 1}))"

    @property
    def zero(self):
        return self.coeffs[0] * 0 if self.coeffs else Fraction(0)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: order + 1], self.offset)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient (None for the zero series)."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def map(self, fn) -> "PowerSeries":
        return PowerSeries((fn(c) for c in self.coeffs), self.offset)

    # -- ring operations ------------------------------------------------
    def __neg__(self):
        return PowerSeries((-c for c in self.coeffs), self.offset)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            if self.offset != 0:
                raise ValueError("scalar addition needs offset 0")
            return PowerSeries((self.coeffs[0] + other,) + self.coeffs[1:], 0)
        lo = min(self.offset, other.offset)
        shift_a, shift_b = self.offset - lo, other.offset - lo
        if shift_a.denominator != 1 or shift_b.denominator != 1:
            raise ValueError("offsets differ by a non-integer")
        sa, sb = int(shift_a), int(shift_b)
        top = min(sa + self.order, sb + other.order)
        zero = self.zero
        out = []
        for n in range(top + 1):
            c = zero
            if sa <= n:
                c = c + self.coeffs[n - sa]
            if sb <= n:
                c = c + other.coeffs[n - sb]
            out.append(c)
        return PowerSeries(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return PowerSeries((c * other for c in self.coeffs), self.offset)

    def __rmul__(self, other):
        return PowerSeries((other * c for c in self.coeffs), self.offset)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, series_inv(other))
        return PowerSeries((c / other for c in self.coeffs), self.offset)

    def __pow__(self, k: int):
        if k < 0:
            return series_inv(self) ** (-k)
        result = PowerSeries([self.zero + 1], 0, order=self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product; offsets add and the order is min(N_a, N_b)."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    zero = a.zero * b.zero
    out = []
    for k in range(n + 1):
        s = zero
        for i in range(k + 1):
            x = ac[i]
            if x != 0:
                y = bc[k - i]
                if y != 0:
                    s = s + x * y
        out.append(s)
    return PowerSeries(out, a.offset + b.offset)


def series_inv(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; requires a nonzero leading coefficient."""
    if not a.coeffs or a.coeffs[0] == 0:
        raise ZeroLeading("series with zero leading coefficient is not invertible")
    a0inv = 1 / a.coeffs[0]
    b = [a0inv]
    for n in range(1, a.order + 1):
        s = a.zero
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                s = s + a.coeffs[k] * b[n - k]
        b.append(-s * a0inv)
    return PowerSeries(b, -a.offset)


def series_power(a: PowerSeries, alpha, lead=None) -> PowerSeries:
    """``a^alpha`` for rational ``alpha`` via the J.C.P. Miller recurrence.

    ``lead`` must be ``a_0^alpha``; it is computed when ``alpha`` is an
    integer and must be supplied otherwise.
    """
    alpha = Fraction(alpha)
    if a.offset != 0:
        raise BadLeading("series_power expects offset 0")
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroLeading("zero leading coefficient")
    if lead is None:
        if alpha.denominator != 1:
            raise ValueError("lead coefficient required for fractional exponents")
        lead = a0 ** int(alpha)
    a0inv = 1 / a0
    b = [lead]
    for n in range(1, a.order + 1):
        s = a.zero
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak != 0:
                s = s + ((alpha + 1) * k - n) * ak * b[n - k]
        b.append(s * a0inv / n)
    return PowerSeries(b, 0)


def rational_sqrt(q) -> Fraction | None:
    """Nonnegative rational square root of ``q`` or None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def series_inv_sqrt(a: PowerSeries) -> PowerSeries:
    """``a^(-1/2)`` for a series whose leading coefficient is a rational square."""
    if a.offset != 0:
        raise BadLeading("series_inv_sqrt expects offset 0")
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroLeading("zero leading coefficient")
    s = rational_sqrt(a0)
    if s is None:
        raise NonSquareLeading(f"leading coefficient {a0} is not a rational square")
    return series_power(a, Fraction(-1, 2), lead=1 / s)


def series_log1p(a: PowerSeries) -> PowerSeries:
    """``log(a)`` for ``a = 1 + O(t)``; the result has zero constant term."""
    if a.offset != 0 or not a.coeffs or a.coeffs[0] != 1:
        raise BadLeading("series_log1p expects a_0 = 1 and offset 0")
    ac = a.coeffs
    out = [a.zero]
    for n in range(1, a.order + 1):
        s = n * ac[n]
        for k in range(1, n):
            if ac[n - k] != 0:
                s = s - k * out[k] * ac[n - k]
        out.append(s / n)
    return PowerSeries(out, 0)


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for a series with zero constant term."""
    if a.offset != 0 or (a.coeffs and a.coeffs[0] != 0):
        raise BadLeading("series_exp expects zero constant term and offset 0")
    ac = a.coeffs
    out = [a.zero + 1]
    for n in range(1, a.order + 1):
        s = a.zero
        for k in range(1, n + 1):
            if ac[k] != 0:
                s = s + k * ac[k] * out[n - k]
        out.append(s / n)
    return PowerSeries(out, 0)


def series_reversion(a: PowerSeries) -> PowerSeries:
    """Compositional inverse of ``a = a_1 t + a_2 t^2 + ...`` (a_1 != 0).

    Uses Lagrange inversion: ``[q^n] b = (1/n) [t^(n-1)] (t/a)^n``.
    """
    if a.offset != 0 or a.order < 1 or a.coeffs[0] != 0 or a.coeffs[1] == 0:
        raise BadLeading("series_reversion expects a = a_1 t + ..., a_1 != 0")
    N = a.order
    w = series_inv(PowerSeries(a.coeffs[1:], 0))  # t/a, known to order N-1
    out = [a.zero, w.coeffs[0]]
    wn = w
    for n in range(2, N + 1):
        wn = series_mul(wn, w)
        out.append(wn.coeffs[n - 1] / n)
    return PowerSeries(out, 0)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(t))`` for integer-offset-free ``f`` and ``g = O(t)``."""
    if f.offset != 0 or g.offset != 0:
        raise BadLeading("series_compose expects offset-free series")
    if g.coeffs and g.coeffs[0] != 0:
        raise BadLeading("inner series must have zero constant term")
    N = min(f.order, g.order)
    g = g.truncate(N)
    result = PowerSeries([f.coeffs[N]], 0, order=N)
    for k in range(N - 1, -1, -1):
        result = series_mul(result, g)
        result = PowerSeries((result.coeffs[0] + f.coeffs[k],) + result.coeffs[1:], 0)
    return result


def theta_derivative(a: PowerSeries) -> PowerSeries:
    """Apply ``theta = t d/dt``: a_n -> (n + mu) a_n, offset unchanged."""
    mu = a.offset
    return PowerSeries(((n + mu) * c for n, c in enumerate(a.coeffs)), mu)


def derivative(a: PowerSeries) -> PowerSeries:
    """Apply ``d/dt``; the offset drops by one."""
    s = theta_derivative(a)
    return PowerSeries(s.coeffs, a.offset - 1)


def from_function(fn, order: int, offset=0) -> PowerSeries:
    """Series with coefficients ``fn(0), ..., fn(order)``."""
    return PowerSeries((fn(n) for n in range(order + 1)), offset)


def monomial(k: int, order: int, coeff=1) -> PowerSeries:
    cs = [Fraction(0)] * (order + 1)
    if k <= order:
        cs[k] = Fraction(coeff)
    return PowerSeries(cs)


def as_series(values: Sequence, offset=0) -> PowerSeries:
    return PowerSeries(values, offset)
