"""Periods over vanishing simplices.

For ``u^2 = x_1...x_n (t - x_1 - ... - x_n) P(x, t)`` the period over the
simplex ``T_t`` is, after ``x -> t x``,

    F(t) = t^((n-1)/2) * int_T (x_1..x_n (1 - sum x))^(-1/2) P(t x, t)^(-1/2) dx

and every monomial ``x^k`` integrates to a Dirichlet moment.  The inverse
square root is expanded t-adically with coefficients that are polynomials in
``x``; all of the heavy lifting is done in integers.
"""

from __future__ import annotations

import importlib.util
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ViolatedNonvanishing
from ..exact.poly import MultiPoly
from ..exact.series import PowerSeries
from .expansion import PeriodExpansion

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1


@dataclass(frozen=True)
class SimplexProblem:
    """``dim`` simplex variables, ``P`` over ``x_1..x_n, t``, expansion order."""

    dim: int
    P: MultiPoly
    order: int

    def __post_init__(self):
        if self.P.nvars != self.dim + 1:
            raise ValueError("P must be a polynomial in x_1..x_n and t")
        if self.order < 0:
            raise ValueError("order must be non-negative")


def rising(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def simplex_moment(k: Sequence[int]) -> Fraction:
    """Normalized Dirichlet moment ``I(k)/I(0)`` over the standard simplex.

    ``I(k) = int_T prod x_i^k_i (x_1...x_n (1 - sum x))^(-1/2) dx``, so the
    result is ``prod (1/2)_{k_i} / ((n+1)/2)_{|k|}``.
    """
    n = len(k)
    half = Fraction(1, 2)
    num = Fraction(1)
    for ki in k:
        num *= rising(half, ki)
    return num / rising(Fraction(n + 1, 2), sum(k))


def _pack(e: Sequence[int]) -> int:
    key = 0
    for i, x in enumerate(e):
        if x > _MASK:
            raise ValueError("exponent too large for packed key")
        key |= x << (_SHIFT * i)
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (_SHIFT * i)) & _MASK for i in range(n))


def _integer_scaled(P: MultiPoly) -> MultiPoly:
    den = 1
    for c in P.terms.values():
        den = math.lcm(den, Fraction(c).denominator)
    return MultiPoly({e: int(c * den) for e, c in P.terms.items()}, P.nvars)


def substituted_layers(P: MultiPoly, n: int) -> dict[int, list[tuple[int, int]]]:
    """Group ``P(t x, t)`` by t-degree: ``{k: [(packed x-exponent, coeff), ...]}``."""
    layers: dict[int, dict[int, int]] = {}
    for e, c in P.terms.items():
        xs, te = e[:n], e[n]
        k = sum(xs) + te
        layer = layers.setdefault(k, {})
        key = _pack(xs)
        layer[key] = layer.get(key, 0) + int(c)
    return {k: sorted((key, c) for key, c in v.items() if c) for k, v in layers.items()}


def inverse_sqrt_layers(layers, p0: int, N: int):
    """Yield ``(m, G_m)`` where ``G_m = 2^m m! p0^m [t^m] (P(tx,t)/p0)^(-1/2)``.

    ``G_m`` is an integer polynomial in ``x`` (packed keys).  From the Miller
    recurrence for ``h^(-1/2)``::

        G_m = sum_k (k - 2m) 2^(k-1) (m-1)!/(m-k)! p0^(k-1) H_k G_(m-k)
    """
    K = max([k for k in layers if k > 0], default=0)
    window = [{0: 1}]
    yield 0, window[0]
    for m in range(1, N + 1):
        out: dict[int, int] = {}
        get = out.get
        ff = 1  # (m-1)!/(m-k)!
        for k in range(1, min(m, K) + 1):
            if k > 1:
                ff *= m - k + 1
            Hk = layers.get(k)
            if not Hk:
                continue
            factor = (k - 2 * m) * (1 << (k - 1)) * ff * p0 ** (k - 1)
            prev = window[-k]
            for hkey, hc in Hk:
                c = factor * hc
                for gkey, gv in prev.items():
                    nk = gkey + hkey
                    out[nk] = get(nk, 0) + c * gv
        out = {key: v for key, v in out.items() if v}
        window.append(out)
        if len(window) > K:
            window.pop(0)
        yield m, out


def _transcendental_part(n: int) -> tuple[Fraction, Fraction]:
    """``I(0) = Gamma(1/2)^(n+1)/Gamma((n+1)/2) = rational * pi^power``."""
    if n % 2 == 1:
        # Gamma((n+1)/2) = ((n-1)/2)!
        return Fraction(1, math.factorial((n - 1) // 2)), Fraction(n + 1, 2)
    # Gamma((n+1)/2) = sqrt(pi) (n-1)!! / 2^(n/2)
    dfact = math.prod(range(n - 1, 0, -2)) if n > 1 else 1
    return Fraction(2 ** (n // 2), dfact), Fraction(n, 2)


def _flint_available() -> bool:
    return importlib.util.find_spec("flint") is not None


def _inverse_sqrt_flint(layers, p0: int, N: int, n: int):
    """Same recurrence as :func:`inverse_sqrt_layers` on ``fmpz_mpoly``;
    yields ``(m, [(exponents, coeff), ...])``."""
    import flint

    ctx = flint.fmpz_mpoly_ctx.get(tuple(f"x{i}" for i in range(1, n + 1)), "lex")
    H = {k: ctx.from_dict({_unpack(key, n): c for key, c in terms}) for k, terms in layers.items() if k > 0}
    K = max(H, default=0)
    window = [ctx.from_dict({(0,) * n: 1})]
    yield 0, [((0,) * n, 1)]
    for m in range(1, N + 1):
        out = ctx.from_dict({})
        ff = 1
        for k in range(1, min(m, K) + 1):
            if k > 1:
                ff *= m - k + 1
            Hk = H.get(k)
            if Hk is None:
                continue
            out += ((k - 2 * m) * (1 << (k - 1)) * ff * p0 ** (k - 1)) * (Hk * window[-k])
        window.append(out)
        if len(window) > K:
            window.pop(0)
        yield m, zip(out.monoms(), (int(c) for c in out.coeffs()))


def simplex_period(p: SimplexProblem, backend: str = "auto") -> PeriodExpansion:
    """Expand the simplex period to order ``p.order``.

    The returned series is ``A_0 + A_1 t + ...`` with ``A_0 = 1`` and offset
    ``(n-1)/2``; ``prefactor_square`` records ``1/P(0;0)``.

    ``backend`` is ``"python"``, ``"flint"`` (needs python-flint) or
    ``"auto"``; all backends are exact and return identical series.
    """
    n, N = p.dim, p.order
    P0 = p.P.constant_term()
    if P0 == 0:
        raise ViolatedNonvanishing("P(0;0) must be nonzero")
    if backend == "auto":
        backend = "flint" if _flint_available() and n > 1 else "python"
    if backend not in ("python", "flint"):
        raise ValueError(f"unknown backend {backend!r}")
    Pint = _integer_scaled(p.P)
    p0 = int(Pint.constant_term())
    layers = substituted_layers(Pint, n)

    wfact = [1]

    def weight(a) -> int:
        w = 1
        for ai in a:
            while len(wfact) <= ai:
                k = len(wfact)
                wfact.append(wfact[-1] * (4 * k - 2))  # (2k)!/k!
            w *= wfact[ai]
        return w

    if backend == "flint":
        stream = _inverse_sqrt_flint(layers, p0, N, n)
    else:
        stream = (
            (m, ((_unpack(key, n), v) for key, v in G.items()))
            for m, G in inverse_sqrt_layers(layers, p0, N)
        )

    coeffs = []
    base = Fraction(n + 1, 2)
    rising_cache = [Fraction(1)]
    scale = Fraction(1)  # 1/(2^m m! p0^m)
    for m, terms in stream:
        if m > 0:
            scale /= 2 * m * p0
        buckets: dict[int, int] = {}
        for a, v in terms:
            j = sum(a)
            buckets[j] = buckets.get(j, 0) + v * weight(a)
        total = Fraction(0)
        for j, s in buckets.items():
            while len(rising_cache) <= j:
                i = len(rising_cache) - 1
                rising_cache.append(rising_cache[-1] * 4 * (base + i))
            total += Fraction(s) / rising_cache[j]
        coeffs.append(total * scale)

    rat, pi_power = _transcendental_part(n)
    series = PowerSeries(coeffs, Fraction(n - 1, 2))
    return PeriodExpansion(
        prefactor_square=1 / Fraction(P0),
        pi_power=pi_power,
        rational_factor=rat,
        series=series,
    )


def simplex_period_reference(p: SimplexProblem) -> PowerSeries:
    """Slow, direct route: binomial-expand ``(1 + R)^(-1/2)`` with rational
    MultiPoly arithmetic and contract with ``simplex_moment``.  Test oracle."""
    n, N = p.dim, p.order
    P0 = p.P.constant_term()
    if P0 == 0:
        raise ViolatedNonvanishing("P(0;0) must be nonzero")
    # substitute x_i -> t x_i, working in (x, t)
    terms = {}
    for e, c in p.P.terms.items():
        xs, te = e[:n], e[n]
        key = xs + (te + sum(xs),)
        terms[key] = terms.get(key, 0) + c / P0
    R = MultiPoly(terms, n + 1) - 1

    def trunc_t(q: MultiPoly) -> MultiPoly:
        return MultiPoly({e: c for e, c in q.terms.items() if e[n] <= N}, n + 1)

    total = MultiPoly.constant(1, n + 1)
    Rk = MultiPoly.constant(1, n + 1)
    binom = Fraction(1)
    for k in range(1, N + 1):
        Rk = trunc_t(Rk * R)
        binom *= Fraction(-1, 2) - (k - 1)
        binom /= k
        total = total + Rk * binom
    coeffs = [Fraction(0)] * (N + 1)
    for e, c in total.terms.items():
        coeffs[e[n]] += c * simplex_moment(e[:n])
    return PowerSeries(coeffs, Fraction(n - 1, 2))
