"""Local analysis: singular points, indicial polynomials, exponent patterns."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import sympy

from ..exact.poly import pcompose_shift, pcontent_normalize, peval, pgcd, pstr, ptrim
from .dop import DOperator, d_to_theta, falling_factorial_poly
from .numfield import NumberField

DIGITS = 50

MUM = "MUM-candidate"
CONIFOLD = "conifold-candidate"
APPARENT = "apparent-candidate"
REGULAR = "regular"
OTHER = "other"
IRREGULAR = "irregular"


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalPoint:
    value: Fraction
    kind = "rational"

    def sort_key(self):
        return (0, self.value)

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class AlgebraicPoint:
    """All roots of an irreducible integer polynomial (coefficients ascending)."""

    minpoly: tuple
    kind = "algebraic"

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def field(self) -> NumberField:
        return NumberField(self.minpoly)

    def roots(self, digits: int = DIGITS) -> list:
        return numeric_roots(self.minpoly, digits)

    def sort_key(self):
        return (1, self.degree, tuple(abs(c) for c in reversed(self.minpoly)), self.minpoly)

    def __str__(self):
        return f"roots of {pstr(list(self.minpoly))}"


@dataclass(frozen=True)
class InfinityPoint:
    kind = "infinity"

    def sort_key(self):
        return (2,)

    def __str__(self):
        return "∞"


INFINITY = InfinityPoint()


def as_point(p):
    if isinstance(p, (RationalPoint, AlgebraicPoint, InfinityPoint)):
        return p
    if isinstance(p, str) and p.strip() in ("inf", "infinity", "∞", "oo"):
        return INFINITY
    return RationalPoint(Fraction(p))


@dataclass(frozen=True)
class NumericExponent:
    """An irrational exponent: approximate value plus its exact indicial factor."""

    value: str
    factor: str

    def __str__(self):
        return f"~{self.value}"


# ---------------------------------------------------------------------------
# polynomial root helpers
# ---------------------------------------------------------------------------


def _sympy_poly(p: Sequence, x):
    return sympy.Poly(list(reversed([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in ptrim(p)])), x, domain="QQ")


def factor_rational(p: Sequence):
    """Irreducible factors over Q: ``[(ascending integer coeffs, multiplicity), ...]``."""
    x = sympy.Symbol("x")
    p = ptrim(p)
    if len(p) <= 1:
        return []
    _, factors = _sympy_poly(p, x).factor_list()
    out = []
    for f, mult in factors:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(f.all_coeffs())]
        ints = pcontent_normalize([coeffs])[0]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        out.append((tuple(ints), int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), [abs(c) for c in reversed(fm[0])], fm[0]))
    return out


def numeric_roots(p: Sequence, digits: int = DIGITS) -> list:
    p = ptrim(p)
    if len(p) <= 1:
        return []
    with mpmath.workdps(digits + 10):
        coeffs = [mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in reversed(p)]
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * digits + 100)
        roots = [mpmath.mpc(r) for r in roots]
        roots.sort(key=lambda r: (mpmath.nint(r.real * 10**12), r.imag))
        return roots


def _fmt_complex(z, digits: int = 20) -> str:
    with mpmath.workdps(digits + 5):
        if abs(z.imag) < mpmath.mpf(10) ** (-(digits + 5) // 2):
            return mpmath.nstr(z.real, digits)
        return mpmath.nstr(z, digits)


def rational_roots(p: Sequence) -> tuple[dict, list]:
    """``({root: multiplicity}, [non-linear factors with multiplicity])``."""
    roots, rest = {}, []
    for f, mult in factor_rational(p):
        if len(f) == 2:
            roots[Fraction(-f[0], f[1])] = mult
        else:
            rest.append((f, mult))
    return roots, rest


# ---------------------------------------------------------------------------
# singular points
# ---------------------------------------------------------------------------


def singular_points(L: DOperator) -> list:
    """Roots of the leading coefficient (exact or as algebraic classes),
    always including ``0``, followed by ``∞``."""
    pts = {RationalPoint(Fraction(0))}
    for f, _ in factor_rational(L.leading):
        if len(f) == 2:
            pts.add(RationalPoint(Fraction(-f[0], f[1])))
        else:
            pts.add(AlgebraicPoint(f))
    ordered = sorted(pts, key=lambda p: p.sort_key())
    return ordered + [INFINITY]


def is_singular(L: DOperator, point) -> bool:
    point = as_point(point)
    if point is INFINITY:
        return True
    if isinstance(point, AlgebraicPoint):
        return any(f == point.minpoly for f, _ in factor_rational(L.leading))
    return peval(L.leading, point.value) == 0


# ---------------------------------------------------------------------------
# indicial polynomials
# ---------------------------------------------------------------------------


def _local_indicial(coeffs_shifted) -> list:
    """From ``b_k(s + c)`` (ascending in ``s``) build ``sum lc_k lambda^(k falling)``
    over the ``k`` minimizing ``ord_s b_k - k``."""
    vals = {}
    for k, b in enumerate(coeffs_shifted):
        b = ptrim(b)
        if not b:
            continue
        o = next(i for i, c in enumerate(b) if c != 0)
        vals[k] = (o - k, b[o])
    vmin = min(v for v, _ in vals.values())
    out = []
    for k, (v, lc) in vals.items():
        if v == vmin:
            ff = falling_factorial_poly(k)
            n = max(len(out), len(ff))
            out = [
                (out[i] if i < len(out) else 0) + (ff[i] * lc if i < len(ff) else 0) for i in range(n)
            ]
    return ptrim(out)


def indicial_polynomial(L: DOperator, point) -> list:
    """Coefficients (ascending in lambda): Fractions, or AlgebraicNumbers at
    algebraic points."""
    point = as_point(point)
    if point is INFINITY:
        P = d_to_theta(L)
        top = P.row(P.degree)
        # P_r(-lambda)
        return ptrim([c * (-1) ** j for j, c in enumerate(top)])
    if isinstance(point, AlgebraicPoint):
        K = point.field
        a = K.gen
        shifted = [pcompose_shift([K(c) for c in b], a) for b in L.coeffs]
        return _local_indicial(shifted)
    shifted = [pcompose_shift(list(b), point.value) for b in L.coeffs]
    return _local_indicial(shifted)


def _exponents_rational_poly(I: Sequence) -> list:
    roots, rest = rational_roots(I)
    out = []
    for r in sorted(roots):
        out.extend([r] * roots[r])
    for f, mult in rest:
        label = pstr(list(f), "λ")
        for z in numeric_roots(f):
            out.extend([NumericExponent(_fmt_complex(z), label)] * mult)
    return out


def _exponents_algebraic_poly(I: Sequence, point: AlgebraicPoint) -> list:
    K = point.field
    I = [K(c) for c in I]
    deg = len(I) - 1
    # rational roots are the common roots of all coordinate polynomials
    comps = [[c.component(j) for c in I] for j in range(K.degree)]
    g = []
    for comp in comps:
        comp = ptrim(comp)
        if not comp:
            continue
        g = comp if not g else pgcd(g, comp)
    roots, _ = rational_roots(g) if len(ptrim(g)) > 1 else ({}, [])
    # multiplicity over K: how often (lambda - r) divides I
    out = []
    rest = list(I)
    for r in sorted(roots):
        while True:
            q, rem = _synthetic_div(rest, r)
            if rem != 0:
                break
            rest = q
            out.append(r)
    if len(rest) > 1:
        alpha = point.roots()[0]
        with mpmath.workdps(DIGITS + 10):
            num = []
            for c in rest:
                v = mpmath.mpc(0)
                for j in range(K.degree):
                    cj = c.component(j)
                    v += mpmath.mpf(cj.numerator) / cj.denominator * alpha**j
                num.append(v)
            zs = mpmath.polyroots(list(reversed(num)), maxsteps=400, extraprec=300)
        label = f"degree-{len(rest) - 1} factor over Q(α), α = {_fmt_complex(alpha, 12)}"
        out.extend(NumericExponent(_fmt_complex(mpmath.mpc(z)), label) for z in zs)
    assert len(out) == deg
    return out


def _synthetic_div(p, r):
    """Divide ``p`` (ascending) by ``lambda - r``; returns ``(quotient, remainder)``."""
    n = len(p) - 1
    q = [None] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = p[i] + acc * r
    return q, acc


def indicial_exponents(L: DOperator, point) -> list:
    """Exponent multiset: rationals ascending, then numeric descriptors."""
    point = as_point(point)
    I = indicial_polynomial(L, point)
    if isinstance(point, AlgebraicPoint):
        return _exponents_algebraic_poly(I, point)
    return _exponents_rational_poly(I)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify_point(exponents: Sequence, order: int) -> str:
    exps = list(exponents)
    if len(exps) < order:
        return IRREGULAR
    if not all(isinstance(e, (int, Fraction)) for e in exps):
        return OTHER
    exps = sorted(Fraction(e) for e in exps)
    if exps == [Fraction(i) for i in range(order)]:
        return REGULAR
    lo = exps[0]
    if all(e == lo for e in exps):
        return MUM if lo.denominator == 1 else OTHER
    if lo.denominator != 1 or any(e.denominator != 1 for e in exps):
        return OTHER
    shifted = [int(e - lo) for e in exps]
    if order == 4 and shifted == [0, 1, 1, 2]:
        return CONIFOLD
    if lo >= 0 and len(set(exps)) == len(exps):
        return APPARENT
    return OTHER


def classification_note(exponents: Sequence, order: int) -> str | None:
    exps = list(exponents)
    if exps and all(isinstance(e, (int, Fraction)) for e in exps):
        vals = set(Fraction(e) for e in exps)
        if len(vals) == 1 and next(iter(vals)).denominator != 1:
            v = next(iter(vals))
            return f"all exponents equal {v}; unipotent only after a root pullback, not tagged as MUM"
    return None
