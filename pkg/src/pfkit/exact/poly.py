"""Polynomials over the rationals.

Two flavours live here:

* dense univariate polynomials as plain lists ``[c_0, c_1, ...]`` with a
  handful of free functions (``padd``, ``pmul``, ``pdivmod`` ...), used for
  operator coefficients in ``t`` and indicial polynomials;
* sparse multivariate ``MultiPoly`` / ``LaurentPoly`` keyed by exponent
  tuples, used for arrangement polynomials and Laurent polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exps = Tuple[int, ...]

# ---------------------------------------------------------------------------
# dense univariate helpers
# ---------------------------------------------------------------------------


def ptrim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pdeg(p: Sequence) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(ptrim(p)) - 1


def padd(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    zero = Fraction(0)
    return ptrim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])


def psub(a: Sequence, b: Sequence) -> list:
    return padd(a, [-x for x in b])


def pscale(a: Sequence, c) -> list:
    return ptrim([x * c for x in a])


def pmul(a: Sequence, b: Sequence) -> list:
    a, b = ptrim(a), ptrim(b)
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return ptrim(out)


def ppow(a: Sequence, k: int) -> list:
    out = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, a)
    return out


def pderiv(a: Sequence) -> list:
    return ptrim([i * a[i] for i in range(1, len(a))])


def peval(a: Sequence, x):
    acc = x * 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a, b = ptrim(a), ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = ptrim(a)
    return ptrim(q), a


def pmonic(a: Sequence) -> list:
    a = ptrim(a)
    if not a:
        return []
    lc = a[-1]
    return [Fraction(x) / lc for x in a]


def pgcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd over Q (zero polynomial -> [])."""
    a, b = ptrim(a), ptrim(b)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    return pmonic(a)


def pcompose_shift(a: Sequence, c) -> list:
    """``a(s + c)`` as a polynomial in ``s`` (Taylor shift)."""
    a = list(a)
    n = len(a)
    out = [x for x in a]
    # repeated synthetic division (Horner shift)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + c * out[j + 1]
    return ptrim(out)


def pcontent_normalize(polys: Sequence[Sequence]) -> list[list]:
    """Scale a family of rational polynomials to coprime integers.

    The sign is left untouched; callers decide on the sign convention.
    """
    den = 1
    for p in polys:
        for c in p:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [[int(Fraction(c) * den) for c in p] for p in polys]
    g = 0
    for p in ints:
        for c in p:
            g = math.gcd(g, c)
    if g == 0:
        return [list(p) for p in ints]
    return [[c // g for c in p] for p in ints]


def pstr(p: Sequence, var: str = "t") -> str:
    p = ptrim(p)
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = f"{a}"
        else:
            mon = var if k == 1 else f"{var}^{k}"
            body = mon if a == 1 else f"{a}*{mon}"
        terms.append((sign, body))
    head_sign, head = terms[0]
    s = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# sparse multivariate
# ---------------------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial over Q in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients.  Coefficients may
    be any exact ring element (QuadExtScalar is used by the Morse engine).
    """

    __slots__ = ("terms", "nvars")
    laurent = False

    def __init__(self, terms: Mapping[Exps, object] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: Dict[Exps, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if not self.laurent and any(x < 0 for x in e):
                raise ValueError("negative exponent in a polynomial; use LaurentPoly")
            if isinstance(c, int):
                c = Fraction(c)
            if c != 0:
                clean[e] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, c, nvars: int):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): Fraction(1)}, nvars)

    def _new(self, terms, nvars=None):
        obj = object.__new__(type(self))
        obj.nvars = self.nvars if nvars is None else nvars
        obj.terms = terms
        return obj

    # -- protocol -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        parts = []
        for e in sorted(self.terms):
            mon = "*".join(f"v{i}^{k}" if k != 1 else f"v{i}" for i, k in enumerate(e) if k)
            parts.append(f"({self.terms[e]})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    def coeff(self, e: Exps):
        return self.terms.get(tuple(e), Fraction(0))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def min_total_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, k: int):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == k})

    def truncate(self, max_degree: int):
        """Drop all monomials of total degree above ``max_degree``."""
        return self._new({e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def map_coeffs(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v != 0:
                out[e] = v
        return self._new(out)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        return self._new({(0,) * self.nvars: other} if other != 0 else {})

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, max_degree: int | None = None):
        o = self._coerce(other)
        out: Dict[Exps, object] = {}
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, cb in o.terms.items():
                if max_degree is not None and da + sum(eb) > max_degree:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return self._new({e: c for e, c in out.items() if c != 0})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return self.mul(other)
        if other == 0:
            return self._new({})
        return self._new({e: c * other for e, c in self.terms.items()})

    def __rmul__(self, other):
        if other == 0:
            return self._new({})
        return self._new({e: other * c for e, c in self.terms.items()})

    def __truediv__(self, other):
        return self._new({e: c / other for e, c in self.terms.items()})

    def pow(self, k: int, max_degree: int | None = None):
        result = self.constant(self._unit(), self.nvars)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, max_degree)
            k >>= 1
            if k:
                base = base.mul(base, max_degree)
        return result

    def __pow__(self, k: int):
        return self.pow(k)

    def _unit(self):
        for c in self.terms.values():
            return c * 0 + 1
        return Fraction(1)

    # -- calculus and substitution ----------------------------------------
    def diff(self, i: int):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return self._new(out)

    def substitute(self, images: Sequence["MultiPoly"], max_degree: int | None = None):
        """Compose: replace variable ``i`` by ``images[i]`` (a polynomial in the
        target ring). ``max_degree`` truncates every intermediate product."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else self.nvars
        unit = self._unit()
        cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                if k == 0:
                    cache[key] = MultiPoly.constant(unit, target)
                else:
                    cache[key] = power(i, k - 1).mul(images[i], max_degree)
            return cache[key]

        return _horner_substitute(self, power, target, unit, max_degree)

    def evaluate(self, point: Sequence):
        total = None
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = v if total is None else total + v
        return Fraction(0) if total is None else total

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}


def _horner_substitute(poly, power, target, unit, max_degree):
    if not poly.terms:
        return MultiPoly({}, target)
    return _rec_unique(poly.terms, 0, poly.nvars, power, target, max_degree)


def _rec_unique(terms, level, n, power, target, max_degree):
    if level == n:
        total = None
        for c in terms.values():
            total = c if total is None else total + c
        return MultiPoly.constant(total, target) if total is not None else MultiPoly({}, target)
    groups: Dict[int, Dict[Exps, object]] = {}
    for e, c in terms.items():
        groups.setdefault(e[level], {})[e] = c
    acc = MultiPoly({}, target)
    for k in sorted(groups):
        inner = _rec_unique(groups[k], level + 1, n, power, target, max_degree)
        if k and inner:
            inner = inner.mul(power(level, k), max_degree)
        acc = acc + inner
    return acc


class LaurentPoly(MultiPoly):
    """Sparse Laurent polynomial: exponents may be negative."""

    __slots__ = ()
    laurent = True

    def exponent_bounds(self) -> tuple[list[int], list[int]]:
        """Per-coordinate minimum and maximum exponent (the Newton box)."""
        lo = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        hi = [max(e[i] for e in self.terms) for i in range(self.nvars)]
        return lo, hi


def monomials_up_to(nvars: int, degree: int) -> Iterable[Exps]:
    """All exponent tuples of total degree <= degree (graded order)."""
    for d in range(degree + 1):
        for e in _compositions(d, nvars):
            yield e


def _compositions(d: int, k: int):
    if k == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest
