"""Arithmetic in ``Q[a]/(m(a))`` for an irreducible ``m``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exact.poly import pdivmod, pmonic, pmul, ptrim, psub


class NumberField:
    def __init__(self, minpoly: Sequence):
        m = pmonic([Fraction(c) for c in minpoly])
        if len(m) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        self.minpoly = tuple(m)
        self.degree = len(m) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __call__(self, value) -> "AlgebraicNumber":
        if isinstance(value, AlgebraicNumber):
            return value
        if isinstance(value, (list, tuple)):
            return AlgebraicNumber(self, value)
        return AlgebraicNumber(self, [Fraction(value)])

    @property
    def gen(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, [0, 1]) if self.degree > 1 else AlgebraicNumber(self, [-self.minpoly[0]])

    def reduce(self, p) -> list[Fraction]:
        return pdivmod(p, self.minpoly)[1]


class AlgebraicNumber:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        self.field = field
        self.coeffs = tuple(field.reduce([Fraction(c) for c in coeffs]))

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        return AlgebraicNumber(self.field, [Fraction(other)])

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def component(self, j: int) -> Fraction:
        return self.coeffs[j] if j < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rational() == other
        if isinstance(other, AlgebraicNumber):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"AlgebraicNumber({list(map(str, self.coeffs))} mod {list(map(str, self.field.minpoly))})"

    def __neg__(self):
        return AlgebraicNumber(self.field, [-c for c in self.coeffs])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return AlgebraicNumber(self.field, [self.component(i) + o.component(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return AlgebraicNumber(self.field, pmul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid on (a, m)
        r0, r1 = list(self.field.minpoly), list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while ptrim(r1):
            q, r = pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1))
        # r0 is a nonzero constant since m is irreducible
        if len(ptrim(r0)) != 1:
            raise ValueError("minimal polynomial is not irreducible")
        c = ptrim(r0)[0]
        return AlgebraicNumber(self.field, [x / c for x in s0])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = AlgebraicNumber(self.field, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out
