"""Rational functions in ``t`` over Q, kept in lowest terms with monic denominator."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exact.poly import padd, pderiv, pdivmod, pgcd, pmul, pscale, pstr, psub, ptrim


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Sequence = (), den: Sequence = (1,)):
        num = [Fraction(c) for c in ptrim(num)]
        den = [Fraction(c) for c in ptrim(den)]
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lc = den[-1]
        self.num = tuple(c / lc for c in num)
        self.den = tuple(c / lc for c in den)

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls([c])

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (list, tuple)):
            return cls(x)
        return cls([x])

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = RationalFunction.coerce(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == (1,):
            return pstr(self.num)
        return f"({pstr(self.num)})/({pstr(self.den)})"

    def __neg__(self):
        return RationalFunction(pscale(self.num, -1), self.den)

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        if self.den == o.den:
            return RationalFunction(padd(self.num, o.num), self.den)
        return RationalFunction(padd(pmul(self.num, o.den), pmul(o.num, self.den)), pmul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(pmul(self.num, o.den), pmul(self.den, o.num))

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        out = RationalFunction.const(1)
        for _ in range(abs(k)):
            out = out * self
        return out if k >= 0 else 1 / out

    def derivative(self) -> "RationalFunction":
        # (n/d)' = (n' d - n d') / d^2
        return RationalFunction(psub(pmul(pderiv(self.num), self.den), pmul(self.num, pderiv(self.den))), pmul(self.den, self.den))

    def derivatives(self, k: int) -> list["RationalFunction"]:
        out = [self]
        for _ in range(k):
            out.append(out[-1].derivative())
        return out
