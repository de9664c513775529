"""Truncated polynomial ring Q[eps]/(eps^m).

Used for the Frobenius deformation: evaluating a recursion at ``n + eps``
produces all log-solutions at a MUM point from one pass.
"""

from __future__ import annotations

from fractions import Fraction


class EpsilonJet:
    __slots__ = ("c", "m")

    def __init__(self, components, m: int | None = None):
        cs = [Fraction(x) for x in components]
        if m is None:
            m = len(cs)
        if m < 1:
            raise ValueError("modulus order must be positive")
        cs = (cs + [Fraction(0)] * m)[:m]
        self.c = tuple(cs)
        self.m = m

    @classmethod
    def constant(cls, value, m: int) -> "EpsilonJet":
        return cls([value], m)

    @classmethod
    def eps(cls, m: int, shift=0) -> "EpsilonJet":
        """The jet ``shift + eps``."""
        return cls([shift, 1], m)

    def _coerce(self, other):
        if isinstance(other, EpsilonJet):
            if other.m != self.m:
                raise ValueError("jet moduli differ")
            return other
        return EpsilonJet([other], self.m)

    def __getitem__(self, k):
        return self.c[k]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and all(x == 0 for x in self.c[1:])
        if isinstance(other, EpsilonJet):
            return self.m == other.m and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "EpsilonJet(" + ", ".join(str(x) for x in self.c) + ")"

    def __neg__(self):
        return EpsilonJet([-x for x in self.c], self.m)

    def __add__(self, other):
        o = self._coerce(other)
        return EpsilonJet([a + b for a, b in zip(self.c, o.c)], self.m)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return EpsilonJet([a - b for a, b in zip(self.c, o.c)], self.m)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return EpsilonJet([a * other for a in self.c], self.m)
        o = self._coerce(other)
        m = self.m
        out = [Fraction(0)] * m
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j in range(m - i):
                b = o.c[j]
                if b != 0:
                    out[i + j] += a * b
        return EpsilonJet(out, m)

    __rmul__ = __mul__

    def inverse(self) -> "EpsilonJet":
        a0 = self.c[0]
        if a0 == 0:
            raise ZeroDivisionError("jet with zero constant term is not invertible")
        inv0 = 1 / a0
        out = [inv0]
        for n in range(1, self.m):
            s = sum((self.c[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return EpsilonJet(out, self.m)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return EpsilonJet([a / other for a in self.c], self.m)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        result = EpsilonJet([1], self.m)
        for _ in range(k):
            result = result * self
        return result
