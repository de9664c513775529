"""Multi-quadratic extensions ``Q(s_1, ..., s_k)`` with ``s_i^2 = c_i``.

An element is stored as a map from subsets of symbols (bit masks) to
rational coefficients: ``sum_S q_S * prod_{i in S} s_i``.
"""

from __future__ import annotations

import math
from fractions import Fraction


class QuadExtScalar:
    __slots__ = ("parts", "squares")

    def __init__(self, parts=None, squares=()):
        self.squares = tuple(Fraction(c) for c in squares)
        clean = {}
        for mask, q in (parts or {}).items():
            q = Fraction(q)
            if q != 0:
                if mask >> len(self.squares):
                    raise ValueError("mask references an undefined symbol")
                clean[mask] = q
        self.parts = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def rational(cls, q, squares=()) -> "QuadExtScalar":
        return cls({0: q}, squares)

    @classmethod
    def symbol(cls, i: int, squares) -> "QuadExtScalar":
        return cls({1 << i: 1}, squares)

    # -- queries --------------------------------------------------------
    def is_rational(self) -> bool:
        return all(mask == 0 for mask in self.parts)

    def rational_part(self) -> Fraction:
        return self.parts.get(0, Fraction(0))

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.rational_part()

    def approx(self, roots=None) -> float:
        """Numeric shadow using ``roots[i] ~ sqrt(c_i)`` (real; negative squares unsupported)."""
        if roots is None:
            roots = [math.sqrt(float(c)) for c in self.squares]
        total = 0.0
        for mask, q in self.parts.items():
            v = float(q)
            for i, r in enumerate(roots):
                if mask >> i & 1:
                    v *= r
            total += v
        return total

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other.squares == self.squares:
                return other, self.squares
            if not other.squares or other.is_rational():
                return QuadExtScalar(other.parts, self.squares), self.squares
            if not self.squares or self.is_rational():
                return other, other.squares
            raise ValueError("elements live in different extensions")
        return QuadExtScalar({0: other}, self.squares), self.squares

    def _lift(self, squares):
        return self if self.squares == squares else QuadExtScalar(self.parts, squares)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_part() == other
        if isinstance(other, QuadExtScalar):
            return self.parts == other.parts and (
                self.squares == other.squares or self.is_rational()
            )
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.parts.items())))

    def __repr__(self):
        if not self.parts:
            return "0"
        terms = []
        for mask in sorted(self.parts):
            syms = "*".join(f"sqrt({self.squares[i]})" for i in range(len(self.squares)) if mask >> i & 1)
            terms.append(f"{self.parts[mask]}" + (f"*{syms}" if syms else ""))
        return " + ".join(terms)

    def __neg__(self):
        return QuadExtScalar({m: -q for m, q in self.parts.items()}, self.squares)

    def __add__(self, other):
        o, sq = self._coerce(other)
        a = self._lift(sq)
        out = dict(a.parts)
        for m, q in o.parts.items():
            out[m] = out.get(m, 0) + q
        return QuadExtScalar(out, sq)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExtScalar) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar({m: q * other for m, q in self.parts.items()}, self.squares)
        o, sq = self._coerce(other)
        a = self._lift(sq)
        out = {}
        for ma, qa in a.parts.items():
            for mb, qb in o.parts.items():
                q = qa * qb
                common = ma & mb
                i = 0
                while common:
                    if common & 1:
                        q *= sq[i]
                    common >>= 1
                    i += 1
                m = ma ^ mb
                out[m] = out.get(m, 0) + q
        return QuadExtScalar(out, sq)

    __rmul__ = __mul__

    def conjugate(self, i: int) -> "QuadExtScalar":
        """Apply ``s_i -> -s_i``."""
        return QuadExtScalar(
            {m: (-q if m >> i & 1 else q) for m, q in self.parts.items()}, self.squares
        )

    def inverse(self) -> "QuadExtScalar":
        if not self.parts:
            raise ZeroDivisionError("inverse of zero")
        num = QuadExtScalar.rational(1, self.squares)
        den = self
        for i in range(len(self.squares)):
            if any(m >> i & 1 for m in den.parts):
                conj = den.conjugate(i)
                num = num * conj
                den = den * conj
        r = den.to_rational()
        if r == 0:
            raise ZeroDivisionError("zero divisor in a non-field extension")
        return num * (1 / r)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        o, _ = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExtScalar.rational(other, self.squares) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExtScalar.rational(1, self.squares)
        for _ in range(k):
            result = result * self
        return result


def squarefree_split(q) -> tuple[Fraction, int]:
    """Write ``q = r^2 * s`` with rational ``r > 0`` and squarefree integer ``s``."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    sign = -1 if q < 0 else 1
    # q = a/b = a*b / b^2
    n = abs(q.numerator) * q.denominator
    r_num, s = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            r_num *= p
        if n % p == 0:
            n //= p
            s *= p
        p += 1
    s *= n
    return Fraction(r_num, q.denominator), sign * s
