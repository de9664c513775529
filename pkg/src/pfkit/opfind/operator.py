"""Differential operators in theta form ``sum_i t^i P_i(theta)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ParseError
from ..exact.poly import peval, pmul, ptrim
from ..exact.series import PowerSeries


@dataclass(frozen=True)
class ThetaOperator:
    """Entry ``coeffs[i][j]`` is the coefficient of ``t^i theta^j``.

    Multiplication by ``t`` is written on the left, so the operator acts on
    ``t^(n+mu)`` as ``sum_i P_i(n+mu) t^(n+mu+i)``.
    """

    coeffs: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.coeffs)
        if not rows or not rows[0]:
            raise ValueError("operator needs at least one coefficient")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged coefficient matrix")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ThetaOperator":
        """Build from ``P_i`` given as ascending theta-coefficient lists of any length."""
        width = max((len(ptrim(r)) for r in rows), default=1) or 1
        padded = [list(ptrim(r)) + [0] * (width - len(ptrim(r))) for r in rows]
        return cls(tuple(tuple(r) for r in padded or [[0]]))

    @classmethod
    def from_vector(cls, vec: Sequence, d: int, r: int) -> "ThetaOperator":
        return cls(tuple(tuple(vec[i * (d + 1) : (i + 1) * (d + 1)]) for i in range(r + 1)))

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def d(self) -> int:
        return len(self.coeffs[0]) - 1

    @property
    def order(self) -> int:
        """Highest theta-degree actually present."""
        return max((len(ptrim(row)) - 1 for row in self.coeffs), default=-1)

    @property
    def degree(self) -> int:
        """Highest t-degree with a nonzero row."""
        return max((i for i, row in enumerate(self.coeffs) if any(row)), default=-1)

    def row(self, i: int) -> list[Fraction]:
        return list(self.coeffs[i]) if 0 <= i <= self.r else [Fraction(0)]

    def eval_row(self, i: int, x) -> Fraction:
        return peval(self.coeffs[i], x)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)

    def vector(self) -> list[Fraction]:
        return [c for row in self.coeffs for c in row]

    def trimmed(self) -> "ThetaOperator":
        """Drop zero trailing rows and columns."""
        if self.is_zero():
            return ThetaOperator(((0,),))
        rows = self.coeffs[: self.degree + 1]
        width = self.order + 1
        return ThetaOperator(tuple(row[:width] for row in rows))

    def resized(self, d: int, r: int) -> "ThetaOperator":
        if d < self.order or r < self.degree:
            raise ValueError("resize would drop nonzero coefficients")
        rows = []
        for i in range(r + 1):
            row = list(self.coeffs[i]) if i <= self.r else []
            row = (row + [Fraction(0)] * (d + 1))[: d + 1]
            rows.append(row)
        return ThetaOperator(tuple(tuple(row) for row in rows))

    def normalized(self) -> "ThetaOperator":
        return normalize(self)

    def scale_t(self, lam) -> "ThetaOperator":
        """The operator in the coordinate ``t' = lam t``: ``P_i -> lam^(-i) P_i``.

        If ``self`` kills ``s(t)`` the result kills ``s(t'/lam)``."""
        lam = Fraction(lam)
        return ThetaOperator(tuple(tuple(c / lam**i for c in row) for i, row in enumerate(self.coeffs)))

    def __str__(self):
        return pretty(self)


def normalize(P: ThetaOperator) -> ThetaOperator:
    """Integer, coprime entries; first nonzero entry in the scan
    ``(0,d), (0,d-1), ..., (0,0), (1,d), ...`` is positive."""
    entries = P.vector()
    den = 1
    for c in entries:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in entries]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return P
    sign = 1
    for row in P.coeffs:
        lead = next((c for c in reversed(row) if c != 0), None)
        if lead is not None:
            sign = 1 if lead > 0 else -1
            break
    ints = [sign * v // g for v in ints]
    return ThetaOperator.from_vector(ints, P.d, P.r)


def apply_operator(P: ThetaOperator, s: PowerSeries) -> PowerSeries:
    """``P(s)``; the ``t^(n+mu)`` coefficient is ``sum_i P_i(n-i+mu) a_(n-i)``.

    Every coefficient up to the order of ``s`` is determined, so the result
    keeps the full order N.
    """
    mu = s.offset
    out = []
    for n in range(len(s.coeffs)):
        total = Fraction(0)
        for i in range(min(n, P.r) + 1):
            a = s.coeffs[n - i]
            if a:
                total += peval(P.coeffs[i], n - i + mu) * a
        out.append(total)
    return PowerSeries(out, mu)


def theta_poly_from_roots(lead, roots) -> list[Fraction]:
    """``lead * prod (theta + c)`` for ``c`` in ``roots``, ascending coefficients."""
    p = [Fraction(lead)]
    for c in roots:
        p = pmul(p, [Fraction(c), Fraction(1)])
    return p


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def dumps_operator(P: ThetaOperator, trace: Sequence[str] = ()) -> str:
    P = normalize(P)
    lines = [f"theta-operator d={P.d} r={P.r}"]
    lines += [f"# {t}" for t in trace]
    for i, row in enumerate(P.coeffs):
        lines.append(f"t^{i}: " + " ".join(str(int(c)) for c in row))
    return "\n".join(lines) + "\n"


def loads_operator(text: str) -> ThetaOperator:
    header = None
    rows = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "theta-operator":
                raise ParseError("expected header 'theta-operator d=<d> r=<r>'", lineno)
            try:
                kv = dict(p.split("=", 1) for p in parts[1:])
                header = (int(kv["d"]), int(kv["r"]))
            except (KeyError, ValueError):
                raise ParseError("malformed operator header", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("d and r must be non-negative", lineno)
            continue
        left, sep, right = line.partition(":")
        left = left.strip()
        if not sep or not left.startswith("t^"):
            raise ParseError("expected a row 't^<i>: c_0 ... c_d'", lineno)
        try:
            i = int(left[2:])
            vals = [int(x) for x in right.split()]
        except ValueError:
            raise ParseError("row index and coefficients must be integers", lineno) from None
        d, r = header
        if not 0 <= i <= r:
            raise ParseError(f"row t^{i} outside 0..{r}", lineno)
        if i in rows:
            raise ParseError(f"duplicate row t^{i}", lineno)
        if len(vals) != d + 1:
            raise ParseError(f"expected {d + 1} coefficients, got {len(vals)}", lineno)
        rows[i] = vals
    if header is None:
        raise ParseError("empty operator file")
    d, r = header
    missing = [i for i in range(r + 1) if i not in rows]
    if missing:
        raise ParseError(f"missing row t^{missing[0]}")
    return ThetaOperator(tuple(tuple(rows[i]) for i in range(r + 1)))


def read_operator(path) -> ThetaOperator:
    with open(path, encoding="utf-8") as fh:
        return loads_operator(fh.read())


def write_operator(path, P: ThetaOperator, trace: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_operator(P, trace))


def _poly_text(p, var="θ") -> str:
    terms = []
    for j in range(len(p) - 1, -1, -1):
        c = p[j]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        coef = str(mag) if (mag != 1 or not mono) else ""
        terms.append(("-" if c < 0 else "+", coef + mono))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sgn, body in terms[1:]:
        out += f" {sgn} {body}"
    return out


def pretty(P: ThetaOperator, var: str = "θ") -> str:
    parts = []
    for i, row in enumerate(P.coeffs):
        row = ptrim(row)
        if not row:
            continue
        tp = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        body = _poly_text(row, var)
        parts.append(body if not tp else f"{tp}({body})")
    return " + ".join(parts) if parts else "0"
