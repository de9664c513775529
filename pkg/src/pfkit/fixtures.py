"""Built-in registry of worked examples.

Each fixture carries its input (problem text or operator), the published
series prefix, the operator where one is printed, and the Riemann symbol.
Values marked derived were computed here and cross-checked by tests rather
than copied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .exact.poly import pmul, pscale
from .exact.textio import format_rational
from .opfind.operator import ThetaOperator, dumps_operator, pretty, theta_poly_from_roots

F = Fraction
TH = [0, 1]  # theta


def _prod(*factors):
    out = [F(1)]
    for f in factors:
        out = pmul(out, f)
    return out


def quintic_operator() -> ThetaOperator:
    """``theta^4 - 5^5 t (theta+1/5)(theta+2/5)(theta+3/5)(theta+4/5)``."""
    p1 = pscale(theta_poly_from_roots(1, [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]), -(5**5))
    return ThetaOperator.from_rows([[0, 0, 0, 0, 1], p1])


def op25_operator() -> ThetaOperator:
    return ThetaOperator.from_rows(
        [
            [0, 0, 0, 0, 1],
            pscale(_prod([1, 2], [1, 2], [3, 11, 11]), -4),
            pscale(_prod([1, 2], [1, 2], [3, 2], [3, 2]), -16),
        ]
    )


def legendre_operator() -> ThetaOperator:
    return ThetaOperator.from_rows([[0, 0, 4], pscale(_prod([1, 2], [1, 2]), -1)])


def meyer36_operator() -> ThetaOperator:
    return ThetaOperator.from_rows(
        [
            pscale(_prod(TH, [-2, 1], [-1, 1], [-1, 1]), 32),
            pscale(_prod(TH, [-1, 1], [8, -13, 9]), -16),
            pscale(_prod(TH, [-10, 38, -32, 33]), 8),
            [-20, -76, -304, -104, -252],
            [38, 160, 292, 224, 132],
            [-21, -88, -140, -104, -36],
            pscale(_prod([1, 1], [1, 1], [1, 1], [1, 1]), 4),
        ]
    )


def meyer70_operator() -> ThetaOperator:
    return ThetaOperator.from_rows(
        [
            pscale(_prod(TH, [-2, 1], [-1, 1], [-1, 1]), 16),
            pscale(_prod(TH, [-1, 1], [13, -24, 24]), -2),
            _prod(TH, TH, [25, 0, 52]),
            pscale(_prod([2, 3, 3], [1, 2], [1, 2]), -2),
            _prod([1, 2], [1, 1], [1, 1], [3, 2]),
        ]
    )


def quintic_coefficient(n: int) -> int:
    return factorial(5 * n) // factorial(n) ** 5


def op25_coefficient(n: int) -> int:
    """``C(2n,n)^2 sum_{k=0}^{n} C(n,k)^2 C(n+k,k)``; the printed lower limit
    ``k=1`` would make ``A_0 = 0``, contradicting ``phi = 1 + ...``."""
    return comb(2 * n, n) ** 2 * sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1))


QUINTIC_LAURENT = """\
# x1 + x2 + x3 + x4 + 1/(x1 x2 x3 x4)
1 0 0 0 : 1
0 1 0 0 : 1
0 0 1 0 : 1
0 0 0 1 : 1
-1 -1 -1 -1 : 1
"""


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    problem_kind: str | None = None  # "simplex" | "ct" | None
    problem: str | None = None
    operator: ThetaOperator | None = None
    operator_printed: bool = False
    series_prefix: tuple = ()
    series_offset: Fraction = F(0)
    riemann: tuple = ()  # ((point label, (exponents...)), ...)
    n0: Fraction | None = None
    instantons: tuple = ()
    notes: tuple = field(default_factory=tuple)

    def show(self) -> str:
        lines = [f"fixture {self.name}", self.description]
        if self.problem:
            lines.append(f"problem ({self.problem_kind}):")
            lines.extend("  " + ln for ln in self.problem.rstrip("\n").splitlines())
        if self.series_prefix:
            lines.append(f"series offset {format_rational(self.series_offset)}")
            lines.append("series prefix: " + ", ".join(format_rational(c) for c in self.series_prefix))
        if self.operator is not None:
            src = "printed" if self.operator_printed else "derived"
            lines.append(f"operator ({src}): {pretty(self.operator)}")
            lines.extend("  " + ln for ln in dumps_operator(self.operator).rstrip("\n").splitlines())
        if self.riemann:
            lines.append("Riemann symbol:")
            for label, exps in self.riemann:
                lines.append(f"  {label}: " + ",".join(format_rational(e) for e in exps))
        if self.n0 is not None:
            lines.append(f"n0 {format_rational(self.n0)}")
        if self.instantons:
            lines.append("instanton numbers: " + ", ".join(str(n) for n in self.instantons))
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def _legendre_prefix(n):
    return tuple(F(comb(2 * m, m) ** 2, 16**m) for m in range(n))


FIXTURES = {
    "quintic": Fixture(
        name="quintic",
        description="Mirror quintic: hypergeometric operator, MUM point at 0.",
        problem_kind="ct",
        problem=QUINTIC_LAURENT,
        operator=quintic_operator(),
        operator_printed=True,
        series_prefix=tuple(F(quintic_coefficient(n)) for n in range(4)),
        riemann=(
            ("0", (0, 0, 0, 0)),
            ("1/3125", (0, 1, 1, 2)),
            ("∞", (F(1, 5), F(2, 5), F(3, 5), F(4, 5))),
        ),
        n0=F(5),
        instantons=(2875, 609250, 317206375),
        notes=(
            "q = t + 770 t^2 + ...",
            "Riemann symbol derived by indicial computation",
            "problem is the Laurent polynomial whose constant terms give phi0",
        ),
    ),
    "op25": Fixture(
        name="op25",
        description="Operator nr. 25 (complete intersection X(1,2,2) in G(2,5)).",
        operator=op25_operator(),
        operator_printed=True,
        series_prefix=tuple(F(op25_coefficient(n)) for n in range(4)),
        n0=F(20),
        instantons=(400, 5540, 164400),
        notes=(
            "A_n = C(2n,n)^2 sum_{k=0}^n C(n,k)^2 C(n+k,k) = 1, 12, 684, 58800; the printed sum starts at k=1, which would give A_0 = 0",
            "n0 = 20 (degree of X(1,2,2)) is a choice, checked by reproducing n_1 = 400",
        ),
    ),
    "legendre": Fixture(
        name="legendre",
        description="Legendre family: period over a vanishing interval.",
        problem_kind="simplex",
        problem="dim 1\nP: 1 - x\n",
        operator=legendre_operator(),
        operator_printed=True,
        series_prefix=_legendre_prefix(6),
        riemann=(("0", (0, 0)), ("1", (0, 0)), ("∞", (F(1, 2), F(1, 2)))),
        notes=("Riemann symbol derived by indicial computation",),
    ),
    "meyer36": Fixture(
        name="meyer36",
        description="Double octic arrangement no. 36: u^2 = xyz(t-x-y-z)(1-x)(1-z)(1-x-y)(1+(t-2)x-y-z).",
        problem_kind="simplex",
        problem="dim 3\nP: (1-x)(1-z)(1-x-y)(1+(t-2)x-y-z)\n",
        operator=meyer36_operator(),
        operator_printed=True,
        series_prefix=(F(1), F(1), F(43, 48), F(19, 24), F(10811, 15360), F(9713, 15360)),
        series_offset=F(1),
        riemann=(
            ("0", (0, 1, 1, 2)),
            ("1", (0, 0, 0, 0)),
            ("2", (0, 0, 2, 2)),
            ("∞", (1, 1, 1, 1)),
        ),
        notes=("determined by the first 34 terms; found at d=4, r=6",),
    ),
    "meyer70": Fixture(
        name="meyer70",
        description="Double octic arrangement no. 70: u^2 = xyz(x+y+z-t)(1-x)(1-z)(x+y+z-1)(x/2+y/2+z/2-1).",
        problem_kind="simplex",
        problem="dim 3\n# printed with (x+y+z-t) = -(t-x-y-z)\nP: (1-x)(1-z)(x+y+z-1)(x/2+y/2+z/2-1)\n",
        operator=meyer70_operator(),
        operator_printed=True,
        series_prefix=(
            F(1),
            F(13, 16),
            F(485, 768),
            F(12299, 24576),
            F(534433, 1310720),
            F(21458473, 62914560),
        ),
        series_offset=F(1),
        riemann=(
            ("0", (0, 1, 1, 2)),
            ("1", (0, 0, 1, 1)),
            ("2", (0, 0, 1, 1)),
            ("∞", (F(1, 2), 1, 1, F(3, 2))),
        ),
        notes=(
            "orphan: no point of maximal unipotent monodromy",
            "the printed factor x+y+z-t flips the sign under the square root; the series is unchanged and only P(0;0) changes sign",
        ),
    ),
    "meyer254": Fixture(
        name="meyer254",
        description="Double octic arrangement no. 254: u^2 = xyz(t-x-y-z)P_t(x,y,z).",
        problem_kind="simplex",
        problem=(
            "dim 3\n"
            "P: (1-3z+t-t^2x+tz-tx-2y)(1-z+tx-2x)(1-tx+z)(1+t-t^2x+tz-5tx+z-2y-4x)\n"
        ),
        series_prefix=(F(1), F(1, 2), F(37, 24), F(41, 16), F(13477, 1920), F(14597, 768)),
        series_offset=F(1),
        riemann=(
            ("roots of t^2 + 4*t - 1", (0, 1, 1, 2)),
            ("0", (0, 1, 1, 2)),
            ("roots of 2*t^3 - t^2 - 3*t + 4", (0, 1, 3, 4)),
            ("-1", (0, 0, 0, 0)),
            ("1", (0, 0, 0, 0)),
            ("∞", (F(3, 2), F(3, 2), F(3, 2), F(3, 2))),
        ),
        notes=(
            "no operator printed; an order-4 operator is recovered at d=4, r=14",
            "∞ has exponents 3/2 (x4): MUM only after taking a square root",
        ),
    ),
}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}") from None
