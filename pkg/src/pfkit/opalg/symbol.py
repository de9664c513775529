"""Riemann symbols and the analysis report."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact.textio import format_rational
from ..opfind.operator import ThetaOperator
from .dop import DOperator, theta_to_d
from .local import (
    INFINITY,
    MUM,
    AlgebraicPoint,
    NumericExponent,
    _fmt_complex,
    classification_note,
    classify_point,
    indicial_exponents,
    is_singular,
    singular_points,
)

_GREEK = "αρβγκστω"


@dataclass(frozen=True)
class SingularPoint:
    point: object
    exponents: tuple
    tag: str
    singular: bool = True
    notes: tuple = ()

    @property
    def kind(self) -> str:
        return self.point.kind

    def exponent_text(self) -> list[str]:
        return [format_rational(e) if isinstance(e, Fraction) else str(e) for e in self.exponents]


@dataclass(frozen=True)
class RiemannSymbol:
    order: int
    points: tuple = field(default_factory=tuple)

    def get(self, point) -> SingularPoint:
        from .local import as_point

        point = as_point(point)
        for sp in self.points:
            if sp.point == point:
                return sp
        raise KeyError(point)

    def exponents(self, point) -> list:
        return list(self.get(point).exponents)

    def labelled_columns(self):
        """One column per point; an algebraic class expands to one column per root."""
        cols = []
        greek = iter(_GREEK)
        for sp in self.points:
            if isinstance(sp.point, AlgebraicPoint):
                letter = next(greek, "a")
                for k in range(sp.point.degree):
                    cols.append((f"{letter}{k + 1}", sp))
            else:
                cols.append((str(sp.point), sp))
        return cols

    def legend(self) -> list[str]:
        lines = []
        greek = iter(_GREEK)
        for sp in self.points:
            if isinstance(sp.point, AlgebraicPoint):
                letter = next(greek, "a")
                roots = ", ".join(_fmt_complex(z, 12) for z in sp.point.roots())
                lines.append(f"{letter}1..{letter}{sp.point.degree}: {sp.point} ({roots})")
        return lines

    def table(self) -> str:
        cols = self.labelled_columns()
        body = [[name] for name, _ in cols]
        for col, (_, sp) in zip(body, cols):
            col.extend(sp.exponent_text())
        height = max(len(c) for c in body)
        width = [max(len(x) for x in c) for c in body]
        rows = []
        for i in range(height):
            cells = [(c[i] if i < len(c) else "").rjust(w) for c, w in zip(body, width)]
            rows.append("  ".join(cells))
            if i == 0:
                rows.append("  ".join("-" * w for w in width))
        return "\n".join(rows)

    def machine_lines(self) -> list[str]:
        out = []
        for sp in self.points:
            out.append(f"{sp.point} | {' '.join(sp.exponent_text())} | {sp.tag}")
        return out

    def mum_points(self) -> list:
        return [sp.point for sp in self.points if sp.tag == MUM]


def _local_data(L: DOperator, point) -> SingularPoint:
    exps = tuple(indicial_exponents(L, point))
    tag = classify_point(exps, L.order)
    note = classification_note(exps, L.order)
    return SingularPoint(point, exps, tag, is_singular(L, point), (note,) if note else ())


def riemann_symbol(P) -> RiemannSymbol:
    L = theta_to_d(P) if isinstance(P, ThetaOperator) else P
    return RiemannSymbol(L.order, tuple(_local_data(L, pt) for pt in singular_points(L)))


def has_mum_point(P) -> tuple[bool, list]:
    """``(True, points)`` if some point has a MUM exponent pattern; otherwise
    ``(False, [])`` and the operator is an orphan."""
    pts = riemann_symbol(P).mum_points()
    return bool(pts), pts


def fuchs_relation(sym: RiemannSymbol) -> tuple[Fraction, Fraction] | None:
    """``(sum of exponents over singular points, (k-1) m(m-1)/2)`` where ``k``
    counts finite singular points (algebraic classes by degree); ``None`` if
    some exponent is not rational."""
    m = sym.order
    total, k = Fraction(0), 0
    for sp in sym.points:
        if not sp.singular:
            continue
        if any(isinstance(e, NumericExponent) for e in sp.exponents):
            return None
        mult = sp.point.degree if isinstance(sp.point, AlgebraicPoint) else 1
        total += mult * sum(sp.exponents, Fraction(0))
        if sp.point is not INFINITY:
            k += mult
    return total, Fraction((k - 1) * m * (m - 1), 2)


def analysis_report(P: ThetaOperator) -> str:
    from .selfdual import self_adjoint_check

    sym = riemann_symbol(P)
    lines = ["Riemann symbol", sym.table()]
    lines += sym.legend()
    lines.append("")
    for name, sp in sym.labelled_columns():
        if isinstance(sp.point, AlgebraicPoint) and not name.endswith("1"):
            continue
        label = f"{name[:-1]}*" if isinstance(sp.point, AlgebraicPoint) else name
        state = "" if sp.singular else " (not a singular point)"
        lines.append(f"point {label}: {sp.tag}{state}")
        lines.extend(f"  note: {n}" for n in sp.notes)
    mum = sym.mum_points()
    if mum:
        lines.append("MUM-candidates at: " + ", ".join(str(p) for p in mum) + " (exponent pattern only)")
    else:
        lines.append("no MUM-candidate point: orphan")
    if sym.order == 4:
        verdict = "yes" if self_adjoint_check(P) else "no"
        lines.append(f"symplectic self-duality: {verdict}")
    else:
        lines.append("symplectic self-duality: not checked (order != 4)")
    fr = fuchs_relation(sym)
    if fr is not None:
        lines.append(f"Fuchs relation: exponent sum {format_rational(fr[0])}, expected {format_rational(fr[1])}")
    lines.append("")
    lines.append("# point | exponents | tag")
    lines.extend(sym.machine_lines())
    return "\n".join(lines) + "\n"
