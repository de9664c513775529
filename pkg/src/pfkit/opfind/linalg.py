"""Fraction-free nullspace over Q.

Rows are scaled to primitive integer vectors and reduced Gauss-Jordan style
with integer cross-multiplication; after every update the row content is
divided out, which keeps entries at the size of the minors involved.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def primitive_row(row: Sequence) -> list[int]:
    """Scale a rational row to coprime integers (sign preserved)."""
    den = 1
    for c in row:
        if not isinstance(c, int):
            den = math.lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in row]
    return _strip(ints)


def _strip(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def row_reduce(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form with integer pivots.

    Returns ``(R, pivots)``: ``R[k]`` has a nonzero entry at ``pivots[k]`` and
    zeros in every other pivot column.  Pivot choice is deterministic: the
    first column with a nonzero entry, using the remaining row of smallest
    absolute value there (earliest row on ties).
    """
    work = [primitive_row(r) for r in rows]
    work = [r for r in work if any(r)]
    reduced: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        best = None
        for idx, r in enumerate(work):
            v = r[col]
            if v and (best is None or abs(v) < abs(work[best][col])):
                best = idx
        if best is None:
            continue
        prow = work.pop(best)
        p = prow[col]
        rest = []
        for r in work:
            e = r[col]
            if e:
                g = math.gcd(p, e)
                a, b = p // g, e // g
                r = _strip([a * x - b * y for x, y in zip(r, prow)])
            if any(r):
                rest.append(r)
        work = rest
        for k, r in enumerate(reduced):
            e = r[col]
            if e:
                g = math.gcd(p, e)
                a, b = p // g, e // g
                reduced[k] = _strip([a * x - b * y for x, y in zip(r, prow)])
        reduced.append(prow)
        pivots.append(col)
        if not work:
            break
    return reduced, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Basis of ``{v : A v = 0}``, one primitive integer vector per free column.

    The vector for free column ``f`` has ``v_f > 0``, zeros at the other free
    columns, and is determined by the reduced rows; the basis is therefore
    canonical (independent of the elimination path).
    """
    R, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        # v_f = L, v_{c_k} = -L * R[k][f] / R[k][c_k]
        L = 1
        for k, c in enumerate(pivots):
            if R[k][f]:
                L = math.lcm(L, abs(R[k][c]))
        v = [0] * ncols
        v[f] = L
        for k, c in enumerate(pivots):
            if R[k][f]:
                v[c] = -L * R[k][f] // R[k][c]
        basis.append(_strip(v))
    return basis


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])
