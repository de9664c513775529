"""Periods of vanishing spheres at an A1 critical point.

``f = f_2 + f_3 + ...`` is brought to its quadratic part by the formal Morse
lemma, the form ``A dx`` is pulled back along the coordinate change, and the
integral over the Lefschetz thimble ``{f <= t}`` becomes a sum of moments of
the standard ball.  Differentiating in ``t`` gives the period.

The nonlinear iteration runs over Q in the coordinates ``y`` where
``f_2 = sum c_i y_i^2``; only the final rescale ``y_i = z_i / sqrt(c_i)``
introduces square roots, which live in one multi-quadratic algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from ..errors import DegenerateQuadraticPart, IrrationalCoefficient, PreconditionError, ZeroLeading
from ..exact.poly import MultiPoly
from ..exact.quadext import QuadExtScalar, squarefree_split
from ..exact.series import PowerSeries
from .expansion import PeriodExpansion
from .simplex import rising


@dataclass(frozen=True)
class MorseProblem:
    dim: int
    f: MultiPoly
    A: MultiPoly
    order: int

    def __post_init__(self):
        if self.f.nvars != self.dim or self.A.nvars != self.dim:
            raise ValueError("f and A must be polynomials in x_1..x_n")
        if self.order < 0:
            raise ValueError("order must be non-negative")


@dataclass(frozen=True)
class MorseNormalForm:
    """Result of :func:`morse_normalize` (coordinates ``z``, ``f = sum z_i^2``)."""

    g: MultiPoly
    omega: MultiPoly  # coefficients are QuadExtScalar
    d: QuadExtScalar  # Jacobian scalar of the linear part: det(M) / prod sqrt(c_i)
    diagonal: tuple  # the c_i with f_2 = sum c_i y_i^2
    linear_map: tuple  # x = M y, rows of M
    rational_omega: MultiPoly  # pulled-back numerator in the y coordinates


# ---------------------------------------------------------------------------
# linear algebra over Q
# ---------------------------------------------------------------------------


def quadratic_matrix(f2: MultiPoly) -> list[list[Fraction]]:
    n = f2.nvars
    S = [[Fraction(0)] * n for _ in range(n)]
    for e, c in f2.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            S[i][i] += c
        else:
            S[i][j] += c / 2
            S[j][i] += c / 2
    return S


def determinant(M) -> Fraction:
    M = [list(map(Fraction, row)) for row in M]
    n = len(M)
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if M[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            M[i], M[piv] = M[piv], M[i]
            det = -det
        det *= M[i][i]
        for r in range(i + 1, n):
            fac = M[r][i] / M[i][i]
            if fac:
                for c in range(i, n):
                    M[r][c] -= fac * M[i][c]
    return det


def diagonalize_quadratic(S) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Return ``(M, c)`` with ``M^T S M = diag(c)`` and ``M`` invertible."""
    n = len(S)
    B = [list(map(Fraction, row)) for row in S]
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def col_add(dst, src, fac):
        # x_dst += fac * x_src on the right, then symmetrically on the left
        for r in range(n):
            M[r][dst] += fac * M[r][src]
        for r in range(n):
            B[r][dst] += fac * B[r][src]
        for c in range(n):
            B[dst][c] += fac * B[src][c]

    def swap(i, j):
        for r in range(n):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        B[i], B[j] = B[j], B[i]
        for row in B:
            row[i], row[j] = row[j], row[i]

    for i in range(n):
        if B[i][i] == 0:
            j = next((j for j in range(i + 1, n) if B[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if B[i][j] != 0), None)
                if j is None:
                    raise DegenerateQuadraticPart("quadratic part is degenerate")
                col_add(i, j, Fraction(1))
        for j in range(i + 1, n):
            if B[i][j] != 0:
                col_add(j, i, -B[i][j] / B[i][i])
    c = [B[i][i] for i in range(n)]
    if any(x == 0 for x in c):
        raise DegenerateQuadraticPart("quadratic part is degenerate")
    return M, c


def linear_substitution(p: MultiPoly, M, max_degree=None) -> MultiPoly:
    """``p(M y)``."""
    n = p.nvars
    images = [MultiPoly({tuple(int(k == j) for k in range(n)): M[i][j] for j in range(n)}, n) for i in range(n)]
    return p.substitute(images, max_degree)


def poly_determinant(J, max_degree: int) -> MultiPoly:
    """Leibniz determinant of a square matrix of MultiPolys, truncated."""
    n = len(J)
    nv = J[0][0].nvars
    total = MultiPoly({}, nv)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = MultiPoly.constant(sign, nv)
        for i in range(n):
            term = term.mul(J[i][perm[i]], max_degree)
            if not term:
                break
        total = total + term
    return total


# ---------------------------------------------------------------------------
# formal Morse lemma
# ---------------------------------------------------------------------------


def _check_problem(p: MorseProblem):
    if p.f.constant_term() != 0:
        raise PreconditionError("f must vanish at the critical point")
    if any(sum(e) == 1 for e in p.f.terms):
        raise PreconditionError("f must have no linear part")


def morse_step(f: MultiPoly, A: MultiPoly, c, k: int, f_deg: int, a_deg: int):
    """Kill the degree-``k`` part of ``f = sum c_i y_i^2 + f_k + ...``.

    Each monomial of ``f_k`` is assigned to its smallest-index variable
    ``y_i``; ``a_i = (assigned part) / (2 c_i y_i)`` and ``y -> y - a``.
    """
    n = f.nvars
    fk = f.homogeneous_part(k)
    if not fk:
        return f, A
    a = [dict() for _ in range(n)]
    for e, coef in fk.terms.items():
        i = next(j for j, x in enumerate(e) if x)
        ne = list(e)
        ne[i] -= 1
        a[i][tuple(ne)] = coef / (2 * c[i])
    apolys = [MultiPoly(ai, n) for ai in a]
    images = [MultiPoly.var(i, n) - apolys[i] for i in range(n)]
    f_new = f.substitute(images, f_deg)
    jac = [
        [MultiPoly.constant(int(i == j), n) - apolys[i].diff(j) for j in range(n)]
        for i in range(n)
    ]
    A_new = A.substitute(images, a_deg).mul(poly_determinant(jac, a_deg), a_deg)
    return f_new, A_new


def _working_degrees(N: int) -> tuple[int, int]:
    # A_m needs jets of the pulled-back form up to degree 2m; a degree-k
    # substitution perturbs the Jacobian from degree k-2 on.
    return 2 * N + 2, 2 * N


def _sqrt_symbols(c):
    """Express each ``sqrt(c_i)`` in Q(sqrt(-1), sqrt(p_1), ...) over primes."""
    splits = [squarefree_split(ci) for ci in c]
    primes = set()
    for _, s in splits:
        primes.update(_prime_factors(abs(s)))
        if s < 0:
            primes.add(-1)
    symbols = sorted(primes)
    squares = tuple(Fraction(p) for p in symbols)
    roots = []
    for r, s in splits:
        mask = 0
        for idx, p in enumerate(symbols):
            if (p == -1 and s < 0) or (p > 0 and s % p == 0):
                mask |= 1 << idx
        roots.append(QuadExtScalar({mask: r}, squares))
    return roots, squares


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def morse_normalize(p: MorseProblem) -> MorseNormalForm:
    _check_problem(p)
    n, N = p.dim, p.order
    f_deg, a_deg = _working_degrees(N)
    S = quadratic_matrix(p.f.homogeneous_part(2))
    if determinant(S) == 0:
        raise DegenerateQuadraticPart("det of the quadratic part vanishes (not an A1 point)")
    M, c = diagonalize_quadratic(S)
    detM = determinant(M)
    f = linear_substitution(p.f.truncate(f_deg), M, f_deg)
    A = linear_substitution(p.A.truncate(a_deg), M, a_deg) * detM
    for k in range(3, f_deg + 1):
        f, A = morse_step(f, A, c, k, f_deg, a_deg)
    residual = f - MultiPoly({tuple(2 * int(i == j) for j in range(n)): c[i] for i in range(n)}, n)
    if residual:
        raise AssertionError("Morse iteration left a non-quadratic remainder")

    roots, squares = _sqrt_symbols(c)
    inv_roots = [r.inverse() for r in roots]
    jac = QuadExtScalar.rational(1, squares)
    for r in inv_roots:
        jac = jac * r
    omega_terms = {}
    for e, coef in A.terms.items():
        v = jac * coef
        for i, k in enumerate(e):
            if k:
                v = v * inv_roots[i] ** k
        omega_terms[e] = v
    g = MultiPoly({tuple(2 * int(i == j) for j in range(n)): 1 for i in range(n)}, n)
    return MorseNormalForm(
        g=g,
        omega=MultiPoly(omega_terms, n),
        d=jac * detM,
        diagonal=tuple(c),
        linear_map=tuple(tuple(row) for row in M),
        rational_omega=A,
    )


# ---------------------------------------------------------------------------
# ball moments and the period
# ---------------------------------------------------------------------------


def ball_moment(n: int, k) -> Fraction:
    """``I(2k)/I(0)`` over the unit n-ball: ``prod (1/2)_{k_i} / (n/2 + 1)_{|k|}``."""
    num = Fraction(1)
    for ki in k:
        num *= Fraction(math.factorial(2 * ki), 4**ki * math.factorial(ki))
    return num / rising(Fraction(n, 2) + 1, sum(k))


def _ball_prefactor(n: int) -> tuple[Fraction, Fraction]:
    """``(n/2) * pi^(n/2) / Gamma(n/2 + 1)`` as ``(rational, pi power)``."""
    half_n = Fraction(n, 2)
    if n % 2 == 0:
        return half_n / math.factorial(n // 2), half_n
    dfact = math.prod(range(n, 0, -2))
    return half_n * Fraction(2 ** ((n + 1) // 2), dfact), Fraction(n - 1, 2)


def morse_period(p: MorseProblem) -> PeriodExpansion:
    nf = morse_normalize(p)
    n, N = p.dim, p.order
    J0 = nf.omega.constant_term()
    if J0 == 0:
        raise ZeroLeading("the form must not vanish at the critical point")
    half_n = Fraction(n, 2)
    buckets = [None] * (N + 1)
    for e, J in nf.omega.terms.items():
        if any(x % 2 for x in e):
            continue
        k = [x // 2 for x in e]
        m = sum(k)
        if m > N:
            continue
        term = J * ball_moment(n, k)
        buckets[m] = term if buckets[m] is None else buckets[m] + term
    coeffs = []
    lead = J0 * half_n
    for m in range(N + 1):
        if buckets[m] is None:
            coeffs.append(Fraction(0))
            continue
        ratio = buckets[m] * (m + half_n) / lead
        if not ratio.is_rational():
            raise IrrationalCoefficient(f"coefficient A_{m} = {ratio!r} is not rational")
        coeffs.append(ratio.to_rational())
    d_sq = J0 * J0
    if not d_sq.is_rational():
        raise IrrationalCoefficient("d^2 is not rational")
    rat, pi_power = _ball_prefactor(n)
    notes = ()
    if J0.is_rational():
        notes = (f"d {J0.to_rational()}",)
    return PeriodExpansion(
        prefactor_square=d_sq.to_rational(),
        pi_power=pi_power,
        rational_factor=rat,
        series=PowerSeries(coeffs, half_n - 1),
        notes=notes,
    )
