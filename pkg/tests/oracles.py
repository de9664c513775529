"""Independent reference computations shared by the unit and acceptance suites."""

import random
from fractions import Fraction
from math import factorial

from pfkit.exact.poly import MultiPoly
from pfkit.exact.series import PowerSeries, series_power, series_reversion
from pfkit.opfind.linalg import primitive_row
from pfkit.periods.morse import determinant

F = Fraction


def naive_nullspace(rows, ncols):
    """Plain Fraction RREF; basis vector per free column, made primitive."""
    A = [[F(x) for x in r] for r in rows]
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(A)) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[top], A[piv] = A[piv], A[top]
        p = A[top][col]
        A[top] = [x / p for x in A[top]]
        for i in range(len(A)):
            if i != top and A[i][col] != 0:
                e = A[i][col]
                A[i] = [x - e * y for x, y in zip(A[i], A[top])]
        pivots.append(col)
        top += 1
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [F(0)] * ncols
        v[f] = F(1)
        for k, c in enumerate(pivots):
            v[c] = -A[k][f]
        basis.append(primitive_row(v))
    return basis


def random_system(rng):
    """Up to 12x12 with forced rank deficiency."""
    ncols = rng.randint(1, 12)
    nrows = rng.randint(1, 12)
    base = [[F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(ncols)] for _ in range(rng.randint(1, nrows))]
    rows = []
    for _ in range(nrows):
        coeffs = [rng.randint(-2, 2) for _ in base]
        rows.append([sum(c * b[j] for c, b in zip(coeffs, base)) for j in range(ncols)])
    return rows, ncols


def multinomial_oracle(m):
    """[f^m]_0 for f = x1+x2+x3+x4+1/(x1x2x3x4): each of the five terms k times."""
    if m % 5:
        return 0
    k = m // 5
    return factorial(m) // factorial(k) ** 5


def root_reversion_oracle(tail, N):
    """1-D: f = x^2 (1 + g(x)), y = x sqrt(1+g), x = x(y); the derivative of
    the sublevel length x(sqrt t) - x(-sqrt t) has t^(m-1/2) coefficient
    (2m+1) b_(2m+1)."""
    M = 2 * N + 2
    g = PowerSeries([1] + tail, order=M)
    y = PowerSeries([0] + list(series_power(g, F(1, 2), lead=1).coeffs[:M]))
    b = series_reversion(y).coeffs
    return [(2 * m + 1) * b[2 * m + 1] for m in range(N + 1)]


def random_morse_instance(rng, n):
    """``(f, A, M, det M)`` with a nondegenerate diagonal quadratic part."""
    while True:
        M = [[F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)] for _ in range(n)]
        det = determinant(M)
        if det:
            break
    xs = [MultiPoly.var(i, n) for i in range(n)]
    f = MultiPoly({}, n)
    for i in range(n):
        f = f + rng.choice([1, 2, 3, -1, F(1, 2)]) * xs[i] * xs[i]
    for _ in range(3):
        e = [0] * n
        for _ in range(3):
            e[rng.randrange(n)] += 1
        f = f + F(rng.randint(-2, 2)) * MultiPoly({tuple(e): 1}, n)
    A = 1 + F(rng.randint(-2, 2)) * xs[0] + F(rng.randint(-1, 1)) * xs[-1] * xs[-1]
    return f, A, M, det


def linear_images(M, n):
    xs = [MultiPoly.var(j, n) for j in range(n)]
    return [sum((M[r][c] * xs[c] for c in range(n)), MultiPoly({}, n)) for r in range(n)]


def linear_change_instances(count=20, seed=2024):
    """``(original, f o M with (A o M) det M, f o M with A o M, det M)``."""
    from pfkit.periods import MorseProblem

    rng = random.Random(seed)
    for i in range(count):
        n = 2 + i % 2
        N = 3 if n == 2 else 2
        f, A, M, det = random_morse_instance(rng, n)
        images = linear_images(M, n)
        fM, AM = f.substitute(images), A.substitute(images)
        yield MorseProblem(n, f, A, N), MorseProblem(n, fM, AM * det, N), MorseProblem(n, fM, AM, N), det
