import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import linear_change_instances, multinomial_oracle, root_reversion_oracle
from pfkit.errors import DegenerateQuadraticPart, ParseError, PreconditionError, ViolatedNonvanishing, ZeroLeading
from pfkit.exact.poly import LaurentPoly, MultiPoly
from pfkit.fixtures import FIXTURES, QUINTIC_LAURENT, quintic_coefficient
from pfkit.periods import (
    MorseProblem,
    SimplexProblem,
    ball_moment,
    constant_term_series,
    laurent_power_constant_terms,
    morse_normalize,
    morse_period,
    parse_laurent,
    parse_morse_problem,
    parse_polynomial,
    parse_simplex_problem,
    simplex_moment,
    simplex_period,
    simplex_period_reference,
    variable_names,
)
from pfkit.periods.simplex import _flint_available

F = Fraction


def simplex(text, order):
    return simplex_period(parse_simplex_problem(text, order))


# -- parser -------------------------------------------------------------------

def test_parse_polynomial_implicit_products():
    names = variable_names(2)
    assert names == ["x1", "x2", "t"]
    p = parse_polynomial("(1-x)(1+ty) - 2x^2/3", names)
    x, y, t = (MultiPoly.var(i, 3) for i in range(3))
    assert p == (1 - x) * (1 + t * y) - F(2, 3) * x * x
    assert parse_polynomial("x1*x2", variable_names(2, with_t=False)) == MultiPoly({(1, 1): 1}, 2)


@pytest.mark.parametrize("text", ["(1-x", "1+*x", "x^y", "q+1", "x^-1"])
def test_parse_polynomial_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, variable_names(2))


def test_problem_file_errors_have_lines():
    with pytest.raises(ParseError):
        parse_simplex_problem("P: 1-x\n", 3)
    with pytest.raises(ParseError):
        parse_simplex_problem("dim 1\n", 3)
    with pytest.raises(ParseError):
        parse_simplex_problem("dim 1\nP: 1-x\n")  # no order anywhere
    with pytest.raises(ParseError) as info:
        parse_simplex_problem("dim 1\n\nP: 1-(x\n", 2)
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_laurent("1 0 : 1\n1 : 2\n")
    assert info.value.line == 2
    assert parse_simplex_problem("dim 1\norder 4\nP: 1-x\n").order == 4


def test_morse_problem_file():
    p = parse_morse_problem("dim 2\nf: x1^2 + x2^2 + x1^3\nA: 1 + x2\n", 3)
    assert p.dim == 2 and p.order == 3
    assert p.A == 1 + MultiPoly.var(1, 2)


# -- simplex engine -------------------------------------------------------------

def test_simplex_moment_dirichlet():
    # int_T x^2 dx over the 1-simplex, normalized by int_T 1 / sqrt(x(1-x))
    assert simplex_moment([0]) == 1
    assert simplex_moment([1]) == F(1, 2)
    assert simplex_moment([2]) == F(3, 8)


def test_legendre_series():
    exp = simplex("dim 1\nP: 1 - x\n", 20)
    assert list(exp.series.coeffs) == [F(comb(2 * m, m) ** 2, 16**m) for m in range(21)]
    assert exp.offset == 0
    assert exp.pi_power == 1


@pytest.mark.parametrize("name", ["meyer36", "meyer70", "meyer254"])
def test_printed_prefixes(name):
    fx = FIXTURES[name]
    exp = simplex(fx.problem, 5)
    assert exp.series.coeffs == fx.series_prefix
    assert exp.offset == 1
    assert exp.pi_power == 2


def test_sign_inside_root_leaves_series_unchanged():
    fx = FIXTURES["meyer70"]
    p = parse_simplex_problem(fx.problem, 8)
    flipped = SimplexProblem(p.dim, -p.P, p.order)
    a, b = simplex_period(p), simplex_period(flipped)
    assert a.series == b.series
    assert a.prefactor_square == 1 and b.prefactor_square == -1


def test_simplex_reference_agrees_on_random_polynomials():
    rng = random.Random(7)
    for _ in range(6):
        n = rng.randint(1, 2)
        terms = {(0,) * (n + 1): rng.choice([1, 2, 4, F(1, 4)])}
        for _ in range(4):
            e = tuple(rng.randint(0, 2) for _ in range(n + 1))
            if any(e):
                terms[e] = F(rng.randint(-3, 3), rng.randint(1, 3))
        p = SimplexProblem(n, MultiPoly(terms, n + 1), 5)
        exp = simplex_period(p, backend="python")
        ref = simplex_period_reference(p)
        assert exp.series == ref


@pytest.mark.skipif(not _flint_available(), reason="python-flint not installed")
def test_flint_backend_identical():
    p = parse_simplex_problem(FIXTURES["meyer36"].problem, 12)
    assert simplex_period(p, backend="python").series == simplex_period(p, backend="flint").series


def test_simplex_errors():
    with pytest.raises(ViolatedNonvanishing):
        simplex("dim 1\nP: x + t\n", 3)
    with pytest.raises(ValueError):
        simplex_period(parse_simplex_problem("dim 1\nP: 1-x\n", 3), backend="gpu")


# -- constant terms ---------------------------------------------------------------

def test_quintic_constant_terms():
    f = parse_laurent(QUINTIC_LAURENT)
    s = constant_term_series(f, 15)
    assert list(s.coeffs) == [multinomial_oracle(m) for m in range(16)]
    assert [s.coeffs[5 * n] for n in range(4)] == [quintic_coefficient(n) for n in range(4)]


laurent_terms = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda c: c != 0),
    min_size=1,
    max_size=5,
)


@given(laurent_terms)
def test_pruned_matches_unpruned(terms):
    f = LaurentPoly(terms, 2)
    N = 6
    pruned = constant_term_series(f, N, prune=True)
    assert pruned == constant_term_series(f, N, prune=False)
    assert list(pruned.coeffs) == laurent_power_constant_terms(f, N)


# -- Morse engine -----------------------------------------------------------------

@pytest.mark.parametrize("text,tail", [("x1^2 + x1^3", [1]), ("x1^2 + x1^4", [0, 1])])
def test_morse_one_dimensional_oracle(text, tail):
    f = parse_polynomial(text, ["x1"])
    exp = morse_period(MorseProblem(1, f, MultiPoly.constant(1, 1), 8))
    assert list(exp.series.coeffs) == root_reversion_oracle(tail, 8)
    assert exp.offset == F(-1, 2)
    assert exp.pi_power == 0 and exp.rational_factor == 1


def test_morse_linear_change_invariance():
    for p1, p2, p3, det in linear_change_instances(20):
        e1, e2, e3 = morse_period(p1), morse_period(p2), morse_period(p3)
        assert e1.series == e2.series == e3.series
        assert e2.prefactor_square == e1.prefactor_square
        assert e3.prefactor_square * det**2 == e1.prefactor_square
        assert all(isinstance(c, Fraction) for c in e2.series.coeffs)


def test_morse_irrational_symbols_cancel():
    f = parse_polynomial("2x1^2 + 3x2^2 + x1^3 + x1*x2^2", ["x1", "x2"])
    nf = morse_normalize(MorseProblem(2, f, MultiPoly.constant(1, 2), 3))
    assert not nf.d.is_rational()  # 1/sqrt(6)
    exp = morse_period(MorseProblem(2, f, MultiPoly.constant(1, 2), 3))
    assert exp.prefactor_square == F(1, 6)


def test_quadratic_form_only():
    f = parse_polynomial("x1^2 + x1*x2 + x2^2", ["x1", "x2"])
    exp = morse_period(MorseProblem(2, f, MultiPoly.constant(1, 2), 4))
    assert list(exp.series.coeffs) == [1, 0, 0, 0, 0]
    assert exp.prefactor_square == F(4, 3)


def test_ball_moment():
    assert ball_moment(1, [1]) == F(1, 3)
    assert ball_moment(2, [1, 0]) == F(1, 4)
    assert ball_moment(3, [0, 0, 0]) == 1


def test_morse_errors():
    one = MultiPoly.constant(1, 2)
    with pytest.raises(PreconditionError):
        morse_period(MorseProblem(2, parse_polynomial("1 + x1^2 + x2^2", ["x1", "x2"]), one, 2))
    with pytest.raises(PreconditionError):
        morse_period(MorseProblem(2, parse_polynomial("x1 + x2^2", ["x1", "x2"]), one, 2))
    with pytest.raises(DegenerateQuadraticPart):
        morse_period(MorseProblem(2, parse_polynomial("x1^2 + x2^3", ["x1", "x2"]), one, 2))
    with pytest.raises(ZeroLeading):
        morse_period(MorseProblem(2, parse_polynomial("x1^2 + x2^2", ["x1", "x2"]), MultiPoly.var(0, 2), 2))


def test_simplex_permutation_invariance():
    fx = FIXTURES["meyer36"]
    p = parse_simplex_problem(fx.problem, 8)
    base = simplex_period(p).series
    for perm in [(1, 0, 2), (2, 1, 0), (1, 2, 0)]:
        terms = {tuple(e[perm[i]] for i in range(3)) + (e[3],): c for e, c in p.P.terms.items()}
        q = SimplexProblem(3, MultiPoly(terms, 4), 8)
        assert simplex_period(q).series == base


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 4), min_size=n, max_size=n))))
def test_ball_moment_ratio(case):
    n, k = case
    k1 = [k[0] + 1] + k[1:]
    ratio = ball_moment(n, k1) / ball_moment(n, k)
    assert ratio == F(2 * k[0] + 1, 2) / (F(n, 2) + sum(k) + 1)
