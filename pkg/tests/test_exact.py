from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rational_lists, rationals
from pfkit.errors import BadLeading, NonSquareLeading, ParseError, ZeroLeading
from pfkit.exact.jet import EpsilonJet
from pfkit.exact.poly import (
    LaurentPoly,
    MultiPoly,
    padd,
    pdivmod,
    pgcd,
    pmul,
    pstr,
    ptrim,
)
from pfkit.exact.quadext import QuadExtScalar, squarefree_split
from pfkit.exact.series import (
    PowerSeries,
    derivative,
    series_compose,
    series_exp,
    series_inv,
    series_inv_sqrt,
    series_log1p,
    series_power,
    series_reversion,
    theta_derivative,
)
from pfkit.exact.textio import dumps_series, format_rational, loads_series, parse_rational

F = Fraction
N = 8
series = rational_lists(N + 1).map(PowerSeries)
unit_series = rational_lists(N).map(lambda cs: PowerSeries([1] + cs))
nilpotent = rational_lists(N).map(lambda cs: PowerSeries([0] + cs))


# -- ring laws ---------------------------------------------------------------

@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == PowerSeries([0] * (N + 1))


@given(unit_series)
def test_inverse(a):
    one = PowerSeries([1], order=N)
    assert a * series_inv(a) == one


@given(unit_series, st.integers(-3, 3))
def test_integer_power_matches_repeated_product(a, k):
    assert series_power(a, k) == a**k


@given(unit_series)
def test_half_power_squares_back(a):
    r = series_power(a, Fraction(1, 2), lead=1)
    assert r * r == a
    assert series_inv_sqrt(a) * series_inv_sqrt(a) * a == PowerSeries([1], order=N)


# -- exp / log / reversion ----------------------------------------------------

@given(nilpotent)
def test_exp_log_roundtrip(a):
    assert series_log1p(series_exp(a)) == a


@given(unit_series)
def test_log_exp_roundtrip(a):
    assert series_exp(series_log1p(a)) == a


@given(nilpotent, nilpotent)
def test_exp_is_homomorphism(a, b):
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


@given(rational_lists(N - 1), rationals().filter(lambda x: x != 0))
def test_reversion_roundtrip(tail, a1):
    a = PowerSeries([0, a1] + tail)
    b = series_reversion(a)
    t = PowerSeries([0, 1], order=N)
    assert series_compose(a, b) == t
    assert series_compose(b, a) == t


@given(series, nilpotent, nilpotent)
def test_compose_associative(f, g, h):
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


@given(series, series)
def test_theta_is_derivation(a, b):
    assert theta_derivative(a * b) == theta_derivative(a) * b + a * theta_derivative(b)


def test_offsets():
    a = PowerSeries([1, 2, 3], Fraction(1, 2))
    assert theta_derivative(a).coeffs == (Fraction(1, 2), 3, Fraction(15, 2))
    assert derivative(a).offset == Fraction(-1, 2)
    assert (a * a).offset == 1
    with pytest.raises(ValueError):
        _ = a + PowerSeries([1, 1], Fraction(1, 3))


def test_order_truncates_to_minimum():
    a = PowerSeries([1, 1, 1, 1])
    b = PowerSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_errors():
    with pytest.raises(ZeroLeading):
        series_inv(PowerSeries([0, 1]))
    with pytest.raises(NonSquareLeading):
        series_inv_sqrt(PowerSeries([2, 1]))
    with pytest.raises(BadLeading):
        series_log1p(PowerSeries([2, 1]))
    with pytest.raises(BadLeading):
        series_exp(PowerSeries([1, 1]))
    with pytest.raises(BadLeading):
        series_reversion(PowerSeries([0, 0, 1]))


def test_exp_known_values():
    e = series_exp(PowerSeries([0, 1], order=5))
    assert e.coeffs == tuple(Fraction(1, f) for f in (1, 1, 2, 6, 24, 120))


# -- epsilon jets ---------------------------------------------------------------

jets = rational_lists(4).map(lambda cs: EpsilonJet(cs, 4))
unit_jets = rational_lists(3).map(lambda cs: EpsilonJet([1] + cs, 4))


@given(jets, jets, jets)
def test_jet_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(unit_jets)
def test_jet_inverse(a):
    assert a * a.inverse() == EpsilonJet.constant(1, 4)


def test_jet_eps_power_truncates():
    e = EpsilonJet.eps(3)
    assert e**3 == EpsilonJet.constant(0, 3)
    assert (EpsilonJet.eps(3, 2) ** 2)[1] == 4


# -- quadratic extension scalars ----------------------------------------------

def test_quadext_arithmetic():
    sq = (2, 3)
    r2 = QuadExtScalar.symbol(0, sq)
    r3 = QuadExtScalar.symbol(1, sq)
    assert (r2 * r2).to_rational() == 2
    assert ((r2 * r3) * (r2 * r3)).to_rational() == 6
    x = r2 + r3 + 1
    assert (x * x.inverse()).to_rational() == 1
    assert not (r2 + 1).is_rational()
    assert abs((r2 * r3).approx() - 6**0.5) < 1e-12


@pytest.mark.parametrize("q,expected", [(12, (2, 3)), (Fraction(8, 9), (Fraction(2, 3), 2)), (49, (7, 1))])
def test_squarefree_split(q, expected):
    c, s = squarefree_split(q)
    assert (c, s) == expected
    assert c * c * s == Fraction(q)


# -- polynomials --------------------------------------------------------------

@given(rational_lists(4), rational_lists(3).filter(lambda p: p[-1] != 0))
def test_pdivmod(a, b):
    q, r = pdivmod(a, b)
    assert ptrim(padd(pmul(q, b), r)) == ptrim(a)
    assert len(ptrim(r)) < len(ptrim(b))


def test_pgcd_and_pstr():
    a = pmul([1, 1], [2, -1])
    b = pmul([1, 1], [3, 0, 1])
    assert pgcd(a, b) == [1, 1]
    assert pstr([1, -2, 0, 1]) == "t^3 - 2*t + 1"


def test_multipoly_basics():
    x = MultiPoly.var(0, 2)
    y = MultiPoly.var(1, 2)
    p = (1 - x) * (1 + y)
    assert p.coeff((1, 1)) == -1
    assert p.total_degree() == 2
    assert p.diff(0) == -(1 + y)
    assert p.evaluate([Fraction(1, 2), 2]) == Fraction(3, 2)
    assert (x + y).pow(3, max_degree=2) == MultiPoly({}, 2)
    s = p.substitute([y, x])
    assert s == (1 - y) * (1 + x)


def test_laurent_allows_negative_exponents():
    f = LaurentPoly({(1,): 1, (-1,): 1}, 1)
    assert (f * f).constant_term() == 2
    with pytest.raises(ValueError):
        MultiPoly({(-1,): 1}, 1)


# -- text format --------------------------------------------------------------

@given(rational_lists(6), rationals())
def test_series_text_roundtrip(cs, off):
    s = PowerSeries(cs, off)
    assert loads_series(dumps_series(s, ["comment"])) == s


def test_rational_text():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational(" 10/4 ") == Fraction(5, 2)
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_series_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        loads_series("offset 0\n1\nabc\n")
    assert info.value.line == 3
    with pytest.raises(ParseError):
        loads_series("")
    with pytest.raises(ParseError):
        loads_series("1\noffset 1\n")


def test_quadext_numeric_shadow():
    import math
    import random

    rng = random.Random(12)
    sq = (2, 3, 5)
    roots = [math.sqrt(c) for c in sq]
    for _ in range(30):
        def rand():
            x = QuadExtScalar.rational(F(rng.randint(-5, 5), rng.randint(1, 3)), sq)
            for i in range(3):
                x = x + QuadExtScalar.symbol(i, sq) * F(rng.randint(-3, 3))
            return x

        a, b = rand(), rand()
        exact = (a * b).approx()
        approx = a.approx() * b.approx()
        assert abs(exact - approx) <= 1e-12 * max(1.0, abs(approx))
        assert abs(a.approx(roots) - a.approx()) < 1e-12
