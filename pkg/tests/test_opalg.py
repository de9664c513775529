import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rational_lists
from pfkit.errors import NotSupported
from pfkit.fixtures import FIXTURES, legendre_operator, meyer36_operator, meyer70_operator, quintic_operator
from pfkit.opalg import (
    APPARENT,
    CONIFOLD,
    INFINITY,
    IRREGULAR,
    MUM,
    OTHER,
    REGULAR,
    AlgebraicPoint,
    DOperator,
    NumberField,
    RationalPoint,
    analysis_report,
    classify_point,
    compose,
    d_to_theta,
    formal_adjoint,
    fuchs_relation,
    has_mum_point,
    indicial_exponents,
    indicial_polynomial,
    riemann_symbol,
    self_adjoint_check,
    self_adjoint_closed_form,
    singular_points,
    theta_to_d,
)
from pfkit.opfind import ThetaOperator, normalize

F = Fraction
polys = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=1, max_size=3)
dops = st.lists(polys, min_size=1, max_size=4).map(lambda bs: DOperator(tuple(tuple(b) for b in bs)))


# -- conversions and adjoints ---------------------------------------------------------

@given(dops)
def test_adjoint_involution(L):
    assert formal_adjoint(formal_adjoint(L)) == L


@given(dops, dops)
def test_adjoint_product_rule(A, B):
    assert formal_adjoint(compose(A, B)) == compose(formal_adjoint(B), formal_adjoint(A))


@given(dops, dops, dops)
def test_compose_associative(A, B, C):
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@given(dops, polys)
def test_compose_acts_on_polynomials(A, y):
    B = DOperator(((1,), (0, 1)))  # 1 + t D
    assert A.apply(B.apply(list(y))) == compose(A, B).apply(list(y))


@given(st.lists(rational_lists(3), min_size=2, max_size=4).filter(lambda rows: any(rows[0]) and any(rows[-1])))
def test_theta_d_roundtrip(rows):
    P = ThetaOperator.from_rows(rows)
    assert d_to_theta(theta_to_d(P)) == normalize(P)


def test_theta_to_d_legendre():
    L = theta_to_d(legendre_operator())
    # 4 theta^2 - t(2theta+1)^2 = 4t^2(1-t) D^2 + 4t(1-2t) D - t, sign fixed by the leading term
    assert L == DOperator(((0, 1), (0, -4, 8), (0, 0, -4, 4)))


# -- number fields ---------------------------------------------------------------------

def test_number_field_arithmetic():
    K = NumberField((-1, 4, 1))  # t^2 + 4t - 1
    a = K.gen
    assert a * a == -4 * a + 1
    assert (a + 2) * (a + 2) == 5
    x = 3 * a - F(1, 2)
    assert x * x.inverse() == 1
    assert (a**3).component(1) == 17
    assert K(F(2, 3)).is_rational()


# -- local exponents ----------------------------------------------------------------------

def test_quintic_symbol():
    sym = riemann_symbol(quintic_operator())
    pts = [sp.point for sp in sym.points]
    assert pts == [RationalPoint(F(0)), RationalPoint(F(1, 3125)), INFINITY]
    assert sym.exponents(0) == [0, 0, 0, 0]
    assert sym.exponents(F(1, 3125)) == [0, 1, 1, 2]
    assert sym.exponents("∞") == [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]
    assert sym.get(0).tag == MUM and sym.get(F(1, 3125)).tag == CONIFOLD
    assert fuchs_relation(sym) == (6, 6)


@pytest.mark.parametrize("name", ["quintic", "legendre", "meyer36", "meyer70"])
def test_fixture_symbols(name):
    fx = FIXTURES[name]
    sym = riemann_symbol(fx.operator)
    got = [(str(sp.point), tuple(sp.exponents)) for sp in sym.points]
    want = [(label, tuple(F(e) for e in exps)) for label, exps in fx.riemann]
    assert sorted(got) == sorted(want)
    total, expected = fuchs_relation(sym)
    assert total == expected


def test_meyer36_classification():
    sym = riemann_symbol(meyer36_operator())
    assert sym.get(0).tag == CONIFOLD
    assert sym.get(1).tag == MUM and sym.get("∞").tag == MUM
    assert has_mum_point(meyer36_operator()) == (True, [RationalPoint(F(1)), INFINITY])


def test_meyer70_orphan():
    assert has_mum_point(meyer70_operator()) == (False, [])
    assert riemann_symbol(meyer70_operator()).exponents("∞") == [F(1, 2), 1, 1, F(3, 2)]


def test_algebraic_points():
    # (1 - 4t - t^2) theta^2: singular locus t^2+4t-1
    P = ThetaOperator.from_rows([[0, 0, 1], [0, 0, -4], [0, 0, -1]])
    pts = singular_points(theta_to_d(P))
    alg = [p for p in pts if isinstance(p, AlgebraicPoint)]
    assert alg == [AlgebraicPoint((-1, 4, 1))]
    assert indicial_exponents(theta_to_d(P), alg[0]) == [0, 1]


def test_indicial_polynomial_at_zero():
    I = indicial_polynomial(theta_to_d(quintic_operator()), 0)
    assert len(I) == 5 and I[:4] == [0, 0, 0, 0] and I[4] != 0


def test_irrational_exponents_reported_numerically():
    # theta^2 - 2 at 0: exponents +-sqrt(2)
    P = ThetaOperator.from_rows([[-2, 0, 1], [0, 0, -1]])
    sym = riemann_symbol(P)
    assert sym.get(0).tag == OTHER
    assert all(str(e).startswith("~") for e in sym.exponents(0))
    assert fuchs_relation(sym) is None


# -- classification ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "exps,tag",
    [
        ([0, 0, 0, 0], MUM),
        ([1, 1, 1, 1], MUM),
        ([0, 1, 1, 2], CONIFOLD),
        ([F(1, 2), F(3, 2), F(3, 2), F(5, 2)], OTHER),
        ([0, 1, 3, 4], APPARENT),
        ([0, 1, 2, 3], REGULAR),
        ([0, 0, 1, 1], OTHER),
        ([F(3, 2)] * 4, OTHER),
        ([0, 1], IRREGULAR),
    ],
)
def test_classify(exps, tag):
    assert classify_point(exps, 4) == tag


@given(st.lists(st.integers(-2, 4), min_size=4, max_size=4), st.randoms())
def test_classify_permutation_invariant(exps, rnd):
    perm = list(exps)
    rnd.shuffle(perm)
    assert classify_point(perm, 4) == classify_point(exps, 4)


# -- self-duality ---------------------------------------------------------------------------

def test_self_duality_fixtures():
    for P in (quintic_operator(), meyer36_operator(), meyer70_operator()):
        assert self_adjoint_check(P)
        assert self_adjoint_closed_form(P)


def test_self_duality_agrees_on_random_operators():
    rng = random.Random(4)
    for _ in range(12):
        rows = [[F(rng.randint(-3, 3)) for _ in range(5)] for _ in range(3)]
        rows[0][4] = rows[-1][4] = F(rng.choice([1, 2, -1]))
        P = ThetaOperator.from_rows(rows)
        assert self_adjoint_check(P) == self_adjoint_closed_form(P)


def test_self_duality_of_adjoint_products():
    # A* A is formally self-adjoint; after making it monic it is self-dual
    rng = random.Random(9)
    for _ in range(5):
        A = DOperator(tuple(tuple(F(rng.randint(-2, 2)) for _ in range(2)) for _ in range(2)) + ((1, F(rng.randint(1, 3))),))
        L = compose(formal_adjoint(A), A)
        assert L.order == 4
        assert self_adjoint_check(L) and self_adjoint_closed_form(L)
        L2 = L + DOperator(((), (1,)))  # perturb the D^1 term
        assert not self_adjoint_check(L2) and not self_adjoint_closed_form(L2)


def test_self_duality_order_guard():
    with pytest.raises(NotSupported):
        self_adjoint_check(legendre_operator())
    with pytest.raises(NotSupported):
        self_adjoint_closed_form(legendre_operator())


def test_closed_form_symbolic():
    """Derive the self-duality condition with sympy, independently of the
    rational-function code: w L* w^-1 - L for w'/w = -a3/2."""
    t = sympy.symbols("t")
    a = [sympy.Function(f"a{i}")(t) for i in range(4)] + [sympy.Integer(1)]
    y = sympy.Function("y")(t)
    W = sympy.Function("W")(t)
    w = sympy.exp(W)
    arg = y / w
    adj = sum((-1) ** k * sympy.diff(a[k] * arg, t, k) for k in range(5))
    conj = sympy.expand(sympy.simplify(w * adj)).subs(sympy.Derivative(W, t), -a[3] / 2).doit()
    conj = sympy.expand(conj.subs(sympy.Derivative(W, t), -a[3] / 2))
    L = sum(a[k] * sympy.diff(y, t, k) for k in range(5))
    diff = sympy.expand(conj - L)
    coeff = [diff.coeff(sympy.diff(y, t, k)) if k else None for k in range(5)]
    assert sympy.simplify(coeff[4]) == 0
    assert sympy.simplify(coeff[3]) == 0
    assert sympy.simplify(coeff[2]) == 0
    a3, a2, a1 = a[3], a[2], a[1]
    closed = a2 * a3 / 2 - a3**3 / 8 + sympy.diff(a2, t) - sympy.Rational(3, 4) * a3 * sympy.diff(a3, t) - sympy.diff(a3, t, 2) / 2
    defect = a1 - closed
    ratio = sympy.simplify(coeff[1] / defect)
    assert ratio.is_number and ratio != 0
    # with the D^1 condition imposed the D^0 difference vanishes as well
    zero_term = diff.subs({sympy.diff(y, t, k): 0 for k in range(1, 5)}).subs(y, 1)
    zero_term = zero_term.subs(a1, closed).doit()
    assert sympy.simplify(zero_term) == 0


def test_analysis_report_content():
    text = analysis_report(meyer70_operator())
    assert "orphan" in text
    assert "symplectic self-duality: yes" in text
    assert "∞ | 1/2 1 1 3/2 | other" in text
    text = analysis_report(quintic_operator())
    assert "0 | 0 0 0 0 | MUM-candidate" in text
    assert "1/3125 | 0 1 1 2 | conifold-candidate" in text


def test_regular_point_exponents():
    L = theta_to_d(quintic_operator())
    for pt in (1, F(-2, 7), 5):
        assert indicial_exponents(L, pt) == [0, 1, 2, 3]
