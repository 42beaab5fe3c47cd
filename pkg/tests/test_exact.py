from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import gr_st, nonzero_gr_st, nonzero_poly_st, nonzero_rf_st, poly_st, rf_st
from legendrian.errors import DivisionByZero, InvalidInput
from legendrian.exact import (
    INFINITY,
    GaussianRational as GR,
    Poly,
    RationalFunction as R,
    derivative,
    evaluate,
    poly_gcd,
    poly_roots,
    poly_xgcd,
    ratfunc_arith,
    ratfunc_normalize,
    squarefree_factorization,
)

z = R.z()
I = GR(0, 1)
ZP = Poly([0, 1])


def P(*cs):
    return Poly(list(cs))


# ---------------------------------------------------------------- scalars


def test_gaussian_rational_field_ops():
    a = GR(Fraction(1, 2), 3)
    b = GR(-2, Fraction(1, 3))
    assert a * a.inverse() == GR(1)
    assert (a + b) - b == a
    assert (a / b) * b == a
    assert GR(0, 1) ** 2 == GR(-1)
    assert GR(2, 0) == 2
    with pytest.raises(DivisionByZero):
        GR(0).inverse()


def test_gaussian_rational_strings_round_trip():
    a = GR(Fraction(-7, 3), Fraction(5, 2))
    assert a.to_strings() == ("-7/3", "5/2")
    assert GR.from_strings(a.to_strings()) == a


@given(gr_st, gr_st, gr_st)
def test_gaussian_rational_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(nonzero_gr_st)
def test_gaussian_rational_inverse(a):
    assert a * a.inverse() == 1


# ---------------------------------------------------------------- polynomials


def test_zero_polynomial_degree_sentinel():
    assert Poly().degree == float("-inf")
    assert P(0, 0, 0).is_zero()
    assert P(1, 2, 0).degree == 1


def test_gcd_examples():
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert poly_gcd(ZP, P(1, 1)) == P(1)
    a = (ZP - I) ** 2 * (ZP + 2)
    b = (ZP - I) * (ZP - 3)
    g = poly_gcd(a, b)
    assert g == ZP - I
    # exact division oracle
    assert a.divmod(g)[1].is_zero() and b.divmod(g)[1].is_zero()


def test_gcd_both_zero_raises():
    with pytest.raises(InvalidInput):
        poly_gcd(Poly(), Poly())


@settings(max_examples=60, deadline=None)
@given(nonzero_poly_st, nonzero_poly_st, nonzero_poly_st)
def test_gcd_divides_and_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.lc == 1
    assert (a * c).divmod(g)[1].is_zero()
    assert (b * c).divmod(g)[1].is_zero()
    assert g.divmod(c.monic())[1].is_zero()


@settings(max_examples=60, deadline=None)
@given(nonzero_poly_st, nonzero_poly_st)
def test_xgcd_bezout(a, b):
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g


@settings(max_examples=60, deadline=None)
@given(poly_st, nonzero_poly_st)
def test_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(nonzero_poly_st, poly_st.filter(lambda p: p.degree >= 1))
def test_squarefree_factorization_reassembles(u, v):
    p = u * v * v
    prod = Poly([1])
    for factor, mult in squarefree_factorization(p):
        prod = prod * factor**mult
        assert poly_gcd(factor, factor.derivative()).degree == 0
    assert prod == p.monic()


def test_roots_exact_and_numeric():
    p = (ZP - I) ** 2 * (ZP + Fraction(1, 2)) * (ZP * ZP - 2)
    roots = poly_roots(p)
    exact = {(r, m) for r, m, ok in roots if ok}
    assert exact == {(I, 2), (GR(Fraction(-1, 2)), 1)}
    numeric = sorted(complex(r).real for r, m, ok in roots if not ok)
    assert numeric == pytest.approx([-2**0.5, 2**0.5], abs=1e-40)


def test_taylor_shift_matches_evaluation():
    p = P(1, -2, 0, 3)
    a = GR(Fraction(1, 3), -1)
    q = p.taylor_shift(a)
    t = GR(2, Fraction(1, 5))
    assert q(t) == p(t + a)


def test_polynomial_printing():
    assert str(P(Fraction(1, 4), 1, 1)) == "z^2 + z + 1/4"
    assert str(P(0, 0, GR(1, 1))) == "(1 + i)*z^2"
    assert str(P(0, -1)) == "-z"


# ---------------------------------------------------------------- rational functions


def test_normalize_examples():
    assert ratfunc_normalize(P(-1, 0, 1), P(-1, 1)) == R(P(1, 1))
    assert ratfunc_normalize(P(0, 2), P(2)) == z
    r = ratfunc_normalize(P(1, 0, 1), P(I, I))
    assert r.den == P(1, 1)
    assert r.num == P(1, 0, 1).scale(-I)
    for t in (GR(2), GR(0, 3), GR(Fraction(1, 2), 1), GR(-3, -1), GR(5)):
        assert r(t) == (t * t + 1) / (I * t + I)


def test_normalize_zero_denominator():
    with pytest.raises(DivisionByZero):
        ratfunc_normalize(P(1), Poly())


def test_arith_examples():
    assert ratfunc_arith(1 / z, z, "add") == R(P(1, 0, 1), P(0, 1))
    assert ratfunc_arith(1 / z, z, "mul") == R.const(1)
    lhs = ratfunc_arith(1 / (z - 1), 1 / (z - 1) ** 2, "div")
    assert lhs == z - 1
    for t in (GR(3), GR(0, 2), GR(Fraction(-1, 2))):
        assert lhs(t) == t - 1
    with pytest.raises(DivisionByZero):
        ratfunc_arith(z, R.const(0), "div")


def test_derivative_examples():
    assert derivative(z**2) == 2 * z
    assert derivative(1 / z) == -1 / z**2
    assert derivative((z + Fraction(1, 2)) ** 2) == 2 * z + 1


def test_evaluate_examples():
    assert evaluate(z**2 + 1, I) == 0
    assert evaluate(1 / z, 0) is INFINITY
    assert evaluate(z**2, None) is INFINITY
    assert evaluate(1 / z**2, None) == 0
    assert evaluate((2 * z + 1) / (z - 3), None) == 2


@settings(max_examples=50, deadline=None)
@given(rf_st, rf_st, rf_st)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.const(0)


@settings(max_examples=50, deadline=None)
@given(nonzero_rf_st)
def test_inverse(a):
    assert a * a.inverse() == R.const(1)


@settings(max_examples=50, deadline=None)
@given(rf_st, rf_st)
def test_leibniz(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@settings(max_examples=50, deadline=None)
@given(poly_st, nonzero_poly_st, nonzero_poly_st)
def test_normalize_idempotent_and_cancels(num, den, common):
    r = ratfunc_normalize(num * common, den * common)
    assert ratfunc_normalize(r.num, r.den) == r
    assert r == ratfunc_normalize(num, den)
    assert r.den.lc == 1
    if not r.is_zero():
        assert poly_gcd(r.num, r.den).degree == 0


@settings(max_examples=40, deadline=None)
@given(rf_st, st.integers(-4, 4), st.integers(-4, 4))
def test_evaluation_preserved(r, x, y):
    t = GR(x, y)
    if r.den(t).is_zero():
        return
    assert evaluate(r, t) == r.num(t) / r.den(t)


def test_canonical_string_is_parseable():
    from legendrian.parser import parse_expression

    for r in ((z**2 + 1) / z, GR(Fraction(3, 2), Fraction(1, 2)) / (z - I), -1 / z, ((1 + I) * z + 2 + I) / z):
        assert parse_expression(str(r)) == r
