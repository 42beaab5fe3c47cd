import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import nonzero_rf_st, rand_rf, rf_st, simple_pole_function, distinct_points
from legendrian.errors import Undefined
from legendrian.exact import INF_POINT, GaussianRational as GR, Poly, RationalFunction as R
from legendrian.laurent import (
    form_poles,
    laurent_expand,
    order_at,
    pole_set,
    residue_at,
    residue_sum,
    simple_pole_fast_residue,
    zero_set,
)

z = R.z()
I = GR(0, 1)


def test_order_examples():
    assert order_at(z**3, 0) == 3
    assert order_at(1 / z**2, 0) == -2
    assert order_at(z**3, INF_POINT) == -3
    assert order_at(1 / (z**2 + 1), INF_POINT) == 2
    assert order_at((z - I) ** 2 / (z + 1), I) == 2
    with pytest.raises(Undefined):
        order_at(R.const(0), 0)


def test_expansion_of_geometric_series():
    e = laurent_expand(1 / (1 - z), 0, k_max=5)
    assert e.order == 0
    assert all(e.coefficient(k) == 1 for k in range(6))
    with pytest.raises(IndexError):
        e.coefficient(6)


def test_expansion_at_infinity():
    # z/(z - 1) = 1/(1 - w) in w = 1/z
    e = laurent_expand(z / (z - 1), None, k_max=3)
    assert [e.coefficient(k) for k in range(4)] == [1, 1, 1, 1]


def test_empty_window():
    e = laurent_expand(z**4, 0, k_max=2)
    assert e.empty and not e.is_zero
    assert laurent_expand(R.const(0), 0).is_zero


def test_residue_examples():
    assert residue_at(1 / z, 0) == 1
    assert residue_at(1 / z, None) == -1
    assert residue_at(1 / z**2, 0) == 0
    assert residue_at(1 / (z**2 + 1), I) == GR(0, Fraction(-1, 2))
    assert residue_at(z, None) == 0
    # 1/(z (z - 1)) at 1 and ∞
    r = 1 / (z * (z - 1))
    assert residue_at(r, 1) == 1 and residue_at(r, 0) == -1 and residue_at(r, None) == 0


def test_numeric_pole_residue():
    r = 1 / (z**2 - 2)
    poles = [p for p, _ in form_poles(r)]
    assert all(not p.exact for p in poles)
    with mpmath.workdps(50):
        total = mpmath.fsum(residue_at(r, p) for p in poles)
        assert abs(total) < 1e-40
        for p in poles:
            assert abs(residue_at(r, p) - 1 / (2 * p.value)) < 1e-40
    assert residue_sum(r) == 0


def test_residue_matches_mpmath_contour_oracle():
    # independent oracle: numerical contour integral around each pole
    rng = random.Random(7)
    for _ in range(3):
        r = rand_rf(rng, 3)
        for p, _ in form_poles(r):
            if p.is_inf or not p.exact:
                continue
            others = [q for q, _ in form_poles(r) if q != p and not q.is_inf]
            c = complex(p.value)
            rad = 0.4 * min([abs(complex(q.value) - c) for q in others] + [1.0])
            num = lambda x: r.num.eval_mpc(x) / r.den.eval_mpc(x)  # noqa: E731
            with mpmath.workdps(30):
                val = mpmath.quad(lambda t: num(c + rad * mpmath.expj(t)) * 1j * rad * mpmath.expj(t), [0, 2 * mpmath.pi])
                val /= 2j * mpmath.pi
            assert complex(val) == pytest.approx(complex(residue_at(r, p).to_mpc()), abs=1e-15)


def test_pole_and_zero_sets():
    r = (z - 1) ** 2 / (z**3 * (z + I))
    poles = {(p.value, m) for p, m in pole_set(r)}
    assert poles == {(GR(0), 3), (-I, 1)}
    zeros = {(None if p.is_inf else p.value, m) for p, m in zero_set(r)}
    assert zeros == {(GR(1), 2), (None, 2)}
    assert (INF_POINT, 2) in pole_set(z**2)
    with pytest.raises(Undefined):
        zero_set(R.const(0))


def test_form_poles_include_infinity_for_constants():
    # dz has a double pole at ∞
    assert form_poles(R.const(1)) == [(INF_POINT, 2)]
    assert form_poles(1 / z**2) == [(form_poles(1 / z**2)[0][0], 2)]


@settings(max_examples=80, deadline=None)
@given(nonzero_rf_st)
def test_global_residue_theorem(r):
    assert residue_sum(r) == 0


@settings(max_examples=50, deadline=None)
@given(nonzero_rf_st, nonzero_rf_st, st.integers(-3, 3), st.integers(-3, 3))
def test_order_additive(a, b, x, y):
    p = GR(x, y)
    assert order_at(a * b, p) == order_at(a, p) + order_at(b, p)
    assert order_at(a * b, None) == order_at(a, None) + order_at(b, None)


@settings(max_examples=40, deadline=None)
@given(nonzero_rf_st, st.integers(-3, 3), st.integers(-3, 3))
def test_expansion_resums(r, x, y):
    # r - sum_{k <= K} c_k t^k has order > K at the centre
    a = GR(x, y)
    K = 4
    e = laurent_expand(r, a, k_max=K)
    t = z - a
    partial = R.const(0)
    for k, c in e.coeffs.items():
        partial = partial + R.const(c) * (t**k if k >= 0 else 1 / t ** (-k))
    rest = r - partial
    assert rest.is_zero() or order_at(rest, a) > K


def test_fast_residue_examples():
    h, g = 1 / z, z
    assert simple_pole_fast_residue(h, g, 0) == residue_at(h * g.derivative(), 0)
    with pytest.raises(Undefined):
        simple_pole_fast_residue(1 / z**2, z, 0)


def test_fast_residue_matches_full_product():
    rng = random.Random(3)
    for _ in range(20):
        pts = distinct_points(rng, 3)
        h = simple_pole_function(rng, pts[:2])
        g = simple_pole_function(rng, pts[1:])
        for p in pts + [INF_POINT]:
            assert simple_pole_fast_residue(h, g, p) == residue_at(h * g.derivative(), p)
