import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import exact_simple_pair, nonconstant_rf_st, rand_nonconstant, rand_poly, rand_rf, rf_st
from legendrian.analysis import (
    analyze,
    base_points,
    chart_orders,
    component_orders,
    exactness_check,
    hg_immersion_check,
    hg_immersion_failures,
    immersion_failures,
    is_immersed_at,
    raw_orders,
    simple_pole_certificate,
    wronskian_gcd,
)
from legendrian.curves import ProjectiveCurve, bryant_curve, f_curve
from legendrian.errors import HypothesisViolation, Undefined
from legendrian.exact import INF_POINT, GaussianRational as GR, Poly, RationalFunction as R, as_point

z = R.z()


def P(*cs):
    return Poly(list(cs))


def xpow(k):
    return z**k if k >= 0 else 1 / z ** (-k)


def test_raw_and_component_orders():
    assert raw_orders((z, 1 / z, R.const(0)), 0) == [1, -1, math.inf]
    C = ProjectiveCurve([P(0, 0, 1), P(0, 0, 0, 1), P(0, 0, 1, 1), Poly()])
    assert component_orders(C, 0) == [0, 1, 0, math.inf]


def monomial_row(a, b):
    """Orders of B(x^a, x^b) at 0 from the closed form ``[b-1 : c : 2b-1 : a-1]``,
    with ``c = a + b - 1`` unless ``a = 2b`` cancels the leading term."""
    z3 = math.inf if a == 0 else a - 1
    z1 = math.inf if a == 2 * b else a + b - 1
    row = [b - 1, z1, 2 * b - 1, z3]
    m = min(row)
    return [o - m for o in row]


@pytest.mark.parametrize(
    "a,b",
    [(0, 1), (2, 1), (3, 1), (0, -1), (-2, -1), (4, -1), (1, 3), (3, 4), (4, 2), (1, 2), (5, 2)],
)
def test_monomial_order_table(a, b):
    C = bryant_curve(xpow(a), xpow(b))
    assert component_orders(C, 0) == monomial_row(a, b)


@pytest.mark.parametrize(
    "a,b,immersed",
    [(0, 1, True), (2, 1, True), (3, 1, True), (0, -1, True), (-2, -1, True), (4, -1, True),
     (1, 3, False), (3, 4, True), (4, 2, False), (1, 2, True)],
)
def test_monomial_immersion(a, b, immersed):
    C = bryant_curve(xpow(a), xpow(b))
    assert is_immersed_at(C, 0) is immersed
    # cross-check with the Wronskian-minor gcd
    assert (as_point(0) in immersion_failures(C)) is (not immersed)


def test_is_immersed_constant_curve():
    with pytest.raises(Undefined):
        is_immersed_at(ProjectiveCurve([P(1), P(2), P(3), P(4)]), 0)


def test_chart_orders_example():
    C = ProjectiveCurve([P(1), P(0, 0, 1), P(0, 0, 0, 1), Poly()])
    assert chart_orders(C, 0) == [None, 2, 3, math.inf]
    assert not is_immersed_at(C, 0)
    assert wronskian_gcd(C) == P(0, 1)  # the minor 1 (z^2)' - z^2 (1)' = 2z


def test_base_points_examples():
    pts = dict((p.value if not p.is_inf else None, m) for p, m in base_points((z**2, z**3, 1 / z)))
    assert pts == {GR(0): -1, None: -3}


def test_analyze_pole_of_data():
    rep = analyze(bryant_curve(1 / z, z))
    assert rep.immersed
    zero = as_point(0)
    assert rep.intersection_multiplicity[zero] == 2
    assert rep.transverse_to_H[zero] is False
    rep2 = analyze(bryant_curve(1 / z**2, z))
    assert rep2.intersection_multiplicity[zero] == 3
    assert rep2.transverse_to_H[zero] is False
    assert rep.to_json()["immersed"] is True


def test_analyze_fcurve_transverse_at_pole():
    # F(1/z, 1/z) = [z : 0 : 1 : -1/2] meets H transversally at the pole
    rep = analyze(f_curve(1 / z, 1 / z))
    zero = as_point(0)
    assert rep.transverse_to_H[zero] is True


def test_analyze_contained_in_H():
    rep = analyze(ProjectiveCurve([Poly(), P(1), P(0, 1), P(0, 0, 1)]))
    assert rep.contained_in_H


@settings(max_examples=25, deadline=None)
@given(rf_st, nonconstant_rf_st)
def test_analyze_invariant_under_polynomial_rescaling(f, g):
    C = bryant_curve(f, g)
    rng = random.Random(hash(str(C)) & 0xFFFF)
    q = rand_poly(rng, 2, nonzero=True)
    D = ProjectiveCurve([c * q for c in C.components], C.provenance)
    assert D == C
    assert analyze(D).to_json() == analyze(C).to_json()


@settings(max_examples=30, deadline=None)
@given(rf_st, nonconstant_rf_st)
def test_wronskian_roots_are_non_immersed(f, g):
    C = bryant_curve(f, g)
    fails = immersion_failures(C)
    for p in fails:
        if p.exact:
            assert not is_immersed_at(C, p)
    # poles of g are immersed points of a Bryant curve
    for p, m in analyze(C).poles_of_data.get("g", []):
        if m == 1 and p.exact:
            assert is_immersed_at(C, p)


# ---------------------------------------------------------------- (h, g) data


def test_exactness_examples():
    rep = exactness_check(1 / z, z)
    assert not rep.passed
    assert sorted(str(r) for _, r in rep.failures) == ["-1", "1"]
    assert all(e.agrees for e in rep.entries if e.fast_path is not None)
    assert exactness_check(z + 1 / z, z + 1 / z).passed


def test_simple_pole_certificate():
    assert simple_pole_certificate(z + 1 / z, 1 / (z - 1))
    assert not simple_pole_certificate(1 / z**2, z)
    with pytest.raises(HypothesisViolation):
        hg_immersion_failures(1 / z**2, z)


def test_hg_immersion_designed_pair():
    g = z + 1 / z
    fails = hg_immersion_failures(g, g)
    assert sorted(str(p) for p in fails) == ["-1", "1"]
    C = f_curve(g, g)
    assert sorted(str(p) for p in immersion_failures(C)) == ["-1", "1"]
    assert hg_immersion_check(z, 1 / z)


def test_hg_immersion_matches_fcurve_pointwise():
    rng = random.Random(12)
    for _ in range(6):
        h, g = exact_simple_pair(rng)
        C = f_curve(h, g)
        bad = set(map(str, hg_immersion_failures(h, g)))
        assert bad == set(map(str, immersion_failures(C)))
        assert hg_immersion_check(h, g) == analyze(C).immersed


def test_fast_path_agrees_on_random_simple_pairs():
    rng = random.Random(13)
    for _ in range(6):
        h, g = exact_simple_pair(rng)
        rep = exactness_check(h, g)
        assert rep.passed
        assert all(e.agrees for e in rep.entries if e.fast_path is not None)
