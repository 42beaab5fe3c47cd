"""Random exact data for the test suite."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from legendrian.exact import GaussianRational as GR
from legendrian.exact import Poly, RationalFunction
from legendrian.analysis import simple_pole_certificate
from legendrian.laurent import form_poles, residue_at

SMALL = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]

# ---------------------------------------------------------------- hypothesis

fractions_st = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gr_st = st.builds(GR, fractions_st, fractions_st)
nonzero_gr_st = gr_st.filter(lambda c: not c.is_zero())
poly_st = st.lists(gr_st, min_size=0, max_size=5).map(Poly)
nonzero_poly_st = poly_st.filter(lambda p: not p.is_zero())
rf_st = st.builds(RationalFunction, poly_st, nonzero_poly_st)
nonzero_rf_st = rf_st.filter(lambda r: not r.is_zero())
nonconstant_rf_st = rf_st.filter(lambda r: not r.is_constant())

# ---------------------------------------------------------------- seeded


def rand_gr(rng: random.Random, imag=True) -> GR:
    re = rng.choice(SMALL)
    im = rng.choice(SMALL) if imag and rng.random() < 0.5 else 0
    return GR(re, im)


def rand_poly(rng, max_deg=4, nonzero=False) -> Poly:
    while True:
        p = Poly([rand_gr(rng) for _ in range(rng.randint(1, max_deg + 1))])
        if not nonzero or not p.is_zero():
            return p


def rand_rf(rng, max_deg=4) -> RationalFunction:
    return RationalFunction(rand_poly(rng, max_deg), rand_poly(rng, max_deg, nonzero=True))


def rand_nonconstant(rng, max_deg=4) -> RationalFunction:
    while True:
        r = rand_rf(rng, max_deg)
        if not r.is_constant():
            return r


def rand_point(rng) -> GR:
    return GR(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4)))


def distinct_points(rng, n):
    pts = []
    while len(pts) < n:
        p = rand_point(rng)
        if p not in pts:
            pts.append(p)
    return pts


def simple_pole_function(rng, poles, at_infinity=True) -> RationalFunction:
    """``a z + b + sum c_k/(z - p_k)`` with every ``c_k`` nonzero."""
    z = RationalFunction.z()
    r = RationalFunction.const(rand_gr(rng))
    if at_infinity:
        a = GR(0)
        while a.is_zero():
            a = rand_gr(rng)
        r = r + z * a
    for p in poles:
        c = GR(0)
        while c.is_zero():
            c = rand_gr(rng)
        r = r + RationalFunction.const(c) / (z - p)
    return r


def _nullspace(rows, ncols):
    """Basis of the right nullspace of an exact matrix (Gauss-Jordan)."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if not A[i][c].is_zero()), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [GR(0)] * ncols
        v[fcol] = GR(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fcol]
        basis.append(v)
    return basis


def _combine(rng, null, basis):
    coeffs = [GR(0)] * len(basis)
    for v in null:
        w = rand_gr(rng)
        coeffs = [c + w * x for c, x in zip(coeffs, v)]
    out = RationalFunction.const(0)
    for c, b in zip(coeffs, basis):
        out = out + b * c
    return out


def exact_simple_pair(rng, n_poles=3, n_crit=1, tries=50):
    """Random ``(h, g)`` with only simple poles (including ∞) and every
    residue of ``h dg`` zero.

    ``g`` is drawn from ``span(z, 1/(z - q_k))`` subject to ``g'(c_j) = 0``
    at chosen points ``c_j``; then the residue conditions are solved for
    the coefficients of ``h`` in ``1, z, 1/(z - q_k), 1/(z - c_j)``.  A
    simple pole of ``h`` at a critical point of ``g`` costs no condition,
    so ``h`` is not forced to be ``a + b g``.
    """
    z = RationalFunction.z()
    for _ in range(tries):
        pts = distinct_points(rng, n_poles + n_crit)
        qs, cs = pts[:n_poles], pts[n_poles:]
        gbasis = [z] + [1 / (z - q) for q in qs]
        rows = [[b.derivative()(c) for b in gbasis] for c in cs]
        g = _combine(rng, _nullspace(rows, len(gbasis)), gbasis)
        if g.is_constant() or not simple_pole_certificate(g, g):
            continue
        basis = [RationalFunction.const(1), z] + [1 / (z - p) for p in qs + cs]
        dg = g.derivative()
        points = []
        for b in basis:
            for p, _ in form_poles(b * dg):
                if p not in points:
                    points.append(p)
        conds = [[residue_at(b * dg, p) for b in basis] for p in points]
        null = _nullspace(conds, len(basis))
        if not null:
            continue
        h = _combine(rng, null, basis)
        if h.is_constant():
            continue
        if simple_pole_certificate(h, g):
            return h, g
    raise RuntimeError("no exact simple-pole pair found")


# ---------------------------------------------------------------- acceptance log

ACCEPTANCE = {}  # criterion number -> (passed, detail)


def record(n: int, ok: bool, detail: str):
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok
