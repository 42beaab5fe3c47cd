"""Laurent expansions, orders and residues of rational functions on CP^1.

At a finite point ``a`` the function is expanded in ``t = z - a``; at
``∞`` in ``w = 1/z``.  Expansions at exact points are exact; at numeric
points (roots outside Q(i)) the same recurrences run in mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .errors import Undefined
from .exact import (
    INF_POINT,
    ZERO,
    DomainPoint,
    GaussianRational,
    Poly,
    RationalFunction,
    as_point,
    poly_roots,
)

NUMERIC_DPS = 50


@dataclass(frozen=True)
class LaurentExpansion:
    center: DomainPoint
    order: float  # int, or math.inf for the zero function
    coeffs: dict = field(default_factory=dict)
    k_max: int = 0
    exact: bool = True

    @property
    def is_zero(self) -> bool:
        return self.order == math.inf

    @property
    def empty(self) -> bool:
        """Window ends before the first nonzero coefficient."""
        return not self.is_zero and self.k_max < self.order

    def coefficient(self, k: int):
        if k > self.k_max:
            raise IndexError(f"coefficient {k} is beyond the window (k_max={self.k_max})")
        if k in self.coeffs:
            return self.coeffs[k]
        return ZERO if self.exact else mpmath.mpc(0)

    @property
    def residue(self):
        """Coefficient of index -1 (zero when the order exceeds -1)."""
        if self.order > -1:
            return ZERO if self.exact else mpmath.mpc(0)
        return self.coefficient(-1)


def _local_parts(r: RationalFunction, a: DomainPoint):
    """Numerator/denominator as coefficient lists in the local parameter."""
    if a.is_inf:
        dn, dd = r.num.degree, r.den.degree
        # r(1/w) = w^(dd-dn) * rev(num)/rev(den)
        return list(r.num.reversed().coeffs), list(r.den.reversed().coeffs), dd - dn
    if a.kind == "numeric":
        with mpmath.workdps(NUMERIC_DPS):
            num = _mp_taylor_shift(r.num, a.value)
            den = _mp_taylor_shift(r.den, a.value)
        return num, den, 0
    return list(r.num.taylor_shift(a.value).coeffs), list(r.den.taylor_shift(a.value).coeffs), 0


def _mp_taylor_shift(p: Poly, a):
    out: list = []
    for c in reversed(p.coeffs):
        new = [mpmath.mpc(0)] * (len(out) + 1)
        for k, x in enumerate(out):
            new[k + 1] += x
            new[k] += x * a
        new[0] += c.to_mpc()
        out = new
    return out


def _strip_zeros(cs, exact, scale):
    k = 0
    if exact:
        while k < len(cs) and cs[k].is_zero():
            k += 1
    else:
        tol = mpmath.mpf(10) ** (-(NUMERIC_DPS * 2) // 3) * scale
        while k < len(cs) and abs(cs[k]) <= tol:
            k += 1
    return k


def _series_div(num, den, n_terms, exact):
    """First ``n_terms`` coefficients of num/den as a power series (den[0] != 0)."""
    zero = ZERO if exact else mpmath.mpc(0)
    inv = den[0].inverse() if exact else 1 / den[0]
    out = []
    for k in range(n_terms):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv)
    return out


def _scale(r: RationalFunction):
    return max(mpmath.mpf(1), max((abs(c.to_mpc()) for c in r.den.coeffs), default=1))


def order_at(r: RationalFunction, a) -> int:
    """Vanishing order of ``r`` at ``a`` (negative at poles)."""
    a = as_point(a)
    if r.is_zero():
        raise Undefined("order of the zero function is undefined")
    if a.is_inf:
        return r.den.degree - r.num.degree
    num, den, shift = _local_parts(r, a)
    exact = a.exact
    s = 1 if exact else _scale(r)
    return _strip_zeros(num, exact, s) - _strip_zeros(den, exact, s) + shift


def laurent_expand(r: RationalFunction, a, k_max: int | None = None) -> LaurentExpansion:
    """Exact Laurent coefficients of ``r`` at ``a`` from its order up to ``k_max``.

    The default window is ``order + 8``.
    """
    a = as_point(a)
    exact = a.exact
    if r.is_zero():
        return LaurentExpansion(a, math.inf, {}, 0 if k_max is None else k_max, exact)
    num, den, shift = _local_parts(r, a)
    s = 1 if exact else _scale(r)
    kn = _strip_zeros(num, exact, s)
    kd = _strip_zeros(den, exact, s)
    order = kn - kd + shift
    if k_max is None:
        k_max = order + 8
    n_terms = k_max - order + 1
    coeffs = {}
    if n_terms > 0:
        if exact:
            series = _series_div(num[kn:], den[kd:], n_terms, True)
        else:
            with mpmath.workdps(NUMERIC_DPS):
                series = _series_div(num[kn:], den[kd:], n_terms, False)
        for j, c in enumerate(series):
            if (c.is_zero() if exact else c == 0):
                continue
            coeffs[order + j] = c
    return LaurentExpansion(a, order, coeffs, k_max, exact)


def residue_at(r: RationalFunction, a):
    """Residue of the 1-form ``r dz`` at ``a``.

    At ``∞`` this is the residue of ``-r(1/w)/w^2 dw`` at ``w = 0``, i.e.
    minus the coefficient of ``w^1`` in the expansion of ``r(1/w)``.
    """
    a = as_point(a)
    if r.is_zero():
        return ZERO
    if a.is_inf:
        exp = laurent_expand(r, a, k_max=1)
        if exp.order > 1:
            return ZERO
        return -exp.coefficient(1)
    exp = laurent_expand(r, a, k_max=-1)
    return exp.residue


def _roots_as_points(p: Poly):
    out = []
    for root, mult, exact in poly_roots(p):
        pt = DomainPoint.finite(root) if exact else DomainPoint.numeric(root)
        out.append((pt, mult))
    return out


def pole_set(r: RationalFunction):
    """Poles of ``r`` on CP^1 as ``(DomainPoint, multiplicity)`` pairs.

    Poles in Q(i) are located exactly; others are numeric points.
    """
    out = _roots_as_points(r.den)
    if not r.is_zero() and r.num.degree > r.den.degree:
        out.append((INF_POINT, r.num.degree - r.den.degree))
    return out


def zero_set(r: RationalFunction):
    """Zeros of ``r`` on CP^1 with multiplicities (same conventions as pole_set)."""
    if r.is_zero():
        raise Undefined("the zero function vanishes everywhere")
    out = _roots_as_points(r.num)
    if r.den.degree > r.num.degree:
        out.append((INF_POINT, r.den.degree - r.num.degree))
    return out


def form_poles(r: RationalFunction):
    """Poles of the 1-form ``r dz`` (``∞`` included whenever ``r dz`` is singular there)."""
    out = _roots_as_points(r.den)
    if not r.is_zero():
        k = order_at(r, INF_POINT) - 2  # dz = -dw/w^2
        if k < 0:
            out.append((INF_POINT, -k))
    return out


def residue_sum(r: RationalFunction):
    """Sum of residues of ``r dz`` over all its poles on CP^1, exactly.

    Poles in Q(i) are summed one by one.  The poles outside Q(i) are the
    roots of an exact factor ``N`` of the denominator; splitting off
    ``P/N`` by partial fractions, their residues add up to
    ``coeff(P, deg N - 1) / lc(N)`` without locating them.
    """
    from .exact import poly_xgcd

    if r.is_zero():
        return ZERO
    total = ZERO
    E = Poly([1])
    for p, mult in _roots_as_points(r.den):
        if p.exact:
            total = total + residue_at(r, p)
            E = E * Poly([-p.value, 1]) ** mult
    N = r.den.exact_div(E)
    if N.degree > 0:
        # 1 = s E + t N, so num/(E N) = num s / N + num t / E
        _, s, _ = poly_xgcd(E, N)
        P = (r.num * s).divmod(N)[1]
        total = total + P.coeff(N.degree - 1) / N.lc
    inf = INF_POINT
    if any(q.is_inf for q, _ in form_poles(r)):
        total = total + residue_at(r, inf)
    return total


def simple_pole_fast_residue(h: RationalFunction, g: RationalFunction, a):
    """``c_-1(h)c_1(g) - c_-1(g)c_1(h)`` at ``a``: the residue of ``h dg``
    when ``a`` is at most a simple pole of both functions."""
    a = as_point(a)
    eh = laurent_expand(h, a, k_max=1)
    eg = laurent_expand(g, a, k_max=1)
    if eh.order < -1 or eg.order < -1:
        raise Undefined("fast path requires at most simple poles")
    # residues of 1-forms are chart independent, so at ∞ the w-expansions serve
    return eh.coefficient(-1) * eg.coefficient(1) - eg.coefficient(-1) * eh.coefficient(1)
