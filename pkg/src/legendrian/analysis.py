"""Orders, immersion and transversality diagnostics for Legendrian curves."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import mpmath

from .errors import HypothesisViolation, InvalidInput, Undefined
from .exact import (
    INF_POINT,
    GaussianRational,
    Poly,
    RationalFunction,
    as_point,
    evaluate,
    poly_gcd,
)
from .laurent import (
    _roots_as_points,
    form_poles,
    laurent_expand,
    order_at,
    pole_set,
    residue_at,
    simple_pole_fast_residue,
)

NUMERIC_TOL = mpmath.mpf("1e-10")


def _is_zero(x) -> bool:
    if isinstance(x, GaussianRational):
        return x.is_zero()
    return abs(x) <= NUMERIC_TOL


def raw_orders(funcs, p):
    """Orders at ``p`` of a tuple of meromorphic functions (``inf`` for zero entries)."""
    p = as_point(p)
    return [math.inf if f.is_zero() else order_at(f, p) for f in funcs]


def component_orders(C, p):
    """Orders of the four components at ``p`` after dividing out the
    common power of the local parameter; the minimum is 0."""
    orders = raw_orders(C.rational_components(), p)
    m = min(orders)
    return [o - m for o in orders]


def is_immersed_at(C, p) -> bool:
    """Order-gap test in the affine chart of a minimal-order component.

    With ``k`` of minimal order, the chart coordinates ``C_j/C_k`` are
    regular at ``p``; the curve is immersed there iff one of them, minus its
    value at ``p``, vanishes to order exactly 1.  For monomial data this is
    the rule that some component has order ``min + 1``.
    """
    if C.is_constant():
        raise Undefined("immersion is undefined for a constant curve")
    p = as_point(p)
    orders = component_orders(C, p)
    k = orders.index(0)
    base = C.components[k]
    for j, comp in enumerate(C.components):
        if j == k or comp.is_zero():
            continue
        ratio = RationalFunction(comp, base)
        exp = laurent_expand(ratio, p, k_max=1)
        if exp.order <= 1 and not _is_zero(exp.coefficient(1)):
            return True
    return False


def chart_orders(C, p):
    """Vanishing orders of the centred chart coordinates ``C_j/C_k - value``."""
    p = as_point(p)
    orders = component_orders(C, p)
    k = orders.index(0)
    out = []
    for j, comp in enumerate(C.components):
        if j == k:
            out.append(None)
            continue
        if comp.is_zero():
            out.append(math.inf)
            continue
        exp = laurent_expand(RationalFunction(comp, C.components[k]), p, k_max=12)
        nz = [m for m, c in exp.coeffs.items() if m >= 1 and not _is_zero(c)]
        out.append(min(nz) if nz else math.inf)
    return out


def wronskian_gcd(C) -> Poly:
    """gcd of the 2x2 minors ``C_i C_j' - C_j C_i'``; its roots are the
    finite points where the curve fails to be immersed."""
    comps = C.components
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            m = comps[i] * comps[j].derivative() - comps[j] * comps[i].derivative()
            if not m.is_zero():
                minors.append(m)
    if not minors:
        raise Undefined("constant curve")
    return reduce(poly_gcd, minors[1:], minors[0].monic())


def immersion_failures(C):
    """All points of CP^1 where the curve is not immersed."""
    if C.is_constant():
        raise Undefined("immersion is undefined for a constant curve")
    pts = [p for p, _ in _roots_as_points(wronskian_gcd(C))]
    if not is_immersed_at(C, INF_POINT):
        pts.append(INF_POINT)
    return pts


def base_points(funcs):
    """Points where the defining meromorphic tuple must be rescaled before
    evaluation, with the power of the local parameter divided out there
    (positive: common zero, negative: pole)."""
    funcs = [RationalFunction.coerce(f) for f in funcs]
    nonzero = [f for f in funcs if not f.is_zero()]
    if not nonzero:
        raise InvalidInput("all functions vanish")
    candidates = []
    nums = reduce(poly_gcd, [f.num for f in nonzero[1:]], nonzero[0].num.monic())
    for p, _ in _roots_as_points(nums):
        candidates.append(p)
    for f in nonzero:
        for p, _ in _roots_as_points(f.den):
            if p not in candidates:
                candidates.append(p)
    candidates.append(INF_POINT)
    out = []
    for p in candidates:
        m = min(raw_orders(nonzero, p))
        if m != 0:
            out.append((p, m))
    return out


@dataclass
class CurveAnalysisReport:
    base_points: list = field(default_factory=list)
    orders: dict = field(default_factory=dict)
    immersion_failures: list = field(default_factory=list)
    poles_of_data: dict = field(default_factory=dict)
    transverse_to_H: dict = field(default_factory=dict)
    intersection_multiplicity: dict = field(default_factory=dict)
    exact_points: dict = field(default_factory=dict)
    contained_in_H: bool = False

    @property
    def immersed(self) -> bool:
        return not self.immersion_failures

    def to_json(self) -> dict:
        def key(p):
            return str(p)

        def order_list(os):
            return [None if o == math.inf else o for o in os]

        return {
            "base_points": [[key(p), m] for p, m in self.base_points],
            "orders": {key(p): order_list(o) for p, o in self.orders.items()},
            "immersion_failures": [key(p) for p in self.immersion_failures],
            "immersed": self.immersed,
            "poles_of_data": {
                name: [[key(p), m] for p, m in poles] for name, poles in self.poles_of_data.items()
            },
            "transverse_to_H": {key(p): v for p, v in self.transverse_to_H.items()},
            "intersection_multiplicity": {
                key(p): m for p, m in self.intersection_multiplicity.items()
            },
            "contained_in_H": self.contained_in_H,
            "exact_points": {key(p): v for p, v in self.exact_points.items()},
        }


def analyze(C) -> CurveAnalysisReport:
    rep = CurveAnalysisReport()
    rep.base_points = base_points(C.defining_tuple())
    data = C.provenance.get("data", {})
    for name in ("f", "g", "h"):
        if name in data and isinstance(data[name], RationalFunction):
            rep.poles_of_data[name] = pole_set(data[name])
    if not C.is_constant():
        rep.immersion_failures = immersion_failures(C)

    z0 = C.components[0]
    if z0.is_zero():
        rep.contained_in_H = True
    else:
        hits = [p for p, _ in _roots_as_points(z0)]
        if z0.degree < C.degree:
            hits.append(INF_POINT)
        for p in hits:
            mult = component_orders(C, p)[0]
            rep.intersection_multiplicity[p] = mult
            rep.transverse_to_H[p] = mult == 1

    interesting = [p for p, _ in rep.base_points]
    for poles in rep.poles_of_data.values():
        interesting += [p for p, _ in poles]
    interesting += list(rep.transverse_to_H) + list(rep.immersion_failures)
    for p in interesting:
        if p not in rep.orders:
            rep.orders[p] = component_orders(C, p)
            rep.exact_points[p] = p.exact
    return rep


@dataclass
class ExactnessEntry:
    point: object
    residue: object
    fast_path: object = None  # c_-1(h)c_1(g) - c_-1(g)c_1(h) when it applies
    agrees: bool | None = None


@dataclass
class ExactnessReport:
    entries: list

    @property
    def passed(self) -> bool:
        return all(_is_zero(e.residue) for e in self.entries)

    @property
    def failures(self):
        return [(e.point, e.residue) for e in self.entries if not _is_zero(e.residue)]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "residues": [
                {
                    "pole": str(e.point),
                    "residue": str(e.residue),
                    "fast_path": None if e.fast_path is None else str(e.fast_path),
                    "agrees": e.agrees,
                }
                for e in self.entries
            ],
        }


def exactness_check(h, g) -> ExactnessReport:
    """Residues of ``h dg`` at every pole; the fast two-term formula is
    evaluated and compared wherever both functions have at most simple poles."""
    h, g = RationalFunction.coerce(h), RationalFunction.coerce(g)
    form = h * g.derivative()
    entries = []
    for p, _ in form_poles(form):
        res = residue_at(form, p)
        fast = agrees = None
        oh = math.inf if h.is_zero() else order_at(h, p)
        og = math.inf if g.is_zero() else order_at(g, p)
        if oh >= -1 and og >= -1 and (oh == -1 or og == -1):
            fast = simple_pole_fast_residue(h, g, p)
            if isinstance(res, GaussianRational) and isinstance(fast, GaussianRational):
                agrees = res == fast
            else:
                agrees = abs(complex(res) - complex(fast)) < 1e-12
        entries.append(ExactnessEntry(p, res, fast, agrees))
    return ExactnessReport(entries)


def simple_pole_certificate(f, g) -> bool:
    """True iff every pole of both functions on CP^1 is simple."""
    return all(m == 1 for r in (f, g) for _, m in pole_set(RationalFunction.coerce(r)))


def hg_immersion_failures(h, g):
    """Points where ``(h, g)`` fails to be an immersion into (CP^1)^2.

    Requires simple poles only.  Off the poles this is the common zero set
    of ``h'`` and ``g'``; at a simple pole ``1/h`` or ``1/g`` has order 1,
    so the pair is immersive there.
    """
    h, g = RationalFunction.coerce(h), RationalFunction.coerce(g)
    if not simple_pole_certificate(h, g):
        raise HypothesisViolation("h and g must have only simple poles")
    dh, dg = h.derivative(), g.derivative()
    if dh.is_zero() and dg.is_zero():
        raise Undefined("(h, g) is constant")
    polys = [d.num for d in (dh, dg) if not d.is_zero()]
    common = reduce(poly_gcd, polys[1:], polys[0].monic())
    failures = [p for p, _ in _roots_as_points(common)]
    poles = {p for r in (h, g) for p, _ in pole_set(r)}
    for p in poles:
        # simple pole: the reciprocal is a local coordinate
        r = h if order_at(h, p) == -1 else g
        if order_at(r.inverse(), p) != 1:
            failures.append(p)
    if INF_POINT not in poles:
        ords = []
        for r in (h, g):
            val = evaluate(r, INF_POINT)
            shifted = r - val
            ords.append(math.inf if shifted.is_zero() else order_at(shifted, INF_POINT))
        if min(ords) != 1:
            failures.append(INF_POINT)
    return failures


def hg_immersion_check(h, g) -> bool:
    return not hg_immersion_failures(h, g)
