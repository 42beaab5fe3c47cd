"""Legendrian curves CP^1 -> CP^3 built from rational data.

``bryant_curve(f, g)`` is ``[dg : f dg - g df/2 : g dg : df/2]``,
``f_curve(h, g, c)`` is ``[1 : hg/2 - (∫h dg + c) : g : -h/2]`` and
``exceptional_line(a, b)`` is ``[1 : a + bt : b : -t]``.  Curves are
stored as coprime polynomial 4-tuples scaled so that the first nonzero
component is monic; structural equality is then projective equality.
"""

from __future__ import annotations

from functools import reduce

import mpmath

from .errors import (
    ConstantG,
    DegenerateCurve,
    ExactnessViolation,
    InvalidInput,
    NotRepresentable,
)
from .exact import (
    HALF,
    INF_POINT,
    ONE_POLY,
    ZERO,
    GaussianRational,
    Poly,
    RationalFunction,
    as_point,
    poly_gcd,
    solve_diophantine,
    squarefree_factorization,
)
from .laurent import form_poles, residue_at


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class ProjectiveCurve:
    """A holomorphic map CP^1 -> CP^3 in homogeneous polynomial coordinates."""

    __slots__ = ("components", "provenance")

    def __init__(self, components, provenance=None):
        comps = [c if isinstance(c, Poly) else Poly.const(c) for c in components]
        if len(comps) != 4:
            raise InvalidInput("a curve in CP^3 needs four components")
        nonzero = [c for c in comps if not c.is_zero()]
        if not nonzero:
            raise DegenerateCurve("all four components vanish identically")
        g = reduce(lambda a, b: a if a.degree == 0 else poly_gcd(a, b), nonzero[1:], nonzero[0].monic())
        if g.degree > 0:
            comps = [c // g for c in comps]
        lead = next(c for c in comps if not c.is_zero()).lc
        if lead != 1:
            inv = lead.inverse()
            comps = [c.scale(inv) for c in comps]
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "provenance", dict(provenance or {"kind": "raw"}))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveCurve is immutable")

    @classmethod
    def from_rational(cls, funcs, provenance=None) -> "ProjectiveCurve":
        funcs = [RationalFunction.coerce(f) for f in funcs]
        L = reduce(_poly_lcm, (f.den for f in funcs), ONE_POLY)
        comps = [f.num * L.exact_div(f.den) for f in funcs]
        return cls(comps, provenance)

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components if not c.is_zero())

    def is_constant(self) -> bool:
        return self.degree == 0

    def __eq__(self, other):
        if not isinstance(other, ProjectiveCurve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.components) + "]"

    def __repr__(self):
        return f"ProjectiveCurve({self})"

    def local_components(self, p):
        """Components as polynomials in the local parameter at ``p``
        (``w = 1/z`` at ``∞``), before clearing common powers."""
        p = as_point(p)
        if p.is_inf:
            D = self.degree
            return tuple(c.reversed(D) if not c.is_zero() else c for c in self.components)
        return tuple(c.taylor_shift(p.value) for c in self.components)

    def evaluate(self, p):
        """Projective value at ``p``, normalised so the first nonzero entry is 1."""
        p = as_point(p)
        if p.kind == "numeric":
            with mpmath.workdps(50):
                vals = [c.eval_mpc(p.value) for c in self.components]
                k = max(range(4), key=lambda j: abs(vals[j]))
                return tuple(v / vals[k] for v in vals)
        if p.is_inf:
            D = self.degree
            vals = [c.coeff(D) for c in self.components]
        else:
            vals = [c(p.value) if not c.is_zero() else ZERO for c in self.components]
        lead = next(v for v in vals if not v.is_zero())
        return tuple(v / lead for v in vals)

    def rational_components(self):
        return tuple(RationalFunction(c) for c in self.components)

    def swap_coordinates(self) -> "ProjectiveCurve":
        """``(z0, z1, z2, z3) -> (z0, z1, -z3, z2)``, a contact-preserving change."""
        z0, z1, z2, z3 = self.components
        return ProjectiveCurve((z0, z1, -z3, z2), {"kind": "swap", "source": self.provenance})

    def defining_tuple(self):
        """The meromorphic 4-tuple the curve was built from, before clearing."""
        kind = self.provenance.get("kind")
        data = self.provenance.get("data", {})
        if kind == "bryant":
            f, g = data["f"], data["g"]
            return bryant_tuple(f, g)
        if kind == "fcurve":
            h, g, c = data["h"], data["g"], data["c"]
            P = rational_primitive(h * g.derivative())
            return (RationalFunction.const(1), h * g * HALF - P - c, g, -(h * HALF))
        return self.rational_components()


def bryant_tuple(f: RationalFunction, g: RationalFunction):
    dg, df = g.derivative(), f.derivative()
    return (dg, f * dg - g * df * HALF, g * dg, df * HALF)


def bryant_curve(f, g) -> ProjectiveCurve:
    """Bryant's Legendrian curve of ``(f, g)``; ``g`` must be nonconstant."""
    f, g = RationalFunction.coerce(f), RationalFunction.coerce(g)
    if g.is_constant():
        raise ConstantG("g must be nonconstant")
    a, b = f.num, f.den
    c, d = g.num, g.den
    ng = c.derivative() * d - c * d.derivative()
    nf = a.derivative() * b - a * b.derivative()
    # (dg, f dg - g df/2, g dg, df/2) multiplied by b^2 d^3
    bd = b * d
    comps = (
        ng * b * bd,
        a * ng * bd - (c * nf * d * d).scale(HALF),
        c * ng * b * b,
        (nf * d * d * d).scale(HALF),
    )
    prov = {"kind": "bryant", "data": {"f": f, "g": g}}
    return ProjectiveCurve(comps, prov)


def hermite_reduce(num: Poly, den: Poly):
    """Hermite reduction of a proper fraction ``num/den``.

    Returns ``(g, a, d)`` with ``num/den = g' + a/d``, ``d`` squarefree and
    ``deg a < deg d``.
    """
    g = RationalFunction.const(0)
    A, D = num, den.monic()
    num_scale = den.lc.inverse()
    A = A.scale(num_scale)
    factors = squarefree_factorization(D)
    for V, i in factors:
        if i < 2:
            continue
        U = D.exact_div(V**i)
        for j in range(i - 1, 0, -1):
            # B*U*V' + C*V = -A/j
            B, C = solve_diophantine(U * V.derivative(), V, A.scale(GaussianRational(-1) / j))
            g = g + RationalFunction(B, V**j)
            A = C.scale(-j) - U * B.derivative()
        D = U * V
    return g, A, D


def rational_primitive(r) -> RationalFunction:
    """Rational ``F`` with ``F' = r`` whose polynomial part has zero constant term.

    Raises :class:`ExactnessViolation` listing every pole of ``r dz`` with a
    nonzero residue when no rational primitive exists.
    """
    r = RationalFunction.coerce(r)
    if r.is_zero():
        return r
    q, rem = r.num.divmod(r.den)
    F = RationalFunction(q.antiderivative())
    if rem.is_zero():
        return F
    g, A, D = hermite_reduce(rem, r.den)
    extra, A = A.divmod(D)
    if not A.is_zero():
        offenders = []
        for p, _ in form_poles(r):
            res = residue_at(r, p)
            if isinstance(res, GaussianRational):
                bad = not res.is_zero()
            else:
                bad = abs(res) > mpmath.mpf(10) ** -30
            if bad:
                offenders.append((p, res))
        raise ExactnessViolation(offenders)
    # the Hermite part is proper, so the constant term stays zero
    return F + g + RationalFunction(extra.antiderivative())


def f_curve(h, g, c=0) -> ProjectiveCurve:
    """The Legendrian curve ``[1 : hg/2 - (∫h dg + c) : g : -h/2]``."""
    h, g = RationalFunction.coerce(h), RationalFunction.coerce(g)
    c = GaussianRational.coerce(c)
    P = rational_primitive(h * g.derivative())
    funcs = (RationalFunction.const(1), h * g * HALF - P - c, g, -(h * HALF))
    prov = {"kind": "fcurve", "data": {"h": h, "g": g, "c": c}}
    return ProjectiveCurve.from_rational(funcs, prov)


def compare_forms(h, g, c=0):
    """``f = -(∫h dg + c)`` together with whether ``B(f, g) == F(h, g, c)``
    and ``-f'/g' == h`` both hold exactly."""
    h, g = RationalFunction.coerce(h), RationalFunction.coerce(g)
    c = GaussianRational.coerce(c)
    f = -(rational_primitive(h * g.derivative()) + c)
    same_curve = bryant_curve(f, g) == f_curve(h, g, c)
    same_h = -(f.derivative() / g.derivative()) == h
    return f, same_curve and same_h


def exceptional_line(a, b) -> ProjectiveCurve:
    """The Legendrian line ``[1 : a + bt : b : -t]``."""
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    comps = (Poly([1]), Poly([a, b]), Poly([b]), Poly([0, -1]))
    return ProjectiveCurve(comps, {"kind": "exceptional", "data": {"a": a, "b": b}})


def invert_bryant(C: ProjectiveCurve):
    """Recover ``(f, g)`` with ``C = B(f, g)`` via ``g = z2/z0`` and
    ``f = (z0 z1 + z2 z3)/z0^2``."""
    z0, z1, z2, z3 = C.components
    if z0.is_zero():
        raise DegenerateCurve("curve lies in the hyperplane z0 = 0")
    g = RationalFunction(z2, z0)
    if g.is_constant():
        raise NotRepresentable("z2/z0 is constant: not of the form B(f, g)")
    f = RationalFunction(z0 * z1 + z2 * z3, z0 * z0)
    return f, g


__all__ = [
    "ProjectiveCurve",
    "bryant_curve",
    "bryant_tuple",
    "compare_forms",
    "exceptional_line",
    "f_curve",
    "hermite_reduce",
    "invert_bryant",
    "rational_primitive",
    "INF_POINT",
]
