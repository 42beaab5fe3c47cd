"""Exact arithmetic over the Gaussian rationals Q(i).

Provides :class:`GaussianRational`, dense univariate polynomials
(:class:`Poly`), canonical rational functions (:class:`RationalFunction`)
and points of the Riemann sphere (:class:`DomainPoint`).  Everything is
immutable.  ``gmpy2.mpq`` is used for the rational parts when available,
``fractions.Fraction`` otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import mpmath

from .errors import DivisionByZero, InvalidInput

try:
    from gmpy2 import mpq as Q

    _QTYPES = (type(Q(0)), Fraction, int)
except ImportError:  # pragma: no cover - gmpy2 is normally present
    Q = Fraction
    _QTYPES = (Fraction, int)

_QT = type(Q(0))
NEG_INF = float("-inf")


def to_q(x):
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to the rational type."""
    if type(x) is _QT:
        return x
    if isinstance(x, float):
        return Q(Fraction(x))
    if isinstance(x, str):
        return Q(Fraction(x.strip()))
    return Q(x)


def _fmt_q(x) -> str:
    n, d = int(x.numerator), int(x.denominator)
    return str(n) if d == 1 else f"{n}/{d}"


class GaussianRational:
    """A number ``re + i*im`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + to_q(im)
        elif isinstance(re, complex):
            re, im = Fraction(re.real), Fraction(re.imag) + Fraction(im)
        object.__setattr__(self, "re", to_q(re))
        object.__setattr__(self, "im", to_q(im))

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _QTYPES):
                return GaussianRational._raw(self.re + other, self.im)
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _QTYPES):
                return GaussianRational._raw(self.re - other, self.im)
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, _QTYPES):
            return GaussianRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _QTYPES):
                return GaussianRational._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise DivisionByZero("division by zero Gaussian rational")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _QTYPES):
                if not other:
                    raise DivisionByZero("division by zero")
                return GaussianRational._raw(self.re / other, self.im / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, _QTYPES):
            return GaussianRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    # comparison / conversion -----------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _QTYPES):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_mpc(self):
        return mpmath.mpc(
            mpmath.mpf(int(self.re.numerator)) / int(self.re.denominator),
            mpmath.mpf(int(self.im.numerator)) / int(self.im.denominator),
        )

    def is_real(self) -> bool:
        return not self.im

    def to_strings(self) -> tuple[str, str]:
        """``("p/q", "p/q")`` serialisation of the two parts."""
        return (
            f"{int(self.re.numerator)}/{int(self.re.denominator)}",
            f"{int(self.im.numerator)}/{int(self.im.denominator)}",
        )

    @classmethod
    def from_strings(cls, pair) -> "GaussianRational":
        re, im = pair
        return cls(to_q(re), to_q(im))

    def __str__(self):
        if not self.im:
            return _fmt_q(self.re)
        im_abs = abs(self.im)
        im_txt = "i" if im_abs == 1 else f"{_fmt_q(im_abs)}*i"
        if not self.re:
            return im_txt if self.im > 0 else f"-{im_txt}"
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt_q(self.re)} {sign} {im_txt}"

    def __repr__(self):
        return f"GaussianRational({self})"


GR = GaussianRational
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------
def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense polynomial in ``z`` with Gaussian-rational coefficients.

    ``coeffs`` is lowest degree first; the zero polynomial has no
    coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim([GR.coerce(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _trim(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([ZERO] * k + [GR.coerce(c)])

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        p = Poly.const(1)
        for r in roots:
            p = p * Poly([-GR.coerce(r), ONE])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __len__(self):
        return len(self.coeffs)

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (GaussianRational, int, Fraction, _QT)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction, _QT)):
            c = GR.coerce(other)
            if c.is_zero():
                return ZERO_POLY
            return Poly._raw([a * c for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative polynomial power")
        result, base = ONE_POLY, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        return self * GR.coerce(c)

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return ZERO_POLY, self
        inv = other.lc.inverse()
        quo = [ZERO] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quo[k] = c
            if c.is_zero():
                continue
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * b[j]
        return Poly._raw(quo), Poly._raw(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InvalidInput("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = lc.inverse()
        return Poly._raw([c * inv for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly._raw([c * k for k, c in enumerate(self.coeffs) if k])

    def antiderivative(self) -> "Poly":
        return Poly._raw([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        """Horner evaluation; works for any ring element type."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return ZERO
        return acc

    def eval_mpc(self, x):
        acc = mpmath.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c.to_mpc()
        return acc

    def taylor_shift(self, a) -> "Poly":
        """Coefficients of ``p(a + t)`` as a polynomial in ``t``."""
        a = GR.coerce(a)
        out: list = []
        for c in reversed(self.coeffs):
            # out <- out*(t + a) + c
            new = [ZERO] * (len(out) + 1)
            for k, x in enumerate(out):
                new[k + 1] = new[k + 1] + x
                new[k] = new[k] + x * a
            new[0] = new[0] + c
            out = new
        return Poly._raw(out)

    def reversed(self, n=None) -> "Poly":
        """``w^n p(1/w)``; ``n`` defaults to the degree."""
        if self.is_zero():
            return self
        n = self.degree if n is None else n
        cs = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return Poly._raw(cs[::-1])

    def valuation(self) -> float:
        """Order of vanishing at ``z = 0`` (``inf`` for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return math.inf

    def to_complex(self):
        return [complex(c) for c in self.coeffs]

    # comparison / printing ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return format_poly(self, "z")

    def __repr__(self):
        return f"Poly({self})"


def format_poly(p: Poly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        if c.im == 0:
            neg = c.re < 0
            mag = GR(abs(c.re))
            body = str(mag)
            unit = mag == 1
        elif c.re == 0:
            neg = c.im < 0
            mag = GR(0, abs(c.im))
            body = str(mag)
            unit = False
        else:
            neg = False
            body = f"({c})"
            unit = False
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono:
            term = mono if unit else f"{body}*{mono}"
        else:
            term = body
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


ZERO_POLY = Poly()
ONE_POLY = Poly([1])
Z_POLY = Poly([0, 1])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise InvalidInput("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE_POLY, ZERO_POLY
    t0, t1 = ZERO_POLY, ONE_POLY
    while not r1.is_zero():
        qt, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    inv = r0.lc.inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def solve_diophantine(a: Poly, b: Poly, c: Poly):
    """Solve ``s*a + t*b = c`` for coprime ``a, b`` with ``deg s < deg b``."""
    g, s0, _ = poly_xgcd(a, b)
    if g.degree != 0:
        raise InvalidInput("solve_diophantine requires coprime inputs")
    s = (s0 * c) % b
    t = (c - s * a).exact_div(b)
    return s, t


def squarefree_factorization(p: Poly):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic factors."""
    if p.degree <= 0:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def _common_denominator(p: Poly) -> int:
    dens = [int(x.denominator) for c in p.coeffs for x in (c.re, c.im)]
    return reduce(lambda u, v: u * v // math.gcd(u, v), dens, 1)


def _numeric_roots(p: Poly, dps: int):
    """All complex roots of a squarefree polynomial via mpmath."""
    n = p.degree
    if n < 1:
        return []
    with mpmath.workdps(dps):
        coeffs = [c.to_mpc() for c in reversed(p.coeffs)]
        if n == 1:
            return [mpmath.mpc(-coeffs[1] / coeffs[0])]
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
        return [mpmath.mpc(r) for r in roots]


def _round_gauss(x) -> GaussianRational:
    return GR(int(mpmath.nint(x.real)), int(mpmath.nint(x.imag)))


def poly_roots(p: Poly):
    """Roots of ``p`` with multiplicities.

    Returns a list of ``(root, multiplicity, exact)`` where ``root`` is a
    :class:`GaussianRational` when ``exact`` and an ``mpmath.mpc`` otherwise.
    Every root lying in Q(i) is found exactly: after scaling ``p`` to
    Gaussian-integer coefficients with leading coefficient ``a``, ``a*root``
    is a Gaussian integer, recovered by rounding a numerical root and
    confirmed by exact evaluation.
    """
    out = []
    for factor, mult in squarefree_factorization(p):
        rest = factor
        L = _common_denominator(rest)
        lc = rest.lc * L
        size = max(
            max(abs(int(x.numerator)) for c in rest.coeffs for x in (c.re, c.im)), 1
        )
        dps = 30 + 2 * len(str(size * L)) + 2 * len(str(abs(int(lc.re)) + abs(int(lc.im))))
        for r in _numeric_roots(rest, dps):
            with mpmath.workdps(dps):
                guess = _round_gauss(r * lc.to_mpc())
            cand = guess / lc
            if rest(cand).is_zero():
                out.append((cand, mult, True))
                rest = rest.exact_div(Poly([-cand, ONE]))
        if rest.degree >= 1:
            for r in _numeric_roots(rest, 50):
                out.append((r, mult, False))
    return out


# ---------------------------------------------------------------------------
# points of CP^1
# ---------------------------------------------------------------------------
class _Infinity:
    """Value returned when evaluating at a pole."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITY"

    __str__ = lambda self: "∞"  # noqa: E731


INFINITY = _Infinity()


class DomainPoint:
    """A point of the Riemann sphere: finite exact, finite numeric, or ``∞``.

    Numeric points arise only as roots outside Q(i); they carry an
    ``mpmath.mpc`` value and ``exact == False``.
    """

    __slots__ = ("value", "kind")

    def __init__(self, value=None, kind=None):
        if kind is None:
            kind = "inf" if value is None else "finite"
        if kind == "finite":
            value = GR.coerce(value)
        elif kind == "numeric":
            if not isinstance(value, mpmath.mpc):
                value = mpmath.mpc(value)
        elif kind == "inf":
            value = None
        else:
            raise InvalidInput(f"unknown point kind {kind!r}")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("DomainPoint is immutable")

    @classmethod
    def finite(cls, v) -> "DomainPoint":
        return cls(v, "finite")

    @classmethod
    def numeric(cls, v) -> "DomainPoint":
        return cls(v, "numeric")

    @classmethod
    def infinity(cls) -> "DomainPoint":
        return cls(None, "inf")

    @property
    def is_inf(self) -> bool:
        return self.kind == "inf"

    @property
    def exact(self) -> bool:
        return self.kind != "numeric"

    def to_complex(self):
        if self.kind == "inf":
            return complex("inf")
        return complex(self.value)

    def __eq__(self, other):
        if not isinstance(other, DomainPoint):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __hash__(self):
        return hash((self.kind, self.value))

    def __str__(self):
        if self.kind == "inf":
            return "∞"
        if self.kind == "numeric":
            return mpmath.nstr(self.value, 15)
        return str(self.value)

    __repr__ = lambda self: f"DomainPoint({self})"  # noqa: E731


INF_POINT = DomainPoint.infinity()


def as_point(p) -> DomainPoint:
    if isinstance(p, DomainPoint):
        return p
    if p is None or p is INFINITY:
        return INF_POINT
    return DomainPoint.finite(p)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------
class RationalFunction:
    """Canonical quotient ``num/den``: coprime, ``den`` monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = ONE_POLY if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO_POLY, ONE_POLY
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc
        if lc != 1:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _canonical(cls, num: Poly, den: Poly):
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls(Poly.const(c))

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls._canonical(Z_POLY, ONE_POLY)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls.const(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise InvalidInput("not a constant function")
        return self.num.coeff(0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except (TypeError, InvalidInput):
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._canonical(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except (TypeError, InvalidInput):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction, _QT)):
            c = GR.coerce(other)
            if c.is_zero():
                return ZERO_RF
            return RationalFunction._canonical(self.num.scale(c), self.den)
        try:
            other = RationalFunction.coerce(other)
        except (TypeError, InvalidInput):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("division by the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction, _QT)):
            c = GR.coerce(other)
            if c.is_zero():
                raise DivisionByZero("division by zero constant")
            return RationalFunction._canonical(self.num.scale(c.inverse()), self.den)
        other = RationalFunction.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._canonical(self.num**k, self.den**k)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, p):
        return evaluate(self, p)

    # comparison / printing ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        try:
            other = RationalFunction.coerce(other)
        except (TypeError, InvalidInput):
            return NotImplemented
        return self == other

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == ONE_POLY:
            return str(self.num)
        num = str(self.num)
        if (" " in num or num.startswith("-")) and not _single_group(num):
            num = f"({num})"
        den = str(self.den)
        if " " in den or "*" in den or "/" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _single_group(s: str) -> bool:
    """Whether ``s`` is one parenthesised group such as ``(1 + i)``."""
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for k, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and k < len(s) - 1:
            return False
    return True


ZERO_RF = RationalFunction(ZERO_POLY)
ONE_RF = RationalFunction(ONE_POLY)


def ratfunc_normalize(num: Poly, den: Poly) -> RationalFunction:
    return RationalFunction(num, den)


def ratfunc_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise InvalidInput(f"unknown operation {op!r}")
    return ops[op]()


def derivative(r: RationalFunction) -> RationalFunction:
    return r.derivative()


def evaluate(r: RationalFunction, p):
    """Value of ``r`` at a point of CP^1; ``INFINITY`` at poles.

    Exact points give a :class:`GaussianRational`, numeric points an
    ``mpmath.mpc``.
    """
    p = as_point(p)
    if p.is_inf:
        dn, dd = r.num.degree, r.den.degree
        if r.num.is_zero() or dn < dd:
            return ZERO
        if dn > dd:
            return INFINITY
        return r.num.lc / r.den.lc
    if p.kind == "numeric":
        d = r.den.eval_mpc(p.value)
        n = r.num.eval_mpc(p.value)
        scale = max(mpmath.mpf(1), sum(abs(c.to_mpc()) for c in r.den.coeffs))
        if abs(d) < mpmath.mpf(10) ** (-(mpmath.mp.dps // 2)) * scale:
            return INFINITY
        return n / d
    d = r.den(p.value)
    if d.is_zero():
        return INFINITY
    return r.num(p.value) / d
