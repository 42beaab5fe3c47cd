"""Quaternions, the twistor projection CP^3 -> S^4 and its fibres.

A quaternion is written ``x + iy + ju + kv = z + jw`` with ``z = x + iy``
and ``w = u - iv``.  Quaternionic scalars act on the right, so a point
``[z0:z1:z2:z3]`` determines the quaternionic line through
``(q1, q2) = (z0 + j z1, z2 + j z3)``; its chart value is ``q = q2 q1^-1``
and the sphere point is the inverse stereographic image
``(2q, |q|^2 - 1)/(1 + |q|^2)``, with ``q = 0`` at the south pole.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import InvalidInput
from .exact import GaussianRational


def _re_im(c):
    if isinstance(c, GaussianRational):
        return c.re, c.im
    if isinstance(c, mpmath.mpc):
        return c.real, c.imag
    c = complex(c)
    return c.real, c.imag


class Quaternion:
    """``x + iy + ju + kv`` over any real scalar type (mpq, float, mpf)."""

    __slots__ = ("x", "y", "u", "v")

    def __init__(self, x, y=0, u=0, v=0):
        self.x, self.y, self.u, self.v = x, y, u, v

    def __mul__(self, o):
        if not isinstance(o, Quaternion):
            return Quaternion(self.x * o, self.y * o, self.u * o, self.v * o)
        a1, b1, c1, d1 = self.x, self.y, self.u, self.v
        a2, b2, c2, d2 = o.x, o.y, o.u, o.v
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, s):
        return Quaternion(s * self.x, s * self.y, s * self.u, s * self.v)

    def __add__(self, o):
        return Quaternion(self.x + o.x, self.y + o.y, self.u + o.u, self.v + o.v)

    def __sub__(self, o):
        return Quaternion(self.x - o.x, self.y - o.y, self.u - o.u, self.v - o.v)

    def __neg__(self):
        return Quaternion(-self.x, -self.y, -self.u, -self.v)

    def __eq__(self, o):
        return isinstance(o, Quaternion) and self.components() == o.components()

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return f"Quaternion({self.x}, {self.y}, {self.u}, {self.v})"

    def components(self):
        return (self.x, self.y, self.u, self.v)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x, -self.y, -self.u, -self.v)

    def norm2(self):
        return self.x * self.x + self.y * self.y + self.u * self.u + self.v * self.v

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if n == 0:
            raise InvalidInput("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(c.x / n, c.y / n, c.u / n, c.v / n)

    def to_pair(self):
        """``(z, w)`` with ``self = z + j w``; components stay in their scalar type."""
        return (self.x, self.y), (self.u, -self.v)


def quat_from_pair(z, w) -> Quaternion:
    """``z + j w`` for complex (or Gaussian rational) ``z`` and ``w``."""
    zr, zi = _re_im(z)
    wr, wi = _re_im(w)
    return Quaternion(zr, zi, wr, -wi)


def pair_from_quat(q: Quaternion):
    """Inverse of :func:`quat_from_pair` as Python/mpmath complex numbers or
    Gaussian rationals, matching the scalar type."""
    (zr, zi), (wr, wi) = q.to_pair()
    vals = (zr, zi, wr, wi)
    if any(isinstance(c, mpmath.mpf) for c in vals):
        return mpmath.mpc(zr, zi), mpmath.mpc(wr, wi)
    if any(isinstance(c, float) for c in vals):
        return complex(zr, zi), complex(wr, wi)
    return GaussianRational(zr, zi), GaussianRational(wr, wi)


SOUTH = (0.0, 0.0, 0.0, 0.0, -1.0)
NORTH = (0.0, 0.0, 0.0, 0.0, 1.0)


def twistor_project(p):
    """``π([z0:z1:z2:z3])`` as a 5-tuple on the unit sphere.

    Exact inputs (Gaussian rationals) give exact rational coordinates;
    complex inputs give floats and mpc inputs give mpf.  The formula
    ``(2 q2 conj(q1), |q2|^2 - |q1|^2)/(|q1|^2 + |q2|^2)`` equals the chart
    expression for ``q = q2 q1^-1`` and stays valid at ``q1 = 0``.
    """
    if len(p) != 4:
        raise InvalidInput("a point of CP^3 has four coordinates")
    q1 = quat_from_pair(p[0], p[1])
    q2 = quat_from_pair(p[2], p[3])
    n1, n2 = q1.norm2(), q2.norm2()
    tot = n1 + n2
    if tot == 0:
        raise InvalidInput("[0:0:0:0] is not a point of CP^3")
    m = q2 * q1.conjugate()
    return tuple(2 * c / tot for c in m.components()) + ((n2 - n1) / tot,)


def chart_value(p, chart: int = 1):
    """``q2 q1^-1`` (chart 1) or ``q1 q2^-1`` (chart 2)."""
    q1 = quat_from_pair(p[0], p[1])
    q2 = quat_from_pair(p[2], p[3])
    return q2 * q1.inverse() if chart == 1 else q1 * q2.inverse()


def inverse_stereographic(q: Quaternion):
    n = q.norm2()
    return tuple(2 * c / (1 + n) for c in q.components()) + ((n - 1) / (1 + n),)


def project_array(Z: np.ndarray) -> np.ndarray:
    """Vectorised projection of lifts ``Z[..., 4]`` (complex) to ``S^4``.

    Uses the complex-pair form of ``q2 conj(q1)``:
    ``(z2 conj(z0) + conj(z3) z1) + j(z3 conj(z0) - conj(z2) z1)``.
    """
    Z = np.asarray(Z)
    z0, z1, z2, z3 = (Z[..., k] for k in range(4))
    P = z2 * np.conj(z0) + np.conj(z3) * z1
    W = z3 * np.conj(z0) - np.conj(z2) * z1
    n1 = np.abs(z0) ** 2 + np.abs(z1) ** 2
    n2 = np.abs(z2) ** 2 + np.abs(z3) ** 2
    tot = n1 + n2
    out = np.empty(Z.shape[:-1] + (5,), dtype=float)
    out[..., 0] = 2 * P.real / tot
    out[..., 1] = 2 * P.imag / tot
    out[..., 2] = 2 * W.real / tot
    out[..., 3] = -2 * W.imag / tot
    out[..., 4] = (n2 - n1) / tot
    return out


def _conj(c):
    if isinstance(c, GaussianRational):
        return c.conjugate()
    return c.conjugate()


def involution_iota(p):
    """``[z0:z1:z2:z3] -> [-conj z1 : conj z0 : -conj z3 : conj z2]``,
    i.e. right multiplication of both quaternions by ``j``."""
    z0, z1, z2, z3 = p
    return (-_conj(z1), _conj(z0), -_conj(z3), _conj(z2))


def projectively_equal(p, q, tol: float = 1e-10) -> bool:
    """Whether two lifts differ by a complex scalar (rank test)."""
    a = np.asarray([complex(*map(float, _re_im(c))) for c in p])
    b = np.asarray([complex(*map(float, _re_im(c))) for c in q])
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return abs(abs(np.vdot(a, b)) - 1) <= tol


@dataclass(frozen=True)
class FibreLine:
    """The projective line ``{t P + Q}`` (``P`` itself at ``t = ∞``)."""

    P: tuple
    Q: tuple

    def point(self, t):
        if t is None or t == float("inf"):
            return self.P
        return tuple(t * a + b for a, b in zip(self.P, self.Q))

    def distance_to(self, p) -> float:
        """Distance of the unit lift of ``p`` from the plane spanned by the line."""
        A = np.array([self.P, self.Q], dtype=complex).T
        x = np.asarray([complex(c) for c in p], dtype=complex)
        x = x / np.linalg.norm(x)
        Qm, _ = np.linalg.qr(A)
        return float(np.linalg.norm(x - Qm @ (Qm.conj().T @ x)))


def _pair_complex(q: Quaternion):
    z, w = pair_from_quat(q)
    return complex(z), complex(w)


def fibre_of(s) -> FibreLine:
    """The twistor line over ``s`` in S^4.

    In the southern chart the fibre is ``{(a, q a)}`` for ``a = z0 + j z1``,
    spanned by ``a = 1`` and ``a = j``; near the north pole the roles of the
    two quaternions are exchanged with ``r = q^-1 = conj(X)/(1 + s4)``.
    """
    s = [float(c) for c in s]
    if len(s) != 5:
        raise InvalidInput("a point of S^4 has five coordinates")
    nrm = sum(c * c for c in s)
    if abs(nrm - 1) > 1e-9:
        raise InvalidInput("point is not on the unit sphere")
    X = Quaternion(*s[:4])
    j = Quaternion(0.0, 0.0, 1.0, 0.0)
    if s[4] <= 0:
        q = X * (1 / (1 - s[4]))
        a, b = _pair_complex(q), _pair_complex(q * j)
        return FibreLine((1 + 0j, 0j) + a, (0j, 1 + 0j) + b)
    r = X.conjugate() * (1 / (1 + s[4]))
    a, b = _pair_complex(r), _pair_complex(r * j)
    return FibreLine(a + (1 + 0j, 0j), b + (0j, 1 + 0j))


__all__ = [
    "Quaternion",
    "quat_from_pair",
    "pair_from_quat",
    "twistor_project",
    "project_array",
    "chart_value",
    "inverse_stereographic",
    "involution_iota",
    "fibre_of",
    "FibreLine",
    "projectively_equal",
]
