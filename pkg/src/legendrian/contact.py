"""Contact forms on CP^3 and C^3 and the exact Legendrian test.

The homogeneous form is ``z0 dz1 - z1 dz0 + z2 dz3 - z3 dz2``; on the chart
``z0 = 1`` it becomes ``dz1 + z2 dz3 - z3 dz2`` (``alpha``), and
``psi`` carries the simpler form ``dz1 + z2 dz3`` (``beta``) onto it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import ONE, ZERO, GaussianRational, Poly, RationalFunction


def _d(x):
    return x.derivative()


def pullback_alpha0(Z) -> RationalFunction:
    """``Z0 Z1' - Z1 Z0' + Z2 Z3' - Z3 Z2'`` for a 4-tuple of polys or rational functions."""
    z0, z1, z2, z3 = Z
    w = z0 * _d(z1) - z1 * _d(z0) + z2 * _d(z3) - z3 * _d(z2)
    return w if isinstance(w, RationalFunction) else RationalFunction(w)


def pullback_affine_alpha(T) -> RationalFunction:
    z1, z2, z3 = (RationalFunction.coerce(t) for t in T)
    return z1.derivative() + z2 * z3.derivative() - z3 * z2.derivative()


def pullback_affine_beta(T) -> RationalFunction:
    z1, z2, z3 = (RationalFunction.coerce(t) for t in T)
    return z1.derivative() + z2 * z3.derivative()


def psi_map(T):
    """``(z1, z2, z3) -> (z1 + z2 z3 / 2, z3, -z2 / 2)``.

    Works on triples of rational functions, exact scalars or floats.
    """
    z1, z2, z3 = T
    return (z1 + z2 * z3 / 2, z3, -z2 / 2)


def psi_inverse(T):
    w1, w2, w3 = T
    z2 = -2 * w3
    return (w1 - z2 * w2 / 2, z2, w2)


def is_legendrian(C):
    """``(True, 0)`` if the curve is tangent to the contact distribution,
    else ``(False, witness)`` with the nonzero pullback as witness."""
    w = pullback_alpha0(C.components)
    return w.is_zero(), w


def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), ZERO) for j in range(p)] for i in range(n)]


def _identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


# antisymmetric matrix of the homogeneous contact form: alpha0(z)(v) = z^T OMEGA v
OMEGA = [
    [ZERO, ONE, ZERO, ZERO],
    [-ONE, ZERO, ZERO, ZERO],
    [ZERO, ZERO, ZERO, ONE],
    [ZERO, ZERO, -ONE, ZERO],
]


@dataclass(frozen=True)
class ContactChart:
    """Linear coordinates adapted to the hyperplane ``z0 = a1 z1 + a2 z2 + a3 z3``.

    ``forward`` maps the affine coordinates of the tilted chart
    ``z0 = 1 + a.z`` to coordinates in which the contact form is standard;
    ``projective`` is the induced automorphism of CP^3, carrying the
    hyperplane onto ``{z0 = 0}`` and preserving the homogeneous contact form.
    """

    a1: GaussianRational
    a2: GaussianRational
    a3: GaussianRational
    forward: tuple
    inverse: tuple
    projective: tuple
    projective_inverse: tuple

    def apply_affine(self, T):
        z1, z2, z3 = T
        return tuple(row[0] * z1 + row[1] * z2 + row[2] * z3 for row in self.forward)

    def unapply_affine(self, T):
        z1, z2, z3 = T
        return tuple(row[0] * z1 + row[1] * z2 + row[2] * z3 for row in self.inverse)

    def restricted_alpha(self, T) -> RationalFunction:
        """The homogeneous form restricted to the tilted chart, pulled back by ``T``."""
        z1, z2, z3 = (RationalFunction.coerce(t) for t in T)
        a2, a3 = self.a2, self.a3
        return (
            (1 + z2 * a2 + z3 * a3) * z1.derivative()
            - (z3 + z1 * a2) * z2.derivative()
            + (z2 - z1 * a3) * z3.derivative()
        )

    def apply_curve(self, C):
        from .curves import ProjectiveCurve

        comps = C.components
        new = []
        for row in self.projective:
            acc = Poly()
            for coeff, p in zip(row, comps):
                if not coeff.is_zero():
                    acc = acc + p.scale(coeff)
            new.append(acc)
        prov = {
            "kind": "chart",
            "a": [str(self.a1), str(self.a2), str(self.a3)],
            "source": C.provenance,
        }
        return ProjectiveCurve(new, provenance=prov)

    def compose_check(self) -> bool:
        return (
            _matmul([list(r) for r in self.forward], [list(r) for r in self.inverse]) == _identity(3)
            and _matmul([list(r) for r in self.projective], [list(r) for r in self.projective_inverse])
            == _identity(4)
        )

    def is_symplectic(self) -> bool:
        M = [list(r) for r in self.projective]
        Mt = [list(r) for r in zip(*M)]
        return _matmul(_matmul(Mt, OMEGA), M) == OMEGA


def chart_change(a1, a2, a3) -> ContactChart:
    a1, a2, a3 = (GaussianRational.coerce(a) for a in (a1, a2, a3))
    o, z = ONE, ZERO
    forward = ((o, z, z), (-a3, o, z), (a2, z, o))
    inverse = ((o, z, z), (a3, o, z), (-a2, z, o))
    projective = ((o, -a1, -a2, -a3), (z, o, z, z), (z, -a3, o, z), (z, a2, z, o))
    projective_inverse = ((o, a1, a2, a3), (z, o, z, z), (z, a3, o, z), (z, -a2, z, o))
    return ContactChart(a1, a2, a3, forward, inverse, projective, projective_inverse)
