"""Finite-difference certificates for X = π∘F on sampled grids.

A :class:`SurfaceSample` holds a lattice ``u + iv`` of spacing ``h`` over a
rectangle, disk or annulus, the unit lifts ``F`` of the curve, their
holomorphic derivatives, and ``X = π(F)`` on the unit sphere in R^5.
Stencils that leave the sampled region produce NaN and are dropped from
every maximum, so reports only use points whose full stencil was sampled.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import kernels
from .errors import EmptyDomain, GridTooSmall, InvalidInput, PoleOnSurface
from .twistor import project_array, twistor_project

KAPPA = 4.0  # |X_u|^2 / |F_u|^2_FS, pinned by calibrate_kappa()
ROUNDOFF_FLOOR = 1e-9  # residuals below this count as converged
SPIN_TOL = 1e-6


# ---------------------------------------------------------------- domains


@dataclass(frozen=True)
class DomainSpec:
    """``rect:x0,x1,y0,y1`` | ``disk:cx,cy,r`` | ``annulus:cx,cy,r0,r1``."""

    kind: str
    params: tuple

    @classmethod
    def parse(cls, text: str) -> "DomainSpec":
        try:
            kind, rest = text.split(":", 1)
            vals = tuple(float(x) for x in rest.split(","))
        except ValueError:
            raise InvalidInput(f"bad domain spec {text!r}") from None
        need = {"rect": 4, "disk": 3, "annulus": 4}
        if kind not in need or len(vals) != need[kind]:
            raise InvalidInput(f"bad domain spec {text!r}")
        d = cls(kind, vals)
        d._validate()
        return d

    @classmethod
    def rect(cls, x0, x1, y0, y1):
        d = cls("rect", (float(x0), float(x1), float(y0), float(y1)))
        d._validate()
        return d

    @classmethod
    def disk(cls, cx, cy, r):
        d = cls("disk", (float(cx), float(cy), float(r)))
        d._validate()
        return d

    @classmethod
    def annulus(cls, cx, cy, r0, r1):
        d = cls("annulus", (float(cx), float(cy), float(r0), float(r1)))
        d._validate()
        return d

    def _validate(self):
        p = self.params
        ok = {
            "rect": lambda: p[0] < p[1] and p[2] < p[3],
            "disk": lambda: p[2] > 0,
            "annulus": lambda: 0 <= p[2] < p[3],
        }[self.kind]()
        if not ok:
            raise InvalidInput(f"degenerate {self.kind} domain {p}")

    def __str__(self):
        return f"{self.kind}:" + ",".join(repr(x) for x in self.params)

    def bbox(self):
        p = self.params
        if self.kind == "rect":
            return p
        r = p[2] if self.kind == "disk" else p[3]
        return (p[0] - r, p[0] + r, p[1] - r, p[1] + r)

    def contains(self, U, V, tol=1e-12):
        p = self.params
        if self.kind == "rect":
            return (U >= p[0] - tol) & (U <= p[1] + tol) & (V >= p[2] - tol) & (V <= p[3] + tol)
        R = np.hypot(U - p[0], V - p[1])
        if self.kind == "disk":
            return R <= p[2] + tol
        return (R >= p[2] - tol) & (R <= p[3] + tol)


def _grid(domain: DomainSpec, h: float):
    if not h > 0:
        raise InvalidInput("grid spacing must be positive")
    x0, x1, y0, y1 = domain.bbox()
    nu = int(round((x1 - x0) / h)) + 1
    nv = int(round((y1 - y0) / h)) + 1
    u = x0 + h * np.arange(nu)
    v = y0 + h * np.arange(nv)
    U, V = np.meshgrid(u, v, indexing="ij")
    return u, v, U, V, domain.contains(U, V)


# ---------------------------------------------------------------- samples


@dataclass
class SurfaceSample:
    domain: DomainSpec
    h: float
    u: np.ndarray
    v: np.ndarray
    mask: np.ndarray
    X: np.ndarray
    F: np.ndarray | None = None
    dF: np.ndarray | None = None
    excluded: list = field(default_factory=list)
    exclusion_radius: float = 0.0
    metadata: dict = field(default_factory=dict)

    @property
    def shape(self):
        return self.mask.shape

    @property
    def n_points(self) -> int:
        return int(self.mask.sum())

    def sphere_error(self) -> float:
        n = np.linalg.norm(self.X[self.mask], axis=-1)
        return float(np.max(np.abs(n - 1))) if n.size else 0.0


def singular_points(C):
    """Finite points excluded from sampling: base points of the defining
    tuple, poles of the data, critical points of ``g`` and immersion failures."""
    from .analysis import analyze
    from .exact import RationalFunction
    from .laurent import zero_set

    rep = analyze(C)
    pts = [p for p, _ in rep.base_points]
    for poles in rep.poles_of_data.values():
        pts += [p for p, _ in poles]
    g = C.provenance.get("data", {}).get("g")
    if isinstance(g, RationalFunction) and not g.is_constant():
        pts += [p for p, _ in zero_set(g.derivative())]
    pts += list(rep.immersion_failures)
    out = []
    for p in pts:
        if p.is_inf:
            continue
        c = complex(p.to_complex())
        if all(abs(c - q) > 1e-14 for q in out):
            out.append(c)
    return out


def _coeff_arrays(C):
    return [np.array([complex(c.to_mpc()) for c in p.coeffs] or [0j]) for p in C.components]


def _polyval(coeffs, Z):
    acc = np.zeros_like(Z)
    for c in coeffs[::-1]:
        acc = acc * Z + c
    return acc


def _dcoeffs(coeffs):
    return np.array([k * coeffs[k] for k in range(1, len(coeffs))] or [0j])


def sample_surface(
    C,
    domain,
    h: float,
    exclusion: float | None = None,
    precision_bits: int | None = None,
) -> SurfaceSample:
    """Sample ``F = C`` and ``X = π∘F`` on the lattice of spacing ``h``.

    Grid points within ``exclusion`` (default ``10h``) of a singular point
    are masked out.  With ``precision_bits > 53`` the lifts and their
    projections are evaluated in mpmath at that precision before rounding
    to double.
    """
    if isinstance(domain, str):
        domain = DomainSpec.parse(domain)
    if exclusion is None:
        exclusion = 10 * h
    u, v, U, V, mask = _grid(domain, h)
    Z = U + 1j * V
    excluded = singular_points(C)
    for q in excluded:
        mask &= np.abs(Z - q) > exclusion
    if not mask.any():
        raise EmptyDomain("every grid point lies inside an exclusion zone or outside the domain")

    coeffs = _coeff_arrays(C)
    F = np.stack([_polyval(c, Z) for c in coeffs], axis=-1)
    dF = np.stack([_polyval(_dcoeffs(c), Z) for c in coeffs], axis=-1)
    scale = np.linalg.norm(F, axis=-1, keepdims=True)
    scale[scale == 0] = 1.0
    F, dF = F / scale, dF / scale
    if precision_bits and precision_bits > 53:
        X = _project_high_precision(C, Z, mask, precision_bits)
    else:
        X = project_array(F)
    X[~mask] = np.nan
    meta = {"curve": str(C), "provenance": C.provenance.get("kind"), "precision_bits": precision_bits or 53}
    return SurfaceSample(domain, h, u, v, mask, X, F, dF, excluded, exclusion, meta)


def _project_high_precision(C, Z, mask, bits):
    X = np.full(Z.shape + (5,), np.nan)
    with mpmath.workprec(bits):
        comps = [[c.to_mpc() for c in p.coeffs] for p in C.components]
        for idx in zip(*np.nonzero(mask)):
            z = mpmath.mpc(Z[idx].real, Z[idx].imag)
            vals = tuple(mpmath.polyval(cs[::-1], z) if cs else mpmath.mpc(0) for cs in comps)
            X[idx] = [float(c) for c in twistor_project(vals)]
    return X


def sample_from_map(func, domain, h: float, metadata=None) -> SurfaceSample:
    """Sample an explicit map ``(U, V) -> R^5`` (used for controls and oracles)."""
    if isinstance(domain, str):
        domain = DomainSpec.parse(domain)
    u, v, U, V, mask = _grid(domain, h)
    if not mask.any():
        raise EmptyDomain("no grid point lies in the domain")
    X = np.array(func(U, V), dtype=float)
    X[~mask] = np.nan
    return SurfaceSample(domain, h, u, v, mask, X, metadata=dict(metadata or {"provenance": "map"}))


def inverse_stereographic_r4(Y: np.ndarray) -> np.ndarray:
    """R^4 -> S^4 with the origin at the south pole."""
    n = np.sum(Y * Y, axis=-1, keepdims=True)
    return np.concatenate([2 * Y / (1 + n), (n - 1) / (1 + n)], axis=-1)


def perturb_tangentially(S: SurfaceSample, amplitude: float = 0.05, direction=None) -> SurfaceSample:
    """Push ``X`` along a smooth field tangent to S^4 and renormalise.

    The field is the projection of a fixed vector onto ``T_X S^4`` modulated
    by ``sin(ku) cos(kv)`` with one period across the sample.
    """
    c = np.array(direction if direction is not None else (0.0, 0.0, 1.0, 1.0, 0.5))
    c = c / np.linalg.norm(c)
    T = c - np.sum(S.X * c, axis=-1, keepdims=True) * S.X
    U, V = np.meshgrid(S.u, S.v, indexing="ij")
    k = 2 * np.pi / max(S.u[-1] - S.u[0], S.v[-1] - S.v[0], S.h)
    phi = np.sin(k * (U - S.u[0])) * np.cos(k * (V - S.v[0]))
    Y = S.X + amplitude * phi[..., None] * T
    Y = Y / np.linalg.norm(Y, axis=-1, keepdims=True)
    meta = dict(S.metadata, perturbation=amplitude)
    return SurfaceSample(S.domain, S.h, S.u, S.v, S.mask.copy(), Y, None, None, S.excluded, S.exclusion_radius, meta)


# ---------------------------------------------------------------- stencils


class _Stencil:
    def __init__(self, S: SurfaceSample, pad: int = 2):
        nu, nv = S.shape
        self.pad, self.nu, self.nv, self.h = pad, nu, nv, S.h
        P = np.full((nu + 2 * pad, nv + 2 * pad, S.X.shape[-1]), np.nan)
        P[pad:-pad, pad:-pad] = np.where(S.mask[..., None], S.X, np.nan)
        self.P = P

    def at(self, di, dj):
        p = self.pad
        return self.P[p + di : p + di + self.nu, p + dj : p + dj + self.nv]

    def du(self, order=2):
        h = self.h
        if order == 4:
            return (-self.at(2, 0) + 8 * self.at(1, 0) - 8 * self.at(-1, 0) + self.at(-2, 0)) / (12 * h)
        return (self.at(1, 0) - self.at(-1, 0)) / (2 * h)

    def dv(self, order=2):
        h = self.h
        if order == 4:
            return (-self.at(0, 2) + 8 * self.at(0, 1) - 8 * self.at(0, -1) + self.at(0, -2)) / (12 * h)
        return (self.at(0, 1) - self.at(0, -1)) / (2 * h)

    def _second(self, s):
        h = s * self.h
        X = self.at(0, 0)
        uu = (self.at(s, 0) - 2 * X + self.at(-s, 0)) / h**2
        vv = (self.at(0, s) - 2 * X + self.at(0, -s)) / h**2
        uv = (self.at(s, s) - self.at(s, -s) - self.at(-s, s) + self.at(-s, -s)) / (4 * h**2)
        return uu, uv, vv

    def second(self, richardson=False):
        d1 = self._second(1)
        if not richardson:
            return d1
        d2 = self._second(2)
        return tuple((4 * a - b) / 3 for a, b in zip(d1, d2))

    def laplacian(self):
        return (self.at(1, 0) + self.at(-1, 0) + self.at(0, 1) + self.at(0, -1) - 4 * self.at(0, 0)) / self.h**2


def _dot(a, b):
    return np.sum(a * b, axis=-1)


@dataclass
class ResidualReport:
    max: float
    field: np.ndarray
    n_points: int

    def __float__(self):
        return self.max


def _finish(field_, what) -> ResidualReport:
    valid = np.isfinite(field_)
    n = int(valid.sum())
    if n == 0:
        raise GridTooSmall(f"no interior point supports the {what} stencil")
    return ResidualReport(float(np.max(field_[valid])), field_, n)


# ---------------------------------------------------------------- reports


def conformality_report(S: SurfaceSample) -> ResidualReport:
    """max of ``max(|<X_u,X_v>|, ||X_u|^2-|X_v|^2|) / (|X_u|^2+|X_v|^2)``."""
    st = _Stencil(S)
    Xu, Xv = st.du(), st.dv()
    a, b = _dot(Xu, Xu), _dot(Xv, Xv)
    with np.errstate(invalid="ignore", divide="ignore"):
        r = np.maximum(np.abs(_dot(Xu, Xv)), np.abs(a - b)) / (a + b)
    r[(a + b) == 0] = 0.0
    return _finish(r, "conformality")


def minimality_report(S: SurfaceSample) -> ResidualReport:
    """max of ``|ΔX + (|X_u|^2+|X_v|^2) X|`` with the 5-point Laplacian."""
    st = _Stencil(S)
    Xu, Xv = st.du(), st.dv()
    R = st.laplacian() + (_dot(Xu, Xu) + _dot(Xv, Xv))[..., None] * st.at(0, 0)
    return _finish(np.linalg.norm(R, axis=-1), "minimality")


@dataclass
class SuperminimalityReport:
    max: float
    field: np.ndarray
    spin_sign: object  # +1, -1, "mixed" or 0 when no point is curved enough
    n_points: int
    n_degenerate: int
    spin_field: np.ndarray | None = None

    def __float__(self):
        return self.max


def superminimality_report(S: SurfaceSample, richardson: bool = False) -> SuperminimalityReport:
    """Circle condition for ``n -> S(n) e1`` on the unit normal circle.

    ``(e1, e2)`` is the orthonormalised ``(X_u, X_v)``; ``(n1, n2)`` spans the
    normal plane inside ``T_X S^4`` with ``det[X, e1, e2, n1, n2] > 0``.
    With ``a = S(n1) e1`` and ``b = S(n2) e1`` the residual is
    ``(||a|^2-|b|^2| + 2|<a,b>|) / max(|a|^2+|b|^2, 1)``; the spin is the
    sign of ``det[a, b]`` in the frame ``(e1, e2)``.
    """
    st = _Stencil(S)
    order = 4 if richardson else 2
    Xu, Xv = st.du(order), st.dv(order)
    Xuu, Xuv, Xvv = st.second(richardson)
    X = st.at(0, 0)
    ok = np.isfinite(Xu).all(-1) & np.isfinite(Xv).all(-1) & np.isfinite(Xuu).all(-1)
    ok &= np.isfinite(Xuv).all(-1) & np.isfinite(Xvv).all(-1)
    J = np.stack([Xu, Xv], axis=-1)[ok]  # (N, 5, 2)
    Xo = X[ok]
    G = np.einsum("nki,nkj->nij", J, J)
    detG = G[:, 0, 0] * G[:, 1, 1] - G[:, 0, 1] ** 2
    scale = np.maximum(G[:, 0, 0] + G[:, 1, 1], 1e-300)
    good = detG > 1e-12 * scale**2
    N = Xo.shape[0]
    res = np.full(N, np.nan)
    spin = np.zeros(N)
    if good.any():
        Jg, Gg, Xg = J[good], G[good], Xo[good]
        # A = G^{-1/2}: columns of J A are orthonormal, e1 is parallel to X_u
        # via Gram-Schmidt instead so that the orientation follows (u, v)
        g11, g12, g22 = Gg[:, 0, 0], Gg[:, 0, 1], Gg[:, 1, 1]
        a11 = 1 / np.sqrt(g11)
        d = np.sqrt(g11 * g22 - g12**2)
        A = np.zeros((len(g11), 2, 2))
        A[:, 0, 0] = a11
        A[:, 0, 1] = -g12 / (np.sqrt(g11) * d)
        A[:, 1, 1] = np.sqrt(g11) / d
        E = np.einsum("nki,nij->nkj", Jg, A)  # (n, 5, 2)
        M = np.concatenate([Xg[..., None], E], axis=-1)  # (n, 5, 3)
        _, _, Vh = np.linalg.svd(np.transpose(M, (0, 2, 1)), full_matrices=True)
        n1, n2 = Vh[:, 3, :], Vh[:, 4, :].copy()
        frame = np.stack([Xg, E[..., 0], E[..., 1], n1, n2], axis=-1)
        flip = np.linalg.det(frame) < 0
        n2[flip] *= -1

        def shape(n):
            H = np.empty((len(n), 2, 2))
            H[:, 0, 0] = _dot(Xuu[ok][good], n)
            H[:, 0, 1] = H[:, 1, 0] = _dot(Xuv[ok][good], n)
            H[:, 1, 1] = _dot(Xvv[ok][good], n)
            return np.einsum("nji,njk,nkl->nil", A, H, A)

        a = shape(n1)[:, :, 0]
        b = shape(n2)[:, :, 0]
        aa, bb, ab = _dot(a, a), _dot(b, b), _dot(a, b)
        r = (np.abs(aa - bb) + 2 * np.abs(ab)) / np.maximum(aa + bb, 1.0)
        cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        curved = (aa + bb) > SPIN_TOL
        sg = np.where(curved, np.sign(cross), 0.0)
        res[good] = r
        spin[good] = sg
    full = np.full(S.shape, np.nan)
    full[ok] = res
    spin_full = np.zeros(S.shape)
    spin_full[ok] = spin
    n_valid = int(np.isfinite(res).sum())
    if n_valid == 0:
        raise GridTooSmall("no interior point supports the second-derivative stencil")
    signs = set(np.unique(spin[spin != 0]).astype(int).tolist())
    if not signs:
        spin_sign = 0
    elif len(signs) == 1:
        spin_sign = signs.pop()
    else:
        spin_sign = "mixed"
    return SuperminimalityReport(
        float(np.nanmax(res)), full, spin_sign, n_valid, int((~good).sum()), spin_full
    )


def fs_norm2(Z: np.ndarray, dZ: np.ndarray) -> np.ndarray:
    """Fubini-Study squared length ``(|Z|^2|dZ|^2 - |<Z,dZ>|^2)/|Z|^4``."""
    zz = np.sum(np.abs(Z) ** 2, axis=-1)
    dd = np.sum(np.abs(dZ) ** 2, axis=-1)
    zd = np.sum(np.conj(Z) * dZ, axis=-1)
    return (zz * dd - np.abs(zd) ** 2) / zz**2


@dataclass
class IsometryReport:
    mean: float
    reldev: float
    field: np.ndarray
    n_points: int


def isometry_ratio(S: SurfaceSample) -> IsometryReport:
    """Ratio ``|X_u|^2 / |F_u|^2_FS`` over the grid: its mean and
    ``max |ratio - mean| / mean``.  ``X_u`` uses the fourth-order stencil and
    ``F_u`` the exact holomorphic derivative."""
    if S.F is None:
        raise InvalidInput("isometry ratio needs a sample of a curve")
    st = _Stencil(S)
    Xu = st.du(order=4)
    fs = fs_norm2(S.F, S.dF)
    with np.errstate(invalid="ignore", divide="ignore"):
        r = _dot(Xu, Xu) / fs
    valid = np.isfinite(r) & (fs > 1e-14)
    n = int(valid.sum())
    if n == 0:
        raise GridTooSmall("no interior point supports the isometry stencil")
    vals = np.sort(r[valid])
    mean = float(math.fsum(vals) / n)
    reldev = float(np.max(np.abs(vals - mean)) / abs(mean))
    field_ = np.where(valid, r, np.nan)
    return IsometryReport(mean, reldev, field_, n)


def calibrate_kappa(h: float = 1e-3) -> float:
    """Measure the ratio on the curve ``[1 : 0 : z : z]`` near 0.

    At ``z = 0`` the FS squared speed is 2 and ``|X_u|^2 = 8``, so the value
    is 4 up to the stencil error.
    """
    from .curves import f_curve
    from .exact import RationalFunction

    z = RationalFunction.z()
    C = f_curve(-2 * z, z, 0)
    S = sample_surface(C, DomainSpec.rect(-0.01, 0.01, -0.01, 0.01), h)
    return isometry_ratio(S).mean


# ---------------------------------------------------------------- summary


@dataclass
class GeometryReport:
    h: float
    conformality_max: float
    minimality_max: float
    supermin_circle_max: float
    spin_sign: object
    isometry_ratio_mean: float | None
    isometry_ratio_reldev: float | None
    n_points: int
    rates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "conformality_max": self.conformality_max,
            "minimality_max": self.minimality_max,
            "supermin_circle_max": self.supermin_circle_max,
            "spin_sign": self.spin_sign,
            "isometry_ratio_mean": self.isometry_ratio_mean,
            "isometry_ratio_reldev": self.isometry_ratio_reldev,
            "n_points": self.n_points,
            "rates": self.rates,
        }


def geometry_report(S: SurfaceSample, richardson: bool = False) -> GeometryReport:
    conf = conformality_report(S)
    mini = minimality_report(S)
    sup = superminimality_report(S, richardson)
    iso = isometry_ratio(S) if S.F is not None else None
    return GeometryReport(
        S.h,
        conf.max,
        mini.max,
        sup.max,
        sup.spin_sign,
        None if iso is None else iso.mean,
        None if iso is None else iso.reldev,
        S.n_points,
    )


def observed_orders(residuals, hs, floor: float = ROUNDOFF_FLOOR):
    """``log(r_k / r_{k+1}) / log(h_k / h_{k+1})``; ``None`` where the finer
    residual is already below ``floor`` (nothing left to converge)."""
    out = []
    for (r0, h0), (r1, h1) in zip(zip(residuals, hs), zip(residuals[1:], hs[1:])):
        if r1 <= floor:
            out.append(None)
        elif r0 <= 0:
            out.append(-math.inf)
        else:
            out.append(math.log(r0 / r1) / math.log(h0 / h1))
    return out


def converges(residuals, hs, min_order: float = 1.5, floor: float = ROUNDOFF_FLOOR) -> bool:
    return all(o is None or o >= min_order for o in observed_orders(residuals, hs, floor))


def convergence_study(C, domain, hs, richardson: bool = False):
    """Residuals of the three certificates at each spacing, with observed orders."""
    rows = {"conformality": [], "minimality": [], "superminimality": []}
    spins = []
    for h in hs:
        S = sample_surface(C, domain, h)
        rows["conformality"].append(conformality_report(S).max)
        rows["minimality"].append(minimality_report(S).max)
        sup = superminimality_report(S, richardson)
        rows["superminimality"].append(sup.max)
        spins.append(sup.spin_sign)
    orders = {k: observed_orders(v, list(hs)) for k, v in rows.items()}
    return {"h": list(hs), "residuals": rows, "orders": orders, "spin": spins}


# ---------------------------------------------------------------- radius


@dataclass
class RadiusReport:
    center: complex
    estimate: float
    params: dict
    refinement: list = field(default_factory=list)  # [(h, estimate)] by level

    @property
    def is_cauchy(self) -> bool:
        est = [r for _, r in self.refinement]
        diffs = [abs(a - b) for a, b in zip(est, est[1:])]
        return all(d1 < d0 for d0, d1 in zip(diffs, diffs[1:]))

    def to_json(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "estimate": self.estimate,
            "params": self.params,
            "refinement": [[h, r] for h, r in self.refinement],
        }


def _boundary_nodes(mask):
    nu, nv = mask.shape
    P = np.zeros((nu + 2, nv + 2), dtype=bool)
    P[1:-1, 1:-1] = mask
    interior = np.ones_like(mask)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            interior &= P[1 + di : 1 + di + nu, 1 + dj : 1 + dj + nv]
    return mask & ~interior


def intrinsic_radius(S: SurfaceSample, p0, arc: bool = False, backend=None) -> RadiusReport:
    """Shortest 8-neighbour path length from ``p0`` to the boundary of the
    sampled region, with chordal (default) or great-circle edge weights."""
    p0 = complex(*p0) if isinstance(p0, (tuple, list)) else complex(p0)
    if not bool(S.domain.contains(np.array(p0.real), np.array(p0.imag))):
        raise InvalidInput(f"center {p0} lies outside the domain")
    i = int(round((p0.real - S.u[0]) / S.h))
    j = int(round((p0.imag - S.v[0]) / S.h))
    if not (0 <= i < S.shape[0] and 0 <= j < S.shape[1]) or not S.mask[i, j]:
        raise InvalidInput(f"center {p0} is not a sampled grid point")
    dist = kernels.grid_dijkstra(np.nan_to_num(S.X), S.mask, i, j, arc=arc, backend=backend)
    bnd = _boundary_nodes(S.mask)
    est = float(np.min(dist[bnd]))
    params = {
        "h": S.h,
        "grid": list(S.shape),
        "weights": "arc" if arc else "chordal",
        "backend": backend or kernels.BACKEND,
        "start_node": [i, j],
    }
    return RadiusReport(p0, est, params, [(S.h, est)])


def radius_refinement(make_sample, p0, hs, arc: bool = False) -> RadiusReport:
    """Radius estimates over successively finer spacings ``hs``."""
    seq = []
    rep = None
    for h in hs:
        rep = intrinsic_radius(make_sample(h), p0, arc=arc)
        seq.append((h, rep.estimate))
    rep.refinement = seq
    return rep


def great_circle_strip(U, V):
    """``(cos v cos u, cos v sin u, sin v, 0, 0)``: unit speed along ``v = 0``."""
    return np.stack(
        [np.cos(V) * np.cos(U), np.cos(V) * np.sin(U), np.sin(V), 0 * U, 0 * U], axis=-1
    )


# ---------------------------------------------------------------- export


def _stereo3(X, pole):
    den = 1 - pole * X[:, 4]
    if np.any(np.abs(den) < 1e-9):
        raise PoleOnSurface("projection pole lies on the surface; choose the other pole")
    return X[:, :3] / den[:, None]


def mesh_data(S: SurfaceSample):
    idx = -np.ones(S.shape, dtype=int)
    idx[S.mask] = np.arange(S.n_points)
    verts = S.X[S.mask]
    q = S.mask[:-1, :-1] & S.mask[1:, :-1] & S.mask[1:, 1:] & S.mask[:-1, 1:]
    faces = []
    for i, j in zip(*np.nonzero(q)):
        faces.append([int(idx[i, j]), int(idx[i + 1, j]), int(idx[i + 1, j + 1]), int(idx[i, j + 1])])
    return verts, faces


def export_mesh(S: SurfaceSample, fmt: str = "json", projection: str = "r5", path=None, pole: int = 1) -> str:
    """Serialise the sample as a json (R^5 vertices) or obj (stereographic
    3-space vertices, triangulated) mesh; returns the text and writes it to
    ``path`` if given.  ``pole`` is +1 (north) or -1 (south)."""
    verts, faces = mesh_data(S)
    if fmt == "json":
        if projection != "r5":
            raise InvalidInput("json meshes carry R^5 vertices")

        def clean(a):
            return [None if not np.isfinite(x) else float(x) for x in a[S.mask]]

        try:
            conf = conformality_report(S).field
            mini = minimality_report(S).field
        except GridTooSmall:
            conf = mini = np.full(S.shape, np.nan)
        doc = {
            "grid": {"nu": int(S.shape[0]), "nv": int(S.shape[1]), "h": S.h},
            "vertices_r5": [[float(c) for c in v] for v in verts],
            "faces": faces,
            "residuals": {"conformality": clean(conf), "minimality": clean(mini)},
        }
        text = json.dumps(doc)
    elif fmt == "obj":
        if projection != "stereo3":
            raise InvalidInput("obj meshes use the stereo3 projection")
        P = _stereo3(verts, pole)
        lines = [f"v {x!r} {y!r} {z!r}" for x, y, z in P.tolist()]
        for a, b, c, d in faces:
            lines.append(f"f {a + 1} {b + 1} {c + 1}")
            lines.append(f"f {a + 1} {c + 1} {d + 1}")
        text = "\n".join(lines) + "\n"
    else:
        raise InvalidInput(f"unknown mesh format {fmt!r}")
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def stereo3(X, pole: int = 1):
    """First three coordinates of the stereographic image of ``X`` from ``pole * e5``."""
    return _stereo3(np.atleast_2d(np.asarray(X, dtype=float)), pole)
