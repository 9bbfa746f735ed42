"""Oriented cycles on the Lie quadric and the 2x2-matrix correspondence.

A point, circle, or line of the inversive plane, together with an
orientation, is encoded as a homogeneous 5-vector [x1:x2:x3:x4:x5] on the
quadric

    Q(x) = -x1^2 - x2^2 + x3^2 + x4*x5 = 0.

Reading conventions used throughout (all mutually consistent, and checked
against each other by the test suite):

  * x5 != 0  (scale x5 = 1): circle with centre (x1, x2) and radius |x3|;
    orientation is Outside for x3 > 0, Inside for x3 < 0; x3 = 0 is a point.
  * x5 == 0, x3 != 0  (scale x3 = 1): oriented line, unit normal (x1, x2),
    half-plane x1*x + x2*y >= x4/2.
  * x5 == x3 == 0: the point at infinity [0:0:0:1:0].

Oriented tangency of two cycles is vanishing of the associated bilinear
form B; B(p, p) = Q(p) exactly.

A nonzero matrix with nonnegative determinant is drawn as a pair
{C, conj(C)} of oriented cycles tangent to every spear of the matrix's
projective graph; a negative-determinant matrix as a hyperbolic line
through its two eigendirections carrying a continuous orientation
theta in [-1, 1].  The x-axis model is native; the unit-disk model is its
image under the Cayley map z -> (1 - iz)/(1 + iz).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .config import Tolerances, active
from .errors import (
    DegeneratePoint,
    NegativeDeterminant,
    NonNegativeDeterminant,
    NotOnQuadric,
    NullDirection,
    PointCycleError,
    SingularTransform,
    ZeroMatrix,
)
from .mat2 import Mat2, eig2
from .projline import ProjPoint

_SLOT_EPS = 1e-12  # case discrimination on unit-normalized vectors


class Model(Enum):
    X_AXIS = "axis"
    UNIT_DISK = "disk"


class CayleyDirection(Enum):
    TO_DISK = "to_disk"
    TO_AXIS = "to_axis"


class Orientation(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"


# --- homogeneous cycle coordinates -------------------------------------


class LiePoint:
    """Homogeneous coordinate of an oriented cycle (not all components zero)."""

    __slots__ = ("x1", "x2", "x3", "x4", "x5")

    def __init__(self, x1: float, x2: float, x3: float, x4: float, x5: float):
        vals = (float(x1), float(x2), float(x3), float(x4), float(x5))
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("Lie coordinates must be finite")
        if max(abs(v) for v in vals) == 0.0:
            raise ValueError("the zero vector is not a Lie point")
        self.x1, self.x2, self.x3, self.x4, self.x5 = vals

    def vec(self) -> tuple[float, float, float, float, float]:
        return (self.x1, self.x2, self.x3, self.x4, self.x5)

    def canonical(self) -> "LiePoint":
        """Unit norm with the first nonzero component positive."""
        v = self.vec()
        n = math.sqrt(sum(c * c for c in v))
        w = [c / n for c in v]
        for c in w:
            if c != 0.0:
                if c < 0.0:
                    w = [-u for u in w]
                break
        return LiePoint(*(u + 0.0 for u in w))

    def quadric_residual(self) -> float:
        """Q evaluated on the canonical representative."""
        w = self.canonical()
        return -w.x1 * w.x1 - w.x2 * w.x2 + w.x3 * w.x3 + w.x4 * w.x5

    def almost_equal(self, other: "LiePoint", tol: float | None = None) -> bool:
        tol = tol if tol is not None else active().proj_equal
        p, q = self.canonical().vec(), other.canonical().vec()
        da = max(abs(a - b) for a, b in zip(p, q))
        db = max(abs(a + b) for a, b in zip(p, q))
        return min(da, db) <= tol

    def __repr__(self):
        return "LiePoint[{:.6g} : {:.6g} : {:.6g} : {:.6g} : {:.6g}]".format(*self.vec())


def _bilinear(p: LiePoint, q: LiePoint) -> float:
    return (
        -p.x1 * q.x1
        - p.x2 * q.x2
        + p.x3 * q.x3
        + (p.x4 * q.x5 + p.x5 * q.x4) / 2.0
    )


def lie_form(p: LiePoint, q: LiePoint) -> float:
    """Bilinear form of the quadric on canonical representatives.

    Zero iff the two oriented cycles are orientedly tangent; B(p, p) is the
    quadric residual itself.
    """
    return _bilinear(p.canonical(), q.canonical())


def lie_project(p: LiePoint, tol: Tolerances | None = None) -> LiePoint:
    """One Newton step back onto the quadric when drift exceeds threshold."""
    tol = tol or active()
    w = p.canonical()
    r = -w.x1 * w.x1 - w.x2 * w.x2 + w.x3 * w.x3 + w.x4 * w.x5
    if abs(r) <= tol.quadric:
        return p
    grad = (-2.0 * w.x1, -2.0 * w.x2, 2.0 * w.x3, w.x5, w.x4)
    g2 = sum(g * g for g in grad)
    if g2 == 0.0:
        return p
    step = r / g2
    return LiePoint(*(c - step * g for c, g in zip(w.vec(), grad)))


def _require_on_quadric(p: LiePoint, tol: Tolerances) -> None:
    if abs(p.quadric_residual()) > tol.quadric:
        raise NotOnQuadric(f"quadric residual {p.quadric_residual():.3e}")


# --- Euclidean realizations ---------------------------------------------


@dataclass(frozen=True)
class PointAtInfinity:
    pass


@dataclass(frozen=True)
class PointCycle:
    x: float
    y: float


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    radius: float
    orientation: Orientation


@dataclass(frozen=True)
class Line:
    """Oriented line: the half-plane nx*x + ny*y >= offset, |n| = 1."""

    nx: float
    ny: float
    offset: float


OrientedCycle = PointAtInfinity | PointCycle | Circle | Line


def lie_to_cycle(p: LiePoint, tol: Tolerances | None = None) -> OrientedCycle:
    """Euclidean realization of a quadric point."""
    tol = tol or active()
    _require_on_quadric(p, tol)
    w = p.canonical()
    if abs(w.x5) > _SLOT_EPS:
        s = 1.0 / w.x5
        cx, cy, rho = w.x1 * s, w.x2 * s, w.x3 * s
        if abs(rho) <= _SLOT_EPS * max(1.0, abs(cx), abs(cy)):
            return PointCycle(cx, cy)
        side = Orientation.OUTSIDE if rho > 0.0 else Orientation.INSIDE
        return Circle(cx, cy, abs(rho), side)
    if abs(w.x3) > _SLOT_EPS:
        s = 1.0 / w.x3
        nx, ny, off = w.x1 * s, w.x2 * s, w.x4 * s / 2.0
        n = math.hypot(nx, ny)  # equals 1 on the quadric; renormalize anyway
        return Line(nx / n, ny / n, off / n)
    return PointAtInfinity()


def cycle_to_lie(c: OrientedCycle) -> LiePoint:
    """Inverse of lie_to_cycle; the result lies exactly on the quadric."""
    if isinstance(c, PointAtInfinity):
        return LiePoint(0.0, 0.0, 0.0, 1.0, 0.0)
    if isinstance(c, PointCycle):
        return LiePoint(c.x, c.y, 0.0, c.x * c.x + c.y * c.y, 1.0)
    if isinstance(c, Circle):
        if c.radius <= 0.0:
            raise ValueError("circle radius must be positive")
        rho = c.radius if c.orientation is Orientation.OUTSIDE else -c.radius
        x4 = c.cx * c.cx + c.cy * c.cy - c.radius * c.radius
        return LiePoint(c.cx, c.cy, rho, x4, 1.0)
    n = math.hypot(c.nx, c.ny)
    if n == 0.0:
        raise ValueError("line normal must be nonzero")
    return LiePoint(c.nx / n, c.ny / n, 1.0, 2.0 * c.offset / n, 0.0)


# --- involutions --------------------------------------------------------


def reverse_orientation(p: LiePoint) -> LiePoint:
    """Flip the orientation slot; point-type cycles are left untouched."""
    w = p.canonical()
    if abs(w.x3) <= _SLOT_EPS:
        return p
    return LiePoint(w.x1, w.x2, -w.x3, w.x4, w.x5)


def conjugate_figure(p: LiePoint, model: Model, tol: Tolerances | None = None) -> LiePoint:
    """Partner involution: reflect-and-reverse in the model's base cycle.

    X_AXIS: negation of the x2 slot.  UNIT_DISK: the Cayley conjugate of
    that, which coincides with swapping x4 and x5.
    """
    tol = tol or active()
    _require_on_quadric(p, tol)
    if model is Model.X_AXIS:
        w = p.canonical()
        return LiePoint(w.x1, -w.x2, w.x3, w.x4, w.x5)
    axis = cayley(p, CayleyDirection.TO_AXIS, tol)
    w = axis.canonical()
    flipped = LiePoint(w.x1, -w.x2, w.x3, w.x4, w.x5)
    return cayley(flipped, CayleyDirection.TO_DISK, tol)


# --- spears -------------------------------------------------------------


def spear_of(m: Mat2, p: ProjPoint, tol: Tolerances | None = None) -> LiePoint:
    """Hyperbolic spear joining p to its image under the matrix action.

    X-axis model: the oriented cycle orthogonal to the x-axis whose base
    points are p and M.p.
    """
    tol = tol or active()
    if m.is_zero():
        raise ZeroMatrix("zero matrix")
    x, y = p.x, p.y
    u = m.a * x + m.b * y
    v = m.c * x + m.d * y
    if math.hypot(u, v) <= 1e-300:
        raise NullDirection("projective point lies in the null space")
    coords = (-x * v - y * u, 0.0, x * v - y * u, -2.0 * x * u, -2.0 * y * v)
    if max(abs(c) for c in coords) == 0.0:
        raise NullDirection("degenerate spear")
    return LiePoint(*coords)


def spear_through(p: ProjPoint, q: ProjPoint) -> LiePoint:
    """Oriented hyperbolic spear through two distinct projective points.

    The orientation is tied to the argument order: swapping p and q reverses
    it.  For finite values a < b this is the circle centred on the axis
    through a and b; with one point at infinity it is a vertical line.
    """
    px, py, qx, qy = p.x, p.y, q.x, q.y
    coords = (
        px * qy + qx * py,
        0.0,
        qx * py - px * qy,
        2.0 * px * qx,
        2.0 * py * qy,
    )
    if max(abs(c) for c in coords) == 0.0:
        raise DegeneratePoint("coincident endpoints give no spear")
    return LiePoint(*coords)


# --- matrix <-> figure -------------------------------------------------


@dataclass(frozen=True)
class CyclePair:
    cycle: LiePoint
    partner: LiePoint


@dataclass(frozen=True)
class ThetaLine:
    line: LiePoint
    theta: float
    endpoints: tuple[ProjPoint, ProjPoint]
    # the closed-form value printed in the source material; reported for
    # comparison, never used for rendering (see neg_det_figure)
    theta_formula: float


MatrixFigure = CyclePair | ThetaLine


def cycle_pair_of(m: Mat2, model: Model = Model.X_AXIS, tol: Tolerances | None = None) -> CyclePair:
    """Representing pair {C, conj(C)} of a nonnegative-determinant matrix.

    Every spear of the matrix's graph is orientedly tangent to both members.
    At det = 0 the two members coincide as unoriented cycles.
    """
    tol = tol or active()
    if m.is_zero():
        raise ZeroMatrix("zero matrix")
    det = m.det()
    s = m.scale()
    if det < -tol.predicate_rel * s * s:
        raise NegativeDeterminant(f"det = {det:.3e}")
    root = math.sqrt(max(det, 0.0))
    c = LiePoint(m.a - m.d, 2.0 * root, m.a + m.d, -2.0 * m.b, 2.0 * m.c)
    partner = LiePoint(m.a - m.d, -2.0 * root, m.a + m.d, -2.0 * m.b, 2.0 * m.c)
    if model is Model.UNIT_DISK:
        c = cayley(c, CayleyDirection.TO_DISK, tol)
        partner = cayley(partner, CayleyDirection.TO_DISK, tol)
    return CyclePair(c, partner)


def matrix_of_cycle(c: LiePoint, model: Model = Model.X_AXIS, tol: Tolerances | None = None) -> Mat2:
    """Matrix represented by a cycle; inverse of cycle_pair_of up to scale.

    The quadric relation forces the extracted determinant to be nonnegative.
    Normalization: Frobenius norm 1, sign fixed by trace > 0, then by the
    x2 slot, then by the first nonzero entry.
    """
    tol = tol or active()
    _require_on_quadric(c, tol)
    w = c
    if model is Model.UNIT_DISK:
        w = cayley(c, CayleyDirection.TO_AXIS, tol)
    w = w.canonical()
    a = (w.x1 + w.x3) / 2.0
    d = (w.x3 - w.x1) / 2.0
    b = -w.x4 / 2.0
    cc = w.x5 / 2.0
    fro = math.sqrt(a * a + b * b + cc * cc + d * d)
    if fro <= 1e-300:
        raise DegeneratePoint("cycle encodes the zero matrix")
    trace = a + d
    if trace < -tol.proj_equal * fro:
        sign = -1.0
    elif trace > tol.proj_equal * fro:
        sign = 1.0
    elif abs(w.x2) > tol.proj_equal:
        sign = 1.0 if w.x2 > 0.0 else -1.0
    else:
        sign = 1.0
        for v in (a, b, cc, d):
            if v != 0.0:
                sign = 1.0 if v > 0.0 else -1.0
                break
    k = sign / fro
    return Mat2(a * k, b * k, cc * k, d * k)


def _theta_formula(l1: float, l2: float) -> float:
    # closed form as printed in the source; lambda1 >= lambda2 ordering
    arg = (l1 + l2) / (l1 - l2)
    arg = max(-1.0, min(1.0, arg))
    return -1.0 + (2.0 / math.pi) * math.asin(arg)


_THETA_SAMPLES = (
    ProjPoint(1.0, 0.0),
    ProjPoint(0.0, 1.0),
    ProjPoint(1.0, 1.0),
    ProjPoint(1.0, -1.0),
    ProjPoint(2.0, 1.0),
    ProjPoint(1.0, 2.0),
    ProjPoint(3.0, 1.0),
    ProjPoint(1.0, 3.0),
)


def neg_det_figure(m: Mat2, model: Model = Model.X_AXIS, tol: Tolerances | None = None) -> ThetaLine:
    """Hyperbolic line figure of a negative-determinant matrix.

    The line joins the two (necessarily real and distinct) eigendirections,
    oriented from the positive-eigenvalue endpoint to the negative one.
    theta is measured: every graph spear meets the line at the same angle
    alpha, and theta = 2*alpha/pi - 1.  The printed closed form is carried
    alongside for reporting; it disagrees with the measured value (by the
    -1 offset and arcsin/arccos flavour), so rendering always uses the
    measured theta.
    """
    tol = tol or active()
    if m.is_zero():
        raise ZeroMatrix("zero matrix")
    if m.det() >= 0.0:
        raise NonNegativeDeterminant(f"det = {m.det():.3e}")
    info = eig2(m, tol)
    l1, l2 = info.lambda1.real, info.lambda2.real
    e1, e2 = info.eigendirs
    line = spear_through(e1, e2)
    angles = []
    for p in _THETA_SAMPLES:
        try:
            sp = spear_of(m, p, tol)
            alpha = inversive_angle(sp, line, tol)
        except (NullDirection, PointCycleError):
            continue
        if alpha is not None:
            angles.append(alpha)
    if not angles:
        raise DegeneratePoint("no usable sample spear for the angle oracle")
    angles.sort()
    alpha = angles[(len(angles) - 1) // 2]
    theta = 2.0 * alpha / math.pi - 1.0
    if model is Model.UNIT_DISK:
        line = cayley(line, CayleyDirection.TO_DISK, tol)
    return ThetaLine(line, theta, (e1, e2), _theta_formula(l1, l2))


def figure_of(m: Mat2, model: Model = Model.X_AXIS, tol: Tolerances | None = None) -> MatrixFigure:
    """Dispatch on the determinant sign: cycle pair or theta line."""
    tol = tol or active()
    if m.is_zero():
        raise ZeroMatrix("zero matrix")
    if m.det() < 0.0:
        return neg_det_figure(m, model, tol)
    return cycle_pair_of(m, model, tol)


# --- Moebius action -----------------------------------------------------


@dataclass(frozen=True)
class HermitianCycle:
    """Hermitian-matrix encoding of a cycle plus the hidden orientation slot.

    The slot correspondence is [-b : -c : star : d : a]; the Hermitian
    matrix is H = [[a, b + i c], [b - i c, d]] and star^2 = -det(H).
    """

    a: float
    b: float
    c: float
    d: float
    star: float

    @property
    def star_sign(self) -> int:
        return -1 if self.star < 0.0 else 1

    @staticmethod
    def from_lie(p: LiePoint) -> "HermitianCycle":
        w = p.canonical()
        return HermitianCycle(a=w.x5, b=-w.x1, c=-w.x2, d=w.x4, star=w.x3)

    def to_lie(self) -> LiePoint:
        return LiePoint(-self.b, -self.c, self.star, self.d, self.a)

    def matrix(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        off = complex(self.b, self.c)
        return ((complex(self.a), off), (off.conjugate(), complex(self.d)))


ComplexMat = tuple[tuple[complex, complex], tuple[complex, complex]]


def moebius_apply(g: ComplexMat, p: LiePoint, tol: Tolerances | None = None) -> LiePoint:
    """Image of an oriented cycle under the Moebius map of g.

    The map is lifted linearly to the quadric: g is normalized to unit
    determinant, the Hermitian part transforms as H -> (g^-1)* H (g^-1),
    and the orientation slot rides along unchanged (the continuity
    convention through the identity).  Oriented tangency is preserved.
    """
    tol = tol or active()
    (g11, g12), (g21, g22) = (complex(g[0][0]), complex(g[0][1])), (complex(g[1][0]), complex(g[1][1]))
    det = g11 * g22 - g12 * g21
    scale = max(abs(g11), abs(g12), abs(g21), abs(g22))
    if abs(det) <= 1e-14 * scale * scale:
        raise SingularTransform("transformation matrix is singular")
    s = cmath.sqrt(det)
    # T = adj(g)/sqrt(det) represents g^{-1} with det(T) = 1
    t11, t12, t21, t22 = g22 / s, -g12 / s, -g21 / s, g11 / s
    h = HermitianCycle.from_lie(p)
    (h11, h12), (h21, h22) = h.matrix()
    # H' = T* H T
    a11 = h11 * t11 + h12 * t21
    a12 = h11 * t12 + h12 * t22
    a21 = h21 * t11 + h22 * t21
    a22 = h21 * t12 + h22 * t22
    n11 = t11.conjugate() * a11 + t21.conjugate() * a21
    n12 = t11.conjugate() * a12 + t21.conjugate() * a22
    n22 = t12.conjugate() * a12 + t22.conjugate() * a22
    out = HermitianCycle(a=n11.real, b=n12.real, c=n12.imag, d=n22.real, star=h.star)
    return lie_project(out.to_lie(), tol)


_CAYLEY_TO_DISK: ComplexMat = ((-1j, 1.0 + 0j), (1j, 1.0 + 0j))
_CAYLEY_TO_AXIS: ComplexMat = ((1.0 + 0j, -1.0 + 0j), (-1j, -1j))


def cayley(p: LiePoint, direction: CayleyDirection, tol: Tolerances | None = None) -> LiePoint:
    """Move a cycle between the x-axis model and the unit-disk model.

    TO_DISK applies z -> (1 - iz)/(1 + iz), carrying the x-axis to the unit
    circle and the axis point at infinity to the plane point (-1, 0).
    """
    g = _CAYLEY_TO_DISK if direction is CayleyDirection.TO_DISK else _CAYLEY_TO_AXIS
    return moebius_apply(g, p, tol)


def disk_point_of(p: ProjPoint) -> tuple[float, float]:
    """Cayley image of a projective point: a point on the unit circle."""
    phi = -2.0 * math.atan2(p.x, p.y)
    return math.cos(phi), math.sin(phi)


def axis_point_of_disk_angle(phi: float) -> ProjPoint:
    """Inverse of disk_point_of for a unit-circle angle."""
    return ProjPoint(-math.sin(phi / 2.0), math.cos(phi / 2.0))


# --- angles and intersections -------------------------------------------


def _euclid_gauge(p: LiePoint) -> tuple[tuple[float, ...], float]:
    """Scale a cycle for metric formulas; returns (vector, signed radius slot).

    Circles are scaled to x5 = 1 (signed radius x3); lines to unit normal.
    Point-type cycles are rejected.
    """
    w = p.canonical()
    if abs(w.x5) > _SLOT_EPS:
        s = 1.0 / w.x5
        v = tuple(c * s for c in w.vec())
        rho = v[2]
        if abs(rho) <= _SLOT_EPS * max(1.0, abs(v[0]), abs(v[1])):
            raise PointCycleError("point cycles carry no angle")
        return v, rho
    if abs(w.x3) > _SLOT_EPS:
        n = math.hypot(w.x1, w.x2)
        v = tuple(c / n for c in w.vec())
        return v, v[2]
    raise PointCycleError("the point at infinity carries no angle")


def inversive_angle(p: LiePoint, q: LiePoint, tol: Tolerances | None = None) -> float | None:
    """Intersection angle of two non-point cycles, or None if disjoint.

    Computed from normalized Lie data; for two circles with signed radii
    r1, r2 at centre distance d this is arccos((r1^2 + r2^2 - d^2)/(2 r1 r2)).
    Orientation-sensitive: reversing one cycle maps alpha to pi - alpha.
    """
    tol = tol or active()
    _require_on_quadric(p, tol)
    _require_on_quadric(q, tol)
    vp, rp = _euclid_gauge(p)
    vq, rq = _euclid_gauge(q)
    b = (
        -vp[0] * vq[0]
        - vp[1] * vq[1]
        + vp[2] * vq[2]
        + (vp[3] * vq[4] + vp[4] * vq[3]) / 2.0
    )
    delta = 1.0 - b / (rp * rq)
    if abs(delta) > 1.0 + 1e-9:
        return None
    return math.acos(max(-1.0, min(1.0, delta)))


def base_cycle(model: Model) -> LiePoint:
    """The model's reference cycle: oriented x-axis or outside unit circle."""
    if model is Model.X_AXIS:
        return LiePoint(0.0, 1.0, 1.0, 0.0, 0.0)
    return LiePoint(0.0, 0.0, 1.0, -1.0, 1.0)


def intersection_count(p: LiePoint, q: LiePoint, window: float = 1e-8,
                       tol: Tolerances | None = None) -> int:
    """Number of real intersection points of two cycles (0, 1, or 2).

    Tangency is detected within the given window; point-type cycles count 1
    when they lie on the other cycle.
    """
    tol = tol or active()
    cyc_p, cyc_q = lie_to_cycle(p, tol), lie_to_cycle(q, tol)
    if isinstance(cyc_p, (PointCycle, PointAtInfinity)):
        return _point_on_cycle(cyc_p, cyc_q, window)
    if isinstance(cyc_q, (PointCycle, PointAtInfinity)):
        return _point_on_cycle(cyc_q, cyc_p, window)
    alpha = inversive_angle(p, q, tol)
    if alpha is None:
        return 0
    # rebuild delta to measure tangency in the cosine scale
    delta = math.cos(alpha)
    if abs(delta) >= 1.0 - window:
        return 1
    return 2


def _point_on_cycle(pt, other: OrientedCycle, window: float) -> int:
    if isinstance(pt, PointAtInfinity):
        return 1 if isinstance(other, Line) else 0
    if isinstance(other, (PointCycle, PointAtInfinity)):
        if isinstance(other, PointCycle):
            return 1 if math.hypot(pt.x - other.x, pt.y - other.y) <= window else 0
        return 0
    return 1 if cycle_locus_distance(other, (pt.x, pt.y)) <= window else 0


def cycle_locus_distance(c: OrientedCycle, xy: tuple[float, float]) -> float:
    """Euclidean distance from a plane point to the cycle's locus."""
    x, y = xy
    if isinstance(c, Circle):
        return abs(math.hypot(x - c.cx, y - c.cy) - c.radius)
    if isinstance(c, Line):
        return abs(c.nx * x + c.ny * y - c.offset)
    if isinstance(c, PointCycle):
        return math.hypot(x - c.x, y - c.y)
    return math.inf


def cycle_intersection_points(a: OrientedCycle, b: OrientedCycle) -> tuple[tuple[float, float], ...]:
    """Real intersection points of two circle/line loci (possibly empty)."""
    if isinstance(a, Line) and isinstance(b, Circle):
        a, b = b, a
    if isinstance(a, Circle) and isinstance(b, Circle):
        dx, dy = b.cx - a.cx, b.cy - a.cy
        d = math.hypot(dx, dy)
        if d == 0.0:
            return ()
        e = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d)
        h2 = a.radius * a.radius - e * e
        if h2 < 0.0:
            return ()
        h = math.sqrt(max(h2, 0.0))
        mx, my = a.cx + e * dx / d, a.cy + e * dy / d
        if h == 0.0:
            return ((mx, my),)
        ox, oy = -dy / d * h, dx / d * h
        return ((mx + ox, my + oy), (mx - ox, my - oy))
    if isinstance(a, Circle) and isinstance(b, Line):
        s = b.nx * a.cx + b.ny * a.cy - b.offset
        h2 = a.radius * a.radius - s * s
        if h2 < 0.0:
            return ()
        fx, fy = a.cx - s * b.nx, a.cy - s * b.ny
        h = math.sqrt(max(h2, 0.0))
        if h == 0.0:
            return ((fx, fy),)
        tx, ty = -b.ny, b.nx
        return ((fx + h * tx, fy + h * ty), (fx - h * tx, fy - h * ty))
    if isinstance(a, Line) and isinstance(b, Line):
        den = a.nx * b.ny - a.ny * b.nx
        if abs(den) <= 1e-15:
            return ()
        x = (a.offset * b.ny - b.offset * a.ny) / den
        y = (a.nx * b.offset - b.nx * a.offset) / den
        return ((x, y),)
    return ()
