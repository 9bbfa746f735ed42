"""Real 2x2 matrix algebra: eigenstructure, QR/LR steps, classification.

Everything here is closed-form.  All operations are pure; matrices are
immutable values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .config import Tolerances, active
from .errors import NotPSD, ShiftSingularity, TrajectoryError, ZeroMatrix
from .projline import ProjPoint


class JordanKind(Enum):
    REAL_DISTINCT = "RealDistinct"
    REAL_DEFECTIVE = "RealDefective"
    COMPLEX_PAIR = "ComplexPair"
    SCALAR = "Scalar"


class QrConvention(Enum):
    PLAIN = "plain"
    NEG_DET_FLIP = "negdetflip"


class ShiftStrategy(Enum):
    NONE = "none"
    RAYLEIGH = "rayleigh"
    WILKINSON = "wilkinson"


class Algo(Enum):
    QR = "qr"
    LR = "lr"


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 real matrix [[a, b], [c, d]]."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            if not math.isfinite(v):
                raise ValueError("matrix entries must be finite")

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1.0, 0.0, 0.0, 1.0)

    @staticmethod
    def diag(p: float, q: float) -> "Mat2":
        return Mat2(p, 0.0, 0.0, q)

    @staticmethod
    def rotation(angle: float) -> "Mat2":
        co, si = math.cos(angle), math.sin(angle)
        return Mat2(co, -si, si, co)

    def trace(self) -> float:
        return self.a + self.d

    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def scale(self) -> float:
        """Largest entry magnitude; the natural size of the matrix."""
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def is_zero(self) -> bool:
        return self.scale() == 0.0

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def frobenius(self) -> float:
        return math.sqrt(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scaled(self, k: float) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def minus_scalar(self, s: float) -> "Mat2":
        return Mat2(self.a - s, self.b, self.c, self.d - s)

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return self.a * x + self.b * y, self.c * x + self.d * y

    def act(self, p: ProjPoint) -> ProjPoint:
        """Canonical action on the projective line: [x:y] -> [ax+by : cx+dy]."""
        u, v = self.apply(p.x, p.y)
        return ProjPoint(u, v)

    def as_rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (self.a, self.b), (self.c, self.d)

    def entries(self) -> tuple[float, float, float, float]:
        return self.a, self.b, self.c, self.d


@dataclass(frozen=True)
class EigenInfo:
    lambda1: complex
    lambda2: complex
    eigendirs: tuple[ProjPoint, ...]
    kind: JordanKind


def _require_nonzero(m: Mat2) -> None:
    if m.is_zero():
        raise ZeroMatrix("zero matrix")


def classify_jordan(m: Mat2, tol: Tolerances | None = None) -> JordanKind:
    """Jordan type from the discriminant, with a scalar-matrix special case."""
    tol = tol or active()
    _require_nonzero(m)
    s = m.scale()
    disc = m.trace() ** 2 - 4.0 * m.det()
    window = tol.jordan_disc * s * s
    if disc > window:
        return JordanKind.REAL_DISTINCT
    if disc < -window:
        return JordanKind.COMPLEX_PAIR
    off = max(abs(m.b), abs(m.c), abs(m.a - m.d))
    if off <= tol.predicate_rel * s:
        return JordanKind.SCALAR
    return JordanKind.REAL_DEFECTIVE


def _eigendir(m: Mat2, lam: float) -> ProjPoint:
    # kernel of (M - lam*I); the two candidate rows give parallel directions,
    # pick whichever is numerically larger.
    u = (m.b, lam - m.a)
    v = (lam - m.d, m.c)
    if math.hypot(*u) >= math.hypot(*v):
        cand = u
    else:
        cand = v
    return ProjPoint(cand[0], cand[1]).normalized()


def eig2(m: Mat2, tol: Tolerances | None = None) -> EigenInfo:
    """Eigenvalues (stable quadratic formula) and real eigendirections.

    Real eigenvalues are ordered lambda1 >= lambda2; a complex pair is
    returned with lambda1 the positive-imaginary member.
    """
    tol = tol or active()
    _require_nonzero(m)
    kind = classify_jordan(m, tol)
    tr, det = m.trace(), m.det()
    disc = tr * tr - 4.0 * det
    if kind is JordanKind.COMPLEX_PAIR:
        im = math.sqrt(-disc) / 2.0
        l1 = complex(tr / 2.0, im)
        return EigenInfo(l1, l1.conjugate(), (), kind)
    if kind is JordanKind.SCALAR:
        lam = tr / 2.0
        return EigenInfo(complex(lam), complex(lam), (), kind)
    if kind is JordanKind.REAL_DEFECTIVE:
        lam = tr / 2.0
        return EigenInfo(complex(lam), complex(lam), (_eigendir(m, lam),), kind)
    # real distinct: avoid cancellation by computing the larger-magnitude
    # root first and recovering the other from the determinant.
    root = math.sqrt(max(disc, 0.0))
    if tr >= 0.0:
        big = (tr + root) / 2.0
    else:
        big = (tr - root) / 2.0
    if big != 0.0:
        other = det / big
    else:
        other = 0.0
    l1, l2 = (big, other) if big >= other else (other, big)
    return EigenInfo(complex(l1), complex(l2), (_eigendir(m, l1), _eigendir(m, l2)), kind)


def qr_factor(m: Mat2) -> tuple[Mat2, Mat2]:
    """Givens factorization M = QR with Q a rotation and R11 >= 0."""
    _require_nonzero(m)
    r = math.hypot(m.a, m.c)
    if r == 0.0:
        # first column zero: already upper triangular
        return Mat2.identity(), m
    co, si = m.a / r, m.c / r
    q = Mat2(co, -si, si, co)
    rr = Mat2(r, co * m.b + si * m.d, 0.0, co * m.d - si * m.b)
    return q, rr


def _shift_value(m: Mat2, shift: ShiftStrategy, tol: Tolerances) -> float:
    if shift is ShiftStrategy.NONE:
        return 0.0
    if shift is ShiftStrategy.RAYLEIGH:
        return m.d
    # Wilkinson: eigenvalue closest to the trailing entry (real part when
    # the pair is complex).
    info = eig2(m, tol)
    if info.kind is JordanKind.COMPLEX_PAIR:
        return info.lambda1.real
    l1, l2 = info.lambda1.real, info.lambda2.real
    return l1 if abs(l1 - m.d) <= abs(l2 - m.d) else l2


def qr_step(
    m: Mat2,
    conv: QrConvention = QrConvention.PLAIN,
    shift: ShiftStrategy = ShiftStrategy.NONE,
    tol: Tolerances | None = None,
) -> Mat2:
    """One iteration: factor M - sigma*I = QR, return RQ + sigma*I.

    With the NEG_DET_FLIP convention and det(M) < 0, Q is post-multiplied and
    R pre-multiplied by diag(-1, 1) before recombining, which is a similarity
    by diag(-1, 1) of the plain step.
    """
    tol = tol or active()
    _require_nonzero(m)
    sigma = _shift_value(m, shift, tol)
    shifted = m.minus_scalar(sigma)
    if shifted.is_zero():
        raise ShiftSingularity(f"shift {sigma} annihilates the matrix")
    q, r = qr_factor(shifted)
    if conv is QrConvention.NEG_DET_FLIP and m.det() < 0.0:
        flip = Mat2.diag(-1.0, 1.0)
        q = q @ flip
        r = flip @ r
    out = r @ q
    return Mat2(out.a + sigma, out.b, out.c, out.d + sigma)


def _check_psd(m: Mat2, tol: Tolerances) -> None:
    s = m.scale()
    if abs(m.b - m.c) > tol.psd_rel * max(s, 1.0):
        raise NotPSD("matrix is not symmetric")
    # symmetric 2x2: smallest eigenvalue in closed form
    mean = m.trace() / 2.0
    rad = math.hypot((m.a - m.d) / 2.0, (m.b + m.c) / 2.0)
    if mean - rad < -tol.psd_rel * max(s, 1.0):
        raise NotPSD("matrix has a negative eigenvalue")


def lr_step_psd(m: Mat2, tol: Tolerances | None = None) -> Mat2:
    """Cholesky-based LR iteration: M = L L^T, return L^T L (PSD preserved)."""
    tol = tol or active()
    _require_nonzero(m)
    _check_psd(m, tol)
    b = (m.b + m.c) / 2.0  # symmetrize away representation noise
    if m.a > 0.0:
        l21 = b / math.sqrt(m.a)
        rest = max(m.d - l21 * l21, 0.0)
    else:
        # PSD with a == 0 forces b == 0
        l21 = 0.0
        rest = max(m.d, 0.0)
    # L^T L for L = [[sqrt(a), 0], [l21, sqrt(rest)]], written so that
    # sqrt(x)^2 never appears (diagonal inputs stay exact fixed points)
    off = l21 * math.sqrt(rest)
    return Mat2(m.a + l21 * l21, off, off, rest)


def predicates(m: Mat2, tol: Tolerances | None = None) -> dict[str, bool]:
    """Shape/structure flags, each tested at relative tolerance."""
    tol = tol or active()
    s = m.scale()
    eps = tol.predicate_rel * max(s, 1.0)
    upper = abs(m.c) <= eps
    lower = abs(m.b) <= eps
    symmetric = abs(m.b - m.c) <= eps
    gram = m.transpose() @ m
    orth = (
        abs(gram.a - 1.0) <= eps
        and abs(gram.d - 1.0) <= eps
        and abs(gram.b) <= eps
        and abs(gram.c) <= eps
    )
    singular = abs(m.det()) <= tol.predicate_rel * max(s * s, 1.0)
    psd = False
    if symmetric and s > 0.0:
        mean = m.trace() / 2.0
        rad = math.hypot((m.a - m.d) / 2.0, (m.b + m.c) / 2.0)
        psd = mean - rad >= -tol.predicate_rel * max(s, 1.0)
    return {
        "upper_tri": upper,
        "lower_tri": lower,
        "diagonal": upper and lower,
        "symmetric": symmetric,
        "orthogonal": orth,
        "singular": singular,
        "psd": psd,
    }


def cond2(m: Mat2, tol: Tolerances | None = None) -> float:
    """Spectral condition number sigma_max / sigma_min (inf when singular)."""
    tol = tol or active()
    _require_nonzero(m)
    # stable closed form: sigma_max/min = (sqrt(f2 + 2|det|) +- sqrt(f2 - 2|det|)) / 2
    f2 = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d
    adet = abs(m.det())
    s1 = math.sqrt(f2 + 2.0 * adet)
    s2 = math.sqrt(max(f2 - 2.0 * adet, 0.0))
    smax = (s1 + s2) / 2.0
    smin = adet / smax if smax > 0.0 else 0.0
    if smin == 0.0:
        return math.inf
    return smax / smin


def trajectory(
    m0: Mat2,
    n: int,
    algo: Algo = Algo.QR,
    conv: QrConvention = QrConvention.PLAIN,
    shift: ShiftStrategy = ShiftStrategy.NONE,
    tol: Tolerances | None = None,
) -> list[Mat2]:
    """Iterate n steps from m0; element 0 is m0 itself.

    Step failures surface as TrajectoryError carrying the failing index.
    """
    if n < 0:
        raise ValueError("step count must be nonnegative")
    tol = tol or active()
    out = [m0]
    cur = m0
    for k in range(n):
        try:
            if algo is Algo.QR:
                cur = qr_step(cur, conv, shift, tol)
            else:
                cur = lr_step_psd(cur, tol)
        except (ZeroMatrix, NotPSD, ShiftSingularity) as exc:
            raise TrajectoryError(k + 1, exc) from exc
        out.append(cur)
    return out
