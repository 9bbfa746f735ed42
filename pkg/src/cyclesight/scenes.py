"""Renderable scenes: styled geometric primitives plus SVG/JSON emitters.

Scenes are pure values.  Two styling modes reproduce the reference figures:
a three-colour comparison for the PSD ellipse picture (input blue, LR green,
QR red), and a fade for iteration trajectories (input red, first iterate
light blue, later iterates whitening), drawn over a dark-blue base cycle.

All geometry is quantized to 12 significant digits at construction, so the
JSON emitter round-trips to an identical Scene and repeated runs are
byte-identical.  SVG numbers are printed with 9 significant digits.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .config import Tolerances, active
from .errors import NotPSD, ZeroMatrix
from .liegeom import (
    Circle,
    CyclePair,
    Line,
    Model,
    Orientation,
    PointCycle,
    base_cycle,
    disk_point_of,
    figure_of,
    lie_to_cycle,
)
from .mat2 import Mat2

RED = (230, 20, 20)
LIGHT_BLUE = (120, 180, 255)
WHITE = (255, 255, 255)
DARK_BLUE = (20, 40, 120)
V1_BLUE = (0, 0, 255)
V1_GREEN = (0, 100, 0)
V1_RED = (255, 0, 0)

BASE_WIDTH = 0.015
ITER_WIDTH = 0.02
INPUT_WIDTH = 0.025
POINT_RADIUS = 0.025
ARROW_SIZE = 0.09


def _q(x: float) -> float:
    """Quantize to 12 significant digits (normalizes negative zero)."""
    if x == 0.0:
        return 0.0
    return float(f"{x:.12g}")


def _fmt(x: float) -> str:
    """SVG number: 9 significant digits, no negative zero."""
    s = f"{x:.9g}"
    if s in ("-0", "-0.0"):
        return "0"
    return s


@dataclass(frozen=True)
class Ellipse:
    """Origin-centred ellipse; angle is the major axis direction."""

    semi_major: float
    semi_minor: float
    angle: float

    def __post_init__(self):
        if not self.semi_major >= self.semi_minor >= 0.0:
            raise ValueError("semi-axes must satisfy major >= minor >= 0")


@dataclass(frozen=True)
class Viewport:
    """Square world window centred at the origin."""

    half_extent: float = 2.5
    pixels: int = 600

    def __post_init__(self):
        if self.half_extent <= 1.0:
            raise ValueError("viewport must contain the base cycle")


@dataclass(frozen=True)
class Primitive:
    kind: str  # circle | line | point | ellipse | arrowhead
    geometry: dict
    color: tuple[int, int, int]
    width: float
    layer: int
    label: str


@dataclass(frozen=True)
class Scene:
    primitives: tuple[Primitive, ...] = field(default_factory=tuple)


def _prim(kind, geometry, color, width, layer, label) -> Primitive:
    return Primitive(
        kind=kind,
        geometry={k: _q(v) if isinstance(v, float) else v for k, v in geometry.items()},
        color=tuple(int(c) for c in color),
        width=_q(width),
        layer=layer,
        label=label,
    )


# --- v1: PSD ellipses -----------------------------------------------------


def ellipse_of(m: Mat2, tol: Tolerances | None = None) -> Ellipse:
    """Image of the unit circle under a PSD matrix.

    Semi-axes are the eigenvalues; the angle is the dominant eigenvector
    direction, reduced to [0, pi).
    """
    tol = tol or active()
    s = m.scale()
    if abs(m.b - m.c) > tol.predicate_rel * max(s, 1.0):
        raise NotPSD("matrix is not symmetric")
    mean = m.trace() / 2.0
    rad = math.hypot((m.a - m.d) / 2.0, (m.b + m.c) / 2.0)
    lo = mean - rad
    if lo < -tol.predicate_rel * max(s, 1.0):
        raise NotPSD("matrix has a negative eigenvalue")
    hi = mean + rad
    if rad <= tol.predicate_rel * max(s, 1.0):
        angle = 0.0
    else:
        b = (m.b + m.c) / 2.0
        angle = 0.5 * math.atan2(2.0 * b, m.a - m.d)
    angle = angle % math.pi
    return Ellipse(hi, max(lo, 0.0), angle)


def _fade_color(k: int, n: int) -> tuple[int, int, int]:
    """Iterate k of n (1-based): light blue fading linearly to white."""
    if n <= 1:
        return LIGHT_BLUE
    t = (k - 1) / (n - 1)
    return tuple(round(a + (b - a) * t) for a, b in zip(LIGHT_BLUE, WHITE))


def scene_v1(matrices: list[Mat2], mode: str = "compare", tol: Tolerances | None = None) -> Scene:
    """Ellipse scene for PSD matrices.

    compare mode colours up to three ellipses input-blue / LR-green / QR-red;
    fade mode draws the whole trajectory with the iteration fade, input red.
    """
    tol = tol or active()
    prims: list[Primitive] = []
    ellipses = []
    for i, m in enumerate(matrices):
        try:
            ellipses.append(ellipse_of(m, tol))
        except NotPSD as exc:
            raise NotPSD(f"matrix {i}: {exc}") from exc
    if mode == "compare":
        colors = (V1_BLUE, V1_GREEN, V1_RED)
        if len(ellipses) > len(colors):
            raise ValueError("compare mode takes at most three matrices")
        order = list(range(len(ellipses)))
        labels = ("input", "lr", "qr")
    elif mode == "fade":
        n = len(ellipses) - 1
        colors_by_index = {0: V1_RED}
        for k in range(1, len(ellipses)):
            colors_by_index[k] = _fade_color(k, n)
        # draw whitest first, input last on top
        order = list(range(len(ellipses) - 1, 0, -1)) + [0]
        colors = None
        labels = None
    else:
        raise ValueError(f"unknown v1 mode: {mode}")
    layer = 0
    for idx in order:
        e = ellipses[idx]
        if mode == "compare":
            color = colors[idx]
            label = labels[idx]
        else:
            color = colors_by_index[idx]
            label = "input" if idx == 0 else f"iter:{idx:03d}"
        prims.append(
            _prim(
                "ellipse",
                {"cx": 0.0, "cy": 0.0, "rx": e.semi_major, "ry": e.semi_minor, "angle": e.angle},
                color,
                INPUT_WIDTH if label == "input" else ITER_WIDTH,
                layer,
                label,
            )
        )
        layer += 1
    return Scene(tuple(prims))


# --- v2: oriented cycle scenes --------------------------------------------


def _clip_line(line: Line, vp: Viewport) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Clip an infinite oriented line to the viewport square."""
    h = vp.half_extent
    px, py = line.offset * line.nx, line.offset * line.ny
    dx, dy = -line.ny, line.nx
    ts = []
    for d, p, lo, hi in ((dx, px, -h, h), (dy, py, -h, h)):
        if abs(d) < 1e-15:
            if not (lo <= p <= hi):
                return None
        else:
            t1, t2 = (lo - p) / d, (hi - p) / d
            ts.append((min(t1, t2), max(t1, t2)))
    tmin = max(t[0] for t in ts) if ts else -h
    tmax = min(t[1] for t in ts) if ts else h
    if tmin >= tmax:
        return None
    a = (px + tmin * dx, py + tmin * dy)
    b = (px + tmax * dx, py + tmax * dy)
    # deterministic endpoint order
    if (a[0], a[1]) > (b[0], b[1]):
        a, b = b, a
    return a, b


def _arrow_anchor(cycle, vp: Viewport):
    """Deterministic arrowhead anchor: the cycle point nearest the top edge.

    Returns (point, travel_direction) or None for point-type cycles.
    """
    if isinstance(cycle, Circle):
        p = (cycle.cx, cycle.cy + cycle.radius)
        u = (0.0, 1.0)  # outward radial at the top
        if cycle.orientation is Orientation.OUTSIDE:
            t = (-u[1], u[0])  # counterclockwise
        else:
            t = (u[1], -u[0])
        return p, t
    if isinstance(cycle, Line):
        seg = _clip_line(cycle, vp)
        if seg is None:
            return None
        a, b = seg
        p = a if (a[1], -a[0]) > (b[1], -b[0]) else b  # max y, then min x
        t = (cycle.ny, -cycle.nx)  # half-plane on the left of travel
        return p, t
    return None


def _rotate(v, ang):
    co, si = math.cos(ang), math.sin(ang)
    return (v[0] * co - v[1] * si, v[0] * si + v[1] * co)


def _cycle_prims(cycle, color, width, layer, label, vp, arrow_angles=(0.0,)):
    """Primitives for one oriented cycle: its locus plus arrowheads.

    arrow_angles rotate the travel direction; the theta-line figure passes
    two opposite angles, ordinary cycles a single zero.
    """
    prims = []
    if isinstance(cycle, Circle):
        prims.append(
            _prim(
                "circle",
                {"cx": cycle.cx, "cy": cycle.cy, "r": cycle.radius},
                color,
                width,
                layer,
                label,
            )
        )
    elif isinstance(cycle, Line):
        seg = _clip_line(cycle, vp)
        if seg is None:
            return prims
        (x1, y1), (x2, y2) = seg
        prims.append(
            _prim("line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2}, color, width, layer, label)
        )
    elif isinstance(cycle, PointCycle):
        prims.append(_prim("point", {"x": cycle.x, "y": cycle.y}, color, width, layer, label))
        return prims
    else:  # point at infinity: nothing to draw
        return prims
    anchor = _arrow_anchor(cycle, vp)
    if anchor is None:
        return prims
    (px, py), t = anchor
    for ang in arrow_angles:
        tx, ty = _rotate(t, ang)
        prims.append(
            _prim(
                "arrowhead",
                {"x": px, "y": py, "angle": math.atan2(ty, tx), "size": ARROW_SIZE},
                color,
                width,
                layer,
                f"{label}:arrow",
            )
        )
    return prims


def _figure_prims(m, model, color, width, layer, label, vp, tol):
    fig = figure_of(m, model, tol)
    prims = []
    if isinstance(fig, CyclePair):
        c = lie_to_cycle(fig.cycle, tol)
        p = lie_to_cycle(fig.partner, tol)
        suffix = ":coincident" if fig.cycle.almost_equal(fig.partner, 1e-9) else ""
        prims += _cycle_prims(c, color, width, layer, f"{label}:cycle{suffix}", vp)
        prims += _cycle_prims(p, color, width, layer, f"{label}:partner{suffix}", vp)
    else:
        line = lie_to_cycle(fig.line, tol)
        half = math.pi / 2.0 * (1.0 + fig.theta)
        prims += _cycle_prims(line, color, width, layer, f"{label}:line", vp, (half, -half))
        for i, e in enumerate(fig.endpoints, start=1):
            if model is Model.UNIT_DISK:
                x, y = disk_point_of(e)
            else:
                if e.y == 0.0:
                    continue  # axis-model endpoint at infinity
                x, y = e.x / e.y, 0.0
            prims.append(
                _prim("point", {"x": x, "y": y}, color, width, layer, f"{label}:endpoint:{i}")
            )
    return prims


def scene_v2(
    matrices: list[Mat2],
    model: Model = Model.UNIT_DISK,
    vp: Viewport | None = None,
    tol: Tolerances | None = None,
) -> Scene:
    """Cycle scene for a trajectory: base cycle, fading iterates, red input."""
    tol = tol or active()
    vp = vp or Viewport()
    for i, m in enumerate(matrices):
        if m.is_zero():
            raise ZeroMatrix(f"matrix {i} is zero")
    prims: list[Primitive] = []
    base = lie_to_cycle(base_cycle(model), tol)
    prims += _cycle_prims(base, DARK_BLUE, BASE_WIDTH, 0, "base", vp, ())
    layer = 1
    n = len(matrices) - 1
    # whitest iterate first so earlier (darker) iterates draw over it
    for k in range(n, 0, -1):
        color = _fade_color(k, n)
        prims += _figure_prims(matrices[k], model, color, ITER_WIDTH, layer, f"iter:{k:03d}", vp, tol)
        layer += 1
    if matrices:
        prims += _figure_prims(matrices[0], model, RED, INPUT_WIDTH, layer, "input", vp, tol)
    return Scene(tuple(prims))


# --- emitters ---------------------------------------------------------------


def emit_svg(scene: Scene, vp: Viewport | None = None) -> bytes:
    """Deterministic SVG 1.1 (y axis up, world coordinates in the viewBox)."""
    vp = vp or Viewport()
    h = vp.half_extent
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{vp.pixels}" height="{vp.pixels}" '
        f'viewBox="{_fmt(-h)} {_fmt(-h)} {_fmt(2 * h)} {_fmt(2 * h)}">\n',
        f'<rect x="{_fmt(-h)}" y="{_fmt(-h)}" width="{_fmt(2 * h)}" height="{_fmt(2 * h)}" '
        'fill="#ffffff"/>\n',
    ]
    for p in scene.primitives:
        color = "rgb({},{},{})".format(*p.color)
        g = p.geometry
        if p.kind == "circle":
            out.append(
                f'<circle cx="{_fmt(g["cx"])}" cy="{_fmt(-g["cy"])}" r="{_fmt(g["r"])}" '
                f'fill="none" stroke="{color}" stroke-width="{_fmt(p.width)}"/>\n'
            )
        elif p.kind == "line":
            out.append(
                f'<line x1="{_fmt(g["x1"])}" y1="{_fmt(-g["y1"])}" '
                f'x2="{_fmt(g["x2"])}" y2="{_fmt(-g["y2"])}" '
                f'stroke="{color}" stroke-width="{_fmt(p.width)}"/>\n'
            )
        elif p.kind == "point":
            out.append(
                f'<circle cx="{_fmt(g["x"])}" cy="{_fmt(-g["y"])}" r="{_fmt(POINT_RADIUS)}" '
                f'fill="{color}" stroke="none"/>\n'
            )
        elif p.kind == "ellipse":
            deg = -math.degrees(g["angle"])
            out.append(
                f'<ellipse cx="{_fmt(g["cx"])}" cy="{_fmt(-g["cy"])}" '
                f'rx="{_fmt(g["rx"])}" ry="{_fmt(g["ry"])}" '
                f'transform="rotate({_fmt(deg)} {_fmt(g["cx"])} {_fmt(-g["cy"])})" '
                f'fill="none" stroke="{color}" stroke-width="{_fmt(p.width)}"/>\n'
            )
        elif p.kind == "arrowhead":
            x, y, ang, size = g["x"], g["y"], g["angle"], g["size"]
            d = (math.cos(ang), math.sin(ang))
            n = (-d[1], d[0])
            tip = (x + 0.6 * size * d[0], y + 0.6 * size * d[1])
            b1 = (x - 0.4 * size * d[0] + 0.35 * size * n[0], y - 0.4 * size * d[1] + 0.35 * size * n[1])
            b2 = (x - 0.4 * size * d[0] - 0.35 * size * n[0], y - 0.4 * size * d[1] - 0.35 * size * n[1])
            path = (
                f"M {_fmt(tip[0])} {_fmt(-tip[1])} "
                f"L {_fmt(b1[0])} {_fmt(-b1[1])} "
                f"L {_fmt(b2[0])} {_fmt(-b2[1])} Z"
            )
            out.append(f'<path d="{path}" fill="{color}" stroke="none"/>\n')
    out.append("</svg>\n")
    return "".join(out).encode("utf-8")


def scene_to_payload(scene: Scene) -> dict:
    return {
        "version": 1,
        "primitives": [
            {
                "kind": p.kind,
                "geometry": p.geometry,
                "color": list(p.color),
                "width": p.width,
                "layer": p.layer,
                "label": p.label,
            }
            for p in scene.primitives
        ],
    }


def emit_scene_json(scene: Scene) -> bytes:
    """Canonical JSON: sorted keys, compact separators, quantized floats."""
    return json.dumps(scene_to_payload(scene), sort_keys=True, separators=(",", ":")).encode(
        "utf-8"
    )


def scene_from_json(data: bytes | str) -> Scene:
    payload = json.loads(data)
    if payload.get("version") != 1:
        raise ValueError("unsupported scene version")
    prims = []
    for p in payload["primitives"]:
        prims.append(
            Primitive(
                kind=p["kind"],
                geometry={k: v for k, v in p["geometry"].items()},
                color=tuple(p["color"]),
                width=p["width"],
                layer=p["layer"],
                label=p["label"],
            )
        )
    return Scene(tuple(prims))
