"""Interactive sessions: gestures on the figure drive the matrix.

A session holds a nonzero matrix and iteration options.  The user steers the
figure, not the matrix: gestures move the handle cycle (or the endpoints and
orientation of the hyperbolic line when the determinant is negative), and the
matrix is reconstructed from the moved figure.  The partner cycle is always
derived, never directly movable.

Wire protocol (HTTP or stdio, same JSON payloads):

    POST /session                 -> {"ok": true, "id": "s1"}
    POST /session/{id}/message
        {"op": "init", "matrix": [a,b,c,d], "steps": 10, ...}
        {"op": "gesture", "gesture": {"kind": "scale", "factor": 1.5}}
        {"op": "get"}
    response: {"ok": true, "scene": <Scene JSON v1>, "report": {...}}
          or  {"ok": false, "code": "...", "message": "..."}
"""
from __future__ import annotations

import json
import math
import sys
import threading
from dataclasses import dataclass, replace
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .config import Tolerances, active
from .errors import (
    CycleSightError,
    DegenerateFigure,
    InvalidGestureForMode,
)
from .liegeom import (
    Circle,
    CyclePair,
    Line,
    Model,
    PointCycle,
    axis_point_of_disk_angle,
    cycle_to_lie,
    disk_point_of,
    figure_of,
    lie_to_cycle,
    matrix_of_cycle,
    reverse_orientation,
)
from .mat2 import Algo, Mat2, QrConvention, ShiftStrategy, trajectory
from .report import build_report, trajectory_metrics
from .scenes import Viewport, scene_to_payload, scene_v2

MAX_STEPS = 500


# --- gestures ---------------------------------------------------------------


@dataclass(frozen=True)
class Translate:
    dx: float
    dy: float


@dataclass(frozen=True)
class Scale:
    factor: float


@dataclass(frozen=True)
class ReverseOrientation:
    pass


@dataclass(frozen=True)
class MoveEndpoint:
    which: int  # 1 or 2
    dphi: float


@dataclass(frozen=True)
class SetTheta:
    theta: float


@dataclass(frozen=True)
class SetSteps:
    steps: int


@dataclass(frozen=True)
class SetMatrix:
    entries: tuple[float, float, float, float]


@dataclass(frozen=True)
class SetOptions:
    algo: Algo | None = None
    conv: QrConvention | None = None
    shift: ShiftStrategy | None = None


Gesture = (
    Translate
    | Scale
    | ReverseOrientation
    | MoveEndpoint
    | SetTheta
    | SetSteps
    | SetMatrix
    | SetOptions
)


def gesture_from_json(payload: dict) -> Gesture:
    kind = payload.get("kind")
    try:
        if kind == "translate":
            return Translate(float(payload["dx"]), float(payload["dy"]))
        if kind == "scale":
            return Scale(float(payload["factor"]))
        if kind == "reverse_orientation":
            return ReverseOrientation()
        if kind == "move_endpoint":
            which = int(payload["which"])
            if which not in (1, 2):
                raise ValueError("which must be 1 or 2")
            return MoveEndpoint(which, float(payload["dphi"]))
        if kind == "set_theta":
            return SetTheta(float(payload["theta"]))
        if kind == "set_steps":
            return SetSteps(int(payload["steps"]))
        if kind == "set_matrix":
            entries = payload["entries"]
            if len(entries) != 4:
                raise ValueError("entries must have four elements")
            return SetMatrix(tuple(float(e) for e in entries))
        if kind == "set_options":
            return SetOptions(
                algo=Algo(payload["algo"]) if "algo" in payload else None,
                conv=QrConvention(payload["conv"]) if "conv" in payload else None,
                shift=ShiftStrategy(payload["shift"]) if "shift" in payload else None,
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed gesture: {exc}") from exc
    raise ValueError(f"unknown gesture kind: {kind!r}")


# --- session state ------------------------------------------------------------


@dataclass(frozen=True)
class SessionState:
    matrix: Mat2
    steps: int = 10
    algo: Algo = Algo.QR
    conv: QrConvention = QrConvention.PLAIN
    shift: ShiftStrategy = ShiftStrategy.NONE
    model: Model = Model.UNIT_DISK
    # dragging the handle through the self-conjugate position swaps which
    # canonical pair member sits under the pointer; track that here
    handle_partner: bool = False
    # theta-line parameters (disk angles of the endpoints and orientation);
    # present exactly when det(matrix) < 0
    endpoints: tuple[float, float] | None = None
    theta: float | None = None

    @property
    def mode(self) -> str:
        return "theta_line" if self.matrix.det() < 0.0 else "cycle_pair"


def state_for_matrix(
    m: Mat2,
    steps: int = 10,
    algo: Algo = Algo.QR,
    conv: QrConvention = QrConvention.PLAIN,
    shift: ShiftStrategy = ShiftStrategy.NONE,
    tol: Tolerances | None = None,
) -> SessionState:
    """Fresh session state; derives theta-line parameters when det < 0."""
    tol = tol or active()
    if m.is_zero():
        raise ValueError("the zero matrix is not accepted")
    if not 0 <= steps <= MAX_STEPS:
        raise ValueError(f"steps must be in [0, {MAX_STEPS}]")
    endpoints = None
    theta = None
    if m.det() < 0.0:
        fig = figure_of(m, Model.UNIT_DISK, tol)
        phis = []
        for e in fig.endpoints:
            x, y = disk_point_of(e)
            phis.append(math.atan2(y, x))
        endpoints = (phis[0], phis[1])
        theta = fig.theta
    return SessionState(
        matrix=m, steps=steps, algo=algo, conv=conv, shift=shift, endpoints=endpoints, theta=theta
    )


def _handle_lie(state: SessionState, tol: Tolerances):
    fig = figure_of(state.matrix, Model.UNIT_DISK, tol)
    if not isinstance(fig, CyclePair):
        raise InvalidGestureForMode("gesture needs the cycle-pair mode")
    return fig.partner if state.handle_partner else fig.cycle


def _rebind_handle(state: SessionState, moved, tol: Tolerances) -> SessionState:
    """Reattach the handle to whichever new pair member the moved cycle is."""
    fig = figure_of(state.matrix, Model.UNIT_DISK, tol)
    on_partner = not fig.cycle.almost_equal(moved, 1e-6)
    return replace(state, handle_partner=on_partner)


def _matrix_from_theta(
    endpoints: tuple[float, float], theta: float, tol: Tolerances
) -> Mat2:
    """Eigen-reconstruction from disk endpoints and orientation.

    Eigenvalues are normalized to lambda1 - lambda2 = 2 with
    lambda1 + lambda2 = 2 sin(pi*theta/2), so theta measured back from the
    figure equals the requested value; |theta| -> 1 is the singular limit.
    """
    if abs(theta) >= 1.0:
        raise DegenerateFigure("theta = +-1 collapses the figure")
    sep = abs((endpoints[0] - endpoints[1] + math.pi) % (2.0 * math.pi) - math.pi)
    if sep < tol.min_endpoint_sep:
        raise DegenerateFigure("endpoints coincide")
    s = math.sin(math.pi * theta / 2.0)
    l1, l2 = s + 1.0, s - 1.0
    p1 = axis_point_of_disk_angle(endpoints[0])
    p2 = axis_point_of_disk_angle(endpoints[1])
    den = p1.x * p2.y - p2.x * p1.y
    if abs(den) < 1e-12:
        raise DegenerateFigure("endpoints coincide projectively")
    # M = P diag(l1, l2) P^{-1}
    a = (l1 * p1.x * p2.y - l2 * p2.x * p1.y) / den
    b = (l2 - l1) * p1.x * p2.x / den
    c = (l1 - l2) * p1.y * p2.y / den
    d = (l2 * p2.y * p1.x - l1 * p1.y * p2.x) / den
    m = Mat2(a, b, c, d)
    f = m.frobenius()
    return m.scaled(1.0 / f)


def apply_gesture(state: SessionState, g: Gesture, tol: Tolerances | None = None) -> SessionState:
    """Pure state transition; raises without mutating on invalid gestures."""
    tol = tol or active()

    if isinstance(g, SetSteps):
        if not 0 <= g.steps <= MAX_STEPS:
            raise ValueError(f"steps must be in [0, {MAX_STEPS}]")
        return replace(state, steps=g.steps)
    if isinstance(g, SetMatrix):
        return state_for_matrix(
            Mat2(*g.entries), state.steps, state.algo, state.conv, state.shift, tol
        )
    if isinstance(g, SetOptions):
        new = state
        if g.algo is not None:
            new = replace(new, algo=g.algo)
        if g.conv is not None:
            new = replace(new, conv=g.conv)
        if g.shift is not None:
            new = replace(new, shift=g.shift)
        # validate: the trajectory must be computable with the new options
        trajectory(new.matrix, min(new.steps, 1), new.algo, new.conv, new.shift, tol)
        return new

    if isinstance(g, (Translate, Scale, ReverseOrientation)):
        if state.mode != "cycle_pair":
            raise InvalidGestureForMode(f"{type(g).__name__} needs the cycle-pair mode")
        handle = _handle_lie(state, tol)
        cyc = lie_to_cycle(handle, tol)
        if isinstance(g, Translate):
            if isinstance(cyc, Circle):
                moved = Circle(cyc.cx + g.dx, cyc.cy + g.dy, cyc.radius, cyc.orientation)
            elif isinstance(cyc, Line):
                moved = Line(cyc.nx, cyc.ny, cyc.offset + cyc.nx * g.dx + cyc.ny * g.dy)
            elif isinstance(cyc, PointCycle):
                moved = PointCycle(cyc.x + g.dx, cyc.y + g.dy)
            else:
                raise DegenerateFigure("cannot translate the point at infinity")
            lp = cycle_to_lie(moved)
        elif isinstance(g, Scale):
            if g.factor <= 0.0:
                raise ValueError("scale factor must be positive")
            if isinstance(cyc, Circle):
                r = cyc.radius * g.factor
                if r < tol.min_radius:
                    raise DegenerateFigure("cycle collapsed below the radius floor")
                moved = Circle(cyc.cx, cyc.cy, r, cyc.orientation)
            elif isinstance(cyc, Line):
                moved = Line(cyc.nx, cyc.ny, cyc.offset * g.factor)
            else:
                raise DegenerateFigure("point cycles cannot be scaled")
            lp = cycle_to_lie(moved)
        else:
            lp = reverse_orientation(handle)
        m2 = matrix_of_cycle(lp, Model.UNIT_DISK, tol)
        new = replace(state, matrix=m2, endpoints=None, theta=None)
        return _rebind_handle(new, lp, tol)

    if isinstance(g, (MoveEndpoint, SetTheta)):
        if state.mode != "theta_line":
            raise InvalidGestureForMode(f"{type(g).__name__} needs the theta-line mode")
        endpoints, theta = state.endpoints, state.theta
        if isinstance(g, MoveEndpoint):
            phis = list(endpoints)
            phis[g.which - 1] += g.dphi
            endpoints = (phis[0], phis[1])
        else:
            theta = g.theta
        m2 = _matrix_from_theta(endpoints, theta, tol)
        return replace(state, matrix=m2, endpoints=endpoints, theta=theta)

    raise ValueError(f"unsupported gesture: {g!r}")


def render_state(state: SessionState, tol: Tolerances | None = None) -> tuple[dict, dict]:
    """Scene payload and report for the current state."""
    tol = tol or active()
    mats = trajectory(state.matrix, state.steps, state.algo, state.conv, state.shift, tol)
    scene = scene_v2(mats, state.model, Viewport(), tol)
    report = build_report(state.matrix, tol)
    report["trajectory"] = trajectory_metrics(mats, tol)
    report["mode"] = state.mode
    report["handle"] = "partner" if state.handle_partner else "cycle"
    report["steps"] = state.steps
    report["options"] = {
        "algo": state.algo.value,
        "conv": state.conv.value,
        "shift": state.shift.value,
    }
    if state.theta is not None:
        report["theta_handle"] = state.theta
        report["endpoint_angles"] = list(state.endpoints)
    return scene_to_payload(scene), report


# --- session store --------------------------------------------------------------


class SessionStore:
    """Serialized per-session message processing; no cross-session state."""

    def __init__(self, tol: Tolerances | None = None):
        self._tol = tol or active()
        self._lock = threading.Lock()
        self._sessions: dict[str, dict] = {}
        self._counter = 0

    def create(self) -> str:
        with self._lock:
            self._counter += 1
            sid = f"s{self._counter}"
            self._sessions[sid] = {"lock": threading.Lock(), "state": None}
        return sid

    def message(self, sid: str, payload: dict) -> dict:
        with self._lock:
            record = self._sessions.get(sid)
        if record is None:
            return {"ok": False, "code": "unknown_session", "message": f"no session {sid!r}"}
        with record["lock"]:
            return self._dispatch(record, payload)

    def _dispatch(self, record: dict, payload: dict) -> dict:
        op = payload.get("op")
        try:
            if op == "init":
                entries = payload.get("matrix")
                if not isinstance(entries, list) or len(entries) != 4:
                    raise ValueError("init needs a four-element matrix")
                state = state_for_matrix(
                    Mat2(*(float(e) for e in entries)),
                    steps=int(payload.get("steps", 10)),
                    algo=Algo(payload.get("algo", "qr")),
                    conv=QrConvention(payload.get("conv", "plain")),
                    shift=ShiftStrategy(payload.get("shift", "none")),
                    tol=self._tol,
                )
            elif op == "gesture":
                if record["state"] is None:
                    return {"ok": False, "code": "not_initialized", "message": "send init first"}
                gesture = gesture_from_json(payload.get("gesture") or {})
                state = apply_gesture(record["state"], gesture, self._tol)
            elif op == "get":
                if record["state"] is None:
                    return {"ok": False, "code": "not_initialized", "message": "send init first"}
                state = record["state"]
            else:
                return {"ok": False, "code": "bad_request", "message": f"unknown op {op!r}"}
            scene, report = render_state(state, self._tol)
        except InvalidGestureForMode as exc:
            return {"ok": False, "code": "invalid_gesture_for_mode", "message": str(exc)}
        except DegenerateFigure as exc:
            return {"ok": False, "code": "degenerate_figure", "message": str(exc)}
        except (ValueError, CycleSightError) as exc:
            return {"ok": False, "code": "bad_request", "message": str(exc)}
        record["state"] = state
        return {"ok": True, "scene": scene, "report": report}


# --- transports --------------------------------------------------------------------


def _canon(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


class _Handler(BaseHTTPRequestHandler):
    store: SessionStore
    static_dir: Path | None = None

    def log_message(self, *args):  # quiet server
        pass

    def _send(self, code: int, body: bytes, content_type="application/json"):
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self):
        parts = [p for p in self.path.split("/") if p]
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        if parts == ["session"]:
            sid = self.store.create()
            self._send(200, _canon({"ok": True, "id": sid}))
            return
        if len(parts) == 3 and parts[0] == "session" and parts[2] == "message":
            try:
                payload = json.loads(raw or b"{}")
                if not isinstance(payload, dict):
                    raise ValueError("body must be a JSON object")
            except ValueError as exc:
                self._send(400, _canon({"ok": False, "code": "bad_request", "message": str(exc)}))
                return
            self._send(200, _canon(self.store.message(parts[1], payload)))
            return
        self._send(404, _canon({"ok": False, "code": "bad_request", "message": "no such route"}))

    def do_GET(self):
        if self.path in ("/healthz",):
            self._send(200, _canon({"ok": True}))
            return
        if self.static_dir is None:
            self._send(
                200,
                b"<html><body><h1>cyclesight bridge</h1>"
                b"<p>POST /session, then POST /session/{id}/message.</p></body></html>",
                "text/html",
            )
            return
        rel = self.path.lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        if not str(target).startswith(str(self.static_dir.resolve())) or not target.is_file():
            self._send(404, _canon({"ok": False, "code": "bad_request", "message": "not found"}))
            return
        ctype = {
            ".html": "text/html",
            ".js": "text/javascript",
            ".css": "text/css",
            ".map": "application/json",
            ".svg": "image/svg+xml",
        }.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), ctype)


def make_server(port: int = 0, static_dir: Path | None = None, tol: Tolerances | None = None):
    """Bound HTTP server (not yet serving); port 0 picks a free port."""
    handler = type("BoundHandler", (_Handler,), {"store": SessionStore(tol), "static_dir": static_dir})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_http(port: int, static_dir: Path | None = None, tol: Tolerances | None = None) -> None:
    server = make_server(port, static_dir, tol)
    print(f"LISTENING {server.server_address[1]}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def run_stdio(stdin=None, stdout=None, tol: Tolerances | None = None) -> None:
    """One JSON message per line; an implicit single session."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    store = SessionStore(tol)
    sid = store.create()
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            payload = json.loads(line)
            response = store.message(payload.pop("session", sid), payload)
        except ValueError as exc:
            response = {"ok": False, "code": "bad_request", "message": str(exc)}
        stdout.write(_canon(response).decode("utf-8") + "\n")
        stdout.flush()
