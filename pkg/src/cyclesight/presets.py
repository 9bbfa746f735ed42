"""Scenario presets: twelve named cases covering the iteration regimes.

The matrices are chosen (and verified programmatically, see verify_preset)
to land in each qualitative regime:

  case01  two real eigendirections, converging
  case02  defective (one eigendirection), converging slowly
  case03  complex pair, non-converging
  case04  attractive triangular fixed point
  case05  its orientation reversal: repulsive fixed point
  case06  near the identity: very slow convergence
  case07  nearly singular: very fast convergence
  case08  complex pair, near-periodic orbit
  case09  near-orthogonal: almost a fixed point
  case10  det < 0, trace < 0: converges (flip convention)
  case11  det < 0, trace = 0: exact 2-cycle
  case12  det < 0, trace > 0: converges to the mirrored limit
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .config import Tolerances, active
from .liegeom import (
    Circle,
    Line,
    Model,
    base_cycle,
    cycle_locus_distance,
    cycle_pair_of,
    intersection_count,
    lie_to_cycle,
)
from .mat2 import Algo, Mat2, QrConvention, ShiftStrategy, qr_step, trajectory
from .report import _num, detect_period


@dataclass(frozen=True)
class Preset:
    name: str
    matrix: Mat2
    steps: int
    algo: Algo = Algo.QR
    conv: QrConvention = QrConvention.PLAIN
    shift: ShiftStrategy = ShiftStrategy.NONE
    model: Model = Model.UNIT_DISK
    note: str = ""


PRESETS: dict[str, Preset] = {
    p.name: p
    for p in (
        Preset("case01", Mat2(2.0, 0.0, 1.0, 1.0), 30, note="real distinct, converging"),
        Preset("case02", Mat2(1.5, 1.0, -0.25, 0.5), 40, note="defective, slow"),
        Preset("case03", Mat2(1.0, -2.0, 1.0, -0.5), 24, note="complex pair, no convergence"),
        Preset("case04", Mat2(2.0, 1.0, 0.0, 1.0), 20, note="attractive fixed point"),
        Preset("case05", Mat2(1.0, 1.0, 0.0, 2.0), 20, note="repulsive fixed point"),
        Preset("case06", Mat2(1.001, 0.001, 0.001, 0.999), 40, note="near identity, very slow"),
        Preset("case07", Mat2(1.0, 0.5, 0.5, 0.251), 12, note="nearly singular, very fast"),
        # eigenvalue angle just off a quarter turn: a slowly drifting orbit
        Preset(
            "case08",
            Mat2(0.0, -1.44, 1.0, 2.0 * 1.2 * math.cos(2.0 * math.pi * 0.2482)),
            28,
            note="complex pair, near-periodic",
        ),
        Preset(
            "case09",
            Mat2(
                math.cos(0.7) + 0.02,
                -math.sin(0.7),
                math.sin(0.7),
                math.cos(0.7) - 0.01,
            ),
            20,
            note="near orthogonal, near fixed point",
        ),
        Preset(
            "case10",
            Mat2(-1.5, 0.3, 0.3, 0.8),
            50,
            conv=QrConvention.NEG_DET_FLIP,
            note="det<0, trace<0: converges",
        ),
        Preset(
            "case11",
            Mat2(0.6, 1.1, 0.8, -0.6),
            50,
            conv=QrConvention.NEG_DET_FLIP,
            note="det<0, trace=0: oscillates",
        ),
        Preset(
            "case12",
            Mat2(1.5, 0.3, 0.3, -0.8),
            50,
            conv=QrConvention.NEG_DET_FLIP,
            note="det<0, trace>0: converges elsewhere",
        ),
    )
}


def preset_trajectory(p: Preset, tol: Tolerances | None = None) -> list[Mat2]:
    return trajectory(p.matrix, p.steps, p.algo, p.conv, p.shift, tol or active())


def _gap(a: Mat2, b: Mat2) -> float:
    return max(abs(x - y) for x, y in zip(a.entries(), b.entries()))


def verify_preset(name: str, tol: Tolerances | None = None) -> dict:
    """Check the preset against its qualitative marker; returns raw numbers.

    The returned dict always carries an "ok" verdict so the determinism
    goldens double as regression tests for the regime claims.
    """
    tol = tol or active()
    p = PRESETS[name]
    traj = preset_trajectory(p, tol)
    m0, last, prev = traj[0], traj[-1], traj[-2]
    out: dict = {"name": name, "note": p.note}
    if m0.det() >= 0.0:
        pair = cycle_pair_of(m0, Model.UNIT_DISK, tol)
        out["intersections"] = intersection_count(pair.cycle, base_cycle(Model.UNIT_DISK), tol=tol)
        out["pair_coincident"] = pair.cycle.almost_equal(pair.partner, 1e-3)
    converged = _gap(last, prev)
    out["final_gap"] = _num(converged)
    out["period"] = detect_period(traj)

    if name == "case01":
        out["ok"] = out["intersections"] == 2 and converged < 1e-8
    elif name == "case02":
        out["ok"] = out["intersections"] == 1 and converged < 1e-3
    elif name == "case03":
        out["ok"] = out["intersections"] == 0 and converged > 1e-3
    elif name in ("case04", "case05"):
        fixed = _gap(qr_step(m0, p.conv, p.shift, tol), m0) <= 1e-12
        eps = 1e-3
        pert = Mat2(m0.a, m0.b, m0.c + eps, m0.d)
        moved = abs(qr_step(pert, p.conv, p.shift, tol).c)
        if name == "case04":
            out["perturbation_shrinks"] = moved < eps
            out["ok"] = fixed and moved < eps
        else:
            out["perturbation_grows"] = moved > eps
            out["ok"] = fixed and moved > eps
    elif name == "case06":
        cyc = lie_to_cycle(cycle_pair_of(m0, Model.UNIT_DISK, tol).cycle, tol)
        near_base = isinstance(cyc, Circle) and abs(cyc.radius - 1.0) + math.hypot(cyc.cx, cyc.cy) < 0.05
        out["near_identity"] = near_base
        out["slow"] = abs(last.c) > 1e-8  # still not converged after all steps
        out["ok"] = near_base and out["slow"]
    elif name == "case07":
        pair = cycle_pair_of(m0, Model.UNIT_DISK, tol)
        out["near_coincident"] = pair.cycle.almost_equal(pair.partner, 0.15)
        out["fast"] = abs(last.c) < 1e-12
        out["ok"] = out["near_coincident"] and out["fast"]
    elif name == "case08":
        period = detect_period(traj, max_period=12, rel=5e-2)
        out["near_period"] = period
        out["ok"] = out["intersections"] == 0 and period is not None and period > 1
    elif name == "case09":
        drifts = [_gap(a, b) for a, b in zip(traj, traj[1:])]
        out["max_step_drift"] = _num(max(drifts))
        out["ok"] = max(drifts) < 0.06
    elif name == "case10":
        out["trace_sign"] = -1
        out["ok"] = converged < 1e-8 and last.trace() < 0.0
    elif name == "case11":
        exact2 = all(_gap(traj[k], traj[k + 2]) <= 1e-9 for k in range(len(traj) - 2))
        genuine = _gap(traj[0], traj[1]) > 1e-3
        out["exact_period_two"] = exact2 and genuine
        out["ok"] = exact2 and genuine
    elif name == "case12":
        other = preset_trajectory(PRESETS["case10"], tol)[-1]
        out["trace_sign"] = 1
        out["different_limit"] = _gap(last, other) > 1e-3
        out["ok"] = converged < 1e-8 and last.trace() > 0.0 and out["different_limit"]
    else:
        out["ok"] = False
    return out
