"""Classification reports and trajectory diagnostics.

One builder feeds the CLI (flattened form), the preset reports, and the
interactive bridge (nested form).  All output dictionaries contain only
JSON-safe values; infinities become null.
"""
from __future__ import annotations

import json
import math

from .config import Tolerances, active
from .errors import DegeneratePoint
from .liegeom import (
    Circle,
    Line,
    Model,
    base_cycle,
    cycle_locus_distance,
    cycle_pair_of,
    intersection_count,
    lie_to_cycle,
    neg_det_figure,
)
from .mat2 import Mat2, classify_jordan, cond2, eig2, predicates


def _num(x: float):
    if x is None or math.isinf(x) or math.isnan(x):
        return None
    if x == 0.0:
        return 0.0
    return float(f"{x:.12g}")


def build_report(m: Mat2, tol: Tolerances | None = None) -> dict:
    """Eigenstructure, predicates, condition number, and theta values."""
    tol = tol or active()
    info = eig2(m, tol)
    theta_oracle = None
    theta_formula = None
    if m.det() < 0.0:
        try:
            fig = neg_det_figure(m, Model.X_AXIS, tol)
            theta_oracle = fig.theta
            theta_formula = fig.theta_formula
        except DegeneratePoint:
            pass
    return {
        "jordan": classify_jordan(m, tol).value,
        "trace": _num(m.trace()),
        "det": _num(m.det()),
        "cond": _num(cond2(m, tol)),
        "eigenvalues": [
            [_num(info.lambda1.real), _num(info.lambda1.imag)],
            [_num(info.lambda2.real), _num(info.lambda2.imag)],
        ],
        "predicates": predicates(m, tol),
        "theta_oracle": _num(theta_oracle),
        "theta_formula": _num(theta_formula),
    }


def flatten_report(report: dict) -> dict:
    """Predicates hoisted to the top level (the classify output shape)."""
    out = {k: v for k, v in report.items() if k != "predicates"}
    out.update(report["predicates"])
    return out


def detect_period(matrices: list[Mat2], max_period: int = 8, rel: float = 1e-6) -> int | None:
    """Smallest period of the trajectory tail, or None if aperiodic."""
    if len(matrices) < 4:
        return None
    scale = max(max(abs(e) for e in m.entries()) for m in matrices) or 1.0
    tail = matrices[len(matrices) // 2 :]
    for p in range(1, max_period + 1):
        if len(tail) <= p:
            break
        ok = all(
            max(abs(x - y) for x, y in zip(a.entries(), b.entries())) <= rel * scale
            for a, b in zip(tail, tail[p:])
        )
        if ok:
            return p
    return None


def trajectory_metrics(matrices: list[Mat2], tol: Tolerances | None = None) -> dict:
    """Raw convergence numbers for a trajectory (no verdicts)."""
    tol = tol or active()
    last, prev = matrices[-1], matrices[-2] if len(matrices) > 1 else matrices[-1]
    final_gap = max(abs(x - y) for x, y in zip(last.entries(), prev.entries()))
    subdiag = [abs(m.c) for m in matrices]
    disk_marker = None
    first = matrices[0]
    if last.det() >= 0.0 and not last.is_zero():
        cyc = lie_to_cycle(cycle_pair_of(last, Model.UNIT_DISK, tol).cycle, tol)
        if isinstance(cyc, (Circle, Line)):
            disk_marker = cycle_locus_distance(cyc, (-1.0, 0.0))
    intersections = None
    if first.det() >= 0.0 and not first.is_zero():
        intersections = intersection_count(
            cycle_pair_of(first, Model.UNIT_DISK, tol).cycle, base_cycle(Model.UNIT_DISK), tol=tol
        )
    return {
        "steps": len(matrices) - 1,
        "final_gap": _num(final_gap),
        "subdiagonal_first": _num(subdiag[0]),
        "subdiagonal_last": _num(subdiag[-1]),
        "distance_to_minus_one": _num(disk_marker) if disk_marker is not None else None,
        "intersections_with_base": intersections,
        "period": detect_period(matrices),
    }


def canonical_json(payload: dict) -> bytes:
    """Sorted keys, compact separators, trailing newline."""
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")
