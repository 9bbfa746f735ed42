"""cyclesight: 2x2 real matrices drawn as oriented cycles.

Two pictures are provided: PSD matrices as origin-centred ellipses, and
arbitrary nonzero matrices as an oriented cycle pair (det >= 0) or a
continuously-oriented hyperbolic line (det < 0), together with a QR/LR
iteration engine, deterministic SVG/JSON scene emission, scenario presets,
and an interactive session bridge.
"""

from .config import DEFAULT, Tolerances, active
from .liegeom import (
    CayleyDirection,
    Circle,
    CyclePair,
    HermitianCycle,
    Line,
    LiePoint,
    MatrixFigure,
    Model,
    Orientation,
    PointAtInfinity,
    PointCycle,
    ThetaLine,
    base_cycle,
    cayley,
    conjugate_figure,
    cycle_pair_of,
    cycle_to_lie,
    disk_point_of,
    figure_of,
    intersection_count,
    inversive_angle,
    lie_form,
    lie_to_cycle,
    matrix_of_cycle,
    moebius_apply,
    neg_det_figure,
    reverse_orientation,
    spear_of,
    spear_through,
)
from .mat2 import (
    Algo,
    EigenInfo,
    JordanKind,
    Mat2,
    QrConvention,
    ShiftStrategy,
    classify_jordan,
    cond2,
    eig2,
    lr_step_psd,
    predicates,
    qr_factor,
    qr_step,
    trajectory,
)
from .projline import ProjPoint
from .scenes import (
    Ellipse,
    Scene,
    Viewport,
    ellipse_of,
    emit_scene_json,
    emit_svg,
    scene_from_json,
    scene_v1,
    scene_v2,
)

__all__ = [
    "Algo",
    "CayleyDirection",
    "Circle",
    "CyclePair",
    "DEFAULT",
    "EigenInfo",
    "Ellipse",
    "HermitianCycle",
    "JordanKind",
    "Line",
    "LiePoint",
    "Mat2",
    "MatrixFigure",
    "Model",
    "Orientation",
    "PointAtInfinity",
    "PointCycle",
    "ProjPoint",
    "QrConvention",
    "Scene",
    "ShiftStrategy",
    "ThetaLine",
    "Tolerances",
    "Viewport",
    "active",
    "base_cycle",
    "cayley",
    "classify_jordan",
    "cond2",
    "conjugate_figure",
    "cycle_pair_of",
    "cycle_to_lie",
    "disk_point_of",
    "eig2",
    "ellipse_of",
    "emit_scene_json",
    "emit_svg",
    "figure_of",
    "intersection_count",
    "inversive_angle",
    "lie_form",
    "lie_to_cycle",
    "lr_step_psd",
    "matrix_of_cycle",
    "moebius_apply",
    "neg_det_figure",
    "predicates",
    "qr_factor",
    "qr_step",
    "reverse_orientation",
    "scene_from_json",
    "scene_v1",
    "scene_v2",
    "spear_of",
    "spear_through",
    "trajectory",
]
