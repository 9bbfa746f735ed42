"""Negative determinant: the figure is a line with a continuous orientation.

With det(M) < 0 the two eigendirections are real and distinct; the portrait
is the hyperbolic line joining them.  The orientation is no longer a binary
choice: every graph spear crosses the line at one fixed angle, which we
report as theta in [-1, 1].  The two arrowheads sit at angles +-pi/2(1+theta)
from the travel direction; at theta = +-1 they merge and the matrix is
singular.

The printed closed form for theta disagrees with the measured angle (on
diag(1,-1) it says -1 where the geometry plainly gives a right angle, i.e.
theta = 0); reports carry both values, drawings use the measurement.

Run:  python3 demos/04_negative_determinant_line.py
"""
from pathlib import Path

from cyclesight import Mat2, Model, QrConvention, emit_svg, neg_det_figure, scene_v2, trajectory

OUT = Path(__file__).resolve().parent

print("theta across a sweep of diag(1, -t):")
for t in (0.25, 0.5, 1.0, 2.0, 4.0):
    fig = neg_det_figure(Mat2.diag(1.0, -t))
    print(f"  t={t:4.2f}: theta={fig.theta:+.4f}  (printed formula: {fig.theta_formula:+.4f})")

m = Mat2(1.0, 0.7, 0.5, -1.2)
fig = neg_det_figure(m, Model.UNIT_DISK)
print(f"\ngeneric det<0 matrix: theta={fig.theta:+.4f}, endpoints at "
      f"{[(round(e.x, 3), round(e.y, 3)) for e in fig.endpoints]}")
(OUT / "demo04_theta_line.svg").write_bytes(emit_svg(scene_v2([m], Model.UNIT_DISK)))

# the flip-convention trichotomy in one picture each
for name, m0 in (
    ("trace_negative", Mat2(-1.5, 0.3, 0.3, 0.8)),
    ("trace_zero", Mat2(0.6, 1.1, 0.8, -0.6)),
    ("trace_positive", Mat2(1.5, 0.3, 0.3, -0.8)),
):
    mats = trajectory(m0, 50, conv=QrConvention.NEG_DET_FLIP)
    gap = max(abs(x - y) for x, y in zip(mats[-1].entries(), mats[-2].entries()))
    verdict = "converged" if gap < 1e-8 else "oscillating"
    print(f"{name:>16}: {verdict} (last step moved {gap:.2e})")
    (OUT / f"demo04_{name}.svg").write_bytes(emit_svg(scene_v2(mats, Model.UNIT_DISK)))
print("wrote demo04_*.svg")
