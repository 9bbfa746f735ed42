"""Watching the unshifted QR iteration through the cycle picture.

Each step is an orthogonal similarity, so every iterate's cycle is a pure
rotation of the previous one about the origin; convergence shows up as the
fading trail settling onto a cycle through (-1, 0).  Three regimes:

  * separated real eigenvalues: steady convergence,
  * nearly equal eigenvalues: painfully slow (the near-identity trap),
  * nearly singular: convergence in a couple of steps.

Run:  python3 demos/03_qr_iteration_stories.py   (writes demo03_<name>.svg)
"""
import math
from pathlib import Path

from cyclesight import Mat2, Model, emit_svg, scene_v2, trajectory

OUT = Path(__file__).resolve().parent

STORIES = {
    "steady": (Mat2(2.0, 0.0, 1.0, 1.0), 30),
    "near_identity": (Mat2(1.001, 0.001, 0.001, 0.999), 40),
    "near_singular": (Mat2(1.0, 0.5, 0.5, 0.251), 12),
    "near_periodic": (Mat2(0.0, -1.44, 1.0, 2.4 * math.cos(2 * math.pi * 0.2482)), 28),
}

for name, (m, steps) in STORIES.items():
    mats = trajectory(m, steps)
    subdiag = [abs(t.c) for t in mats]
    print(f"{name:>14}: |c| {subdiag[0]:.3f} -> {subdiag[-1]:.2e} in {steps} steps")
    (OUT / f"demo03_{name}.svg").write_bytes(emit_svg(scene_v2(mats, Model.UNIT_DISK)))
print("wrote demo03_*.svg")
print("\nthe whole point of shifting: turn the near_identity regime into the")
print("near_singular one by subtracting a good eigenvalue estimate first.")
