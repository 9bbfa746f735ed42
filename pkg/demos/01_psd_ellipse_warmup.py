"""Warm-up picture: a PSD matrix as the ellipse it maps the unit circle to.

The semi-axes are the eigenvalues, so one LR step and one QR step leave the
shape alone and only steer the axes toward the coordinate grid.  The scene
uses the classic colouring: blue input, green LR step, red QR step.

Run:  python3 demos/01_psd_ellipse_warmup.py  (writes demo01_compare.svg,
demo01_fade.svg)
"""
import math
from pathlib import Path

from cyclesight import Algo, Mat2, ellipse_of, emit_svg, lr_step_psd, qr_step, scene_v1, trajectory

OUT = Path(__file__).resolve().parent

m = Mat2(2.0, 1.0, 1.0, 2.0)
print("input matrix:", m)
e = ellipse_of(m)
print(f"ellipse: semi-axes {e.semi_major:.3f} / {e.semi_minor:.3f}, "
      f"major axis at {math.degrees(e.angle):.1f} degrees")

one_lr = lr_step_psd(m)
one_qr = qr_step(m)
print("after one LR step:", one_lr)
print("after one QR step:", one_qr)
print("eigenvalue sum is preserved:", m.trace(), "=", one_lr.trace(), "=", one_qr.trace())

compare = scene_v1([m, one_lr, one_qr], mode="compare")
(OUT / "demo01_compare.svg").write_bytes(emit_svg(compare))

# a longer LR run: the ellipse swings its major axis onto the x-axis
fade = scene_v1(trajectory(m, 12, Algo.LR), mode="fade")
(OUT / "demo01_fade.svg").write_bytes(emit_svg(fade))
print("wrote demo01_compare.svg and demo01_fade.svg")

# attraction: major axis along x converges fast, along y it is repulsive
aligned = Mat2.diag(3.0, 1.0)
crossed = Mat2.diag(1.0, 3.0)
print("\naligned diag(3,1) is a fixed point:", lr_step_psd(aligned) == aligned)
print("crossed diag(1,3) after 8 LR steps:", trajectory(crossed, 8, Algo.LR)[-1])
