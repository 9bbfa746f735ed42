"""A gallery of matrices and their oriented-cycle portraits.

Any nonzero matrix with det >= 0 is a pair of oriented cycles: one cycle C
plus its reflect-and-reverse partner.  The portrait encodes a surprising
amount: where the pair meets the dark-blue base circle marks the real
eigendirections, a cycle through (-1, 0) means upper triangular, and the
identity sits exactly on the base circle.

Run:  python3 demos/02_cycle_pair_gallery.py   (writes demo02_<name>.svg)
"""
from pathlib import Path

from cyclesight import (
    Mat2,
    Model,
    base_cycle,
    cycle_pair_of,
    emit_svg,
    intersection_count,
    lie_to_cycle,
    scene_v2,
)

OUT = Path(__file__).resolve().parent

GALLERY = {
    "identity": Mat2.identity(),
    "rotation": Mat2(0.0, -1.0, 1.0, 0.0),
    "upper_triangular": Mat2(2.0, 1.0, 0.0, 1.0),
    "symmetric": Mat2(2.0, 1.0, 1.0, 2.0),
    "singular": Mat2(1.0, 1.0, 1.0, 1.0),
    "generic": Mat2(1.8, -0.6, 0.9, 1.1),
}

base = base_cycle(Model.UNIT_DISK)
for name, m in GALLERY.items():
    pair = cycle_pair_of(m, Model.UNIT_DISK)
    hits = intersection_count(pair.cycle, base)
    print(f"{name:>16}: C = {lie_to_cycle(pair.cycle)}")
    print(f"{'':>16}  meets base circle at {hits} point(s)")
    svg = emit_svg(scene_v2([m], Model.UNIT_DISK))
    (OUT / f"demo02_{name}.svg").write_bytes(svg)
print("wrote demo02_*.svg")
