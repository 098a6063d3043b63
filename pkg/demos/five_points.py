"""
Nine subdivisions of five points
================================

Four corners of a square and one interior point.  Each height vector below
gives a different regular subdivision; the drawings go to ``five_points/``.
"""

import os
from fractions import Fraction

from hypersplit import PointConfiguration, negligible_points, regular_subdivision
from hypersplit.svg import render

pts = PointConfiguration(((0, 0), (3, 0), (0, 3), (3, 3), (1, 1)))

heights = {
    "diagonal_ae_q_above": (0, 1, 1, 0, 1),
    "one_split": (0, 0, 0, 0, 1),
    "diagonal_bc_q_above": (1, 0, 0, 1, 1),
    "diagonal_ae_q_negligible": (0, 1, 1, 0, 0),
    "trivial_q_negligible": (0, 0, 0, 0, 0),
    "diagonal_bc_q_negligible": (1, 0, 0, 1, Fraction(1, 3)),
    "four_triangles": (0, 0, 0, 0, -1),
    "three_split": (0, 0, 0, 3, -1),
    "fan_and_corner": (0, 0, 0, 4, -1),
}

os.makedirs("five_points", exist_ok=True)
for name, hs in heights.items():
    sub = regular_subdivision(pts, hs)
    cells = [sorted(c) for c in sub.cells]
    print(f"{name:26} {cells}  negligible={sorted(negligible_points(sub))}")
    with open(os.path.join("five_points", name + ".svg"), "w") as fh:
        fh.write(render(sub))
