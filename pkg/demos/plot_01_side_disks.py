"""
Side disks and the angular intersection test
============================================

Mark points on the unit circle; every arc between consecutive points gets a
disk centered at the arc midpoint that passes through both endpoints.
"""

# %%
import math

from sidedisks import analyze, make_polygon, side_disks
from sidedisks.geometry import circular_distance
from sidedisks.render import RenderSpec, render

poly = make_polygon([0.0, 0.9, 2.2, 3.0, 4.6])
for d in side_disks(poly):
    print(f"disk {d.index}: arc {d.arc_length:.3f} rad, center angle {d.center_angle:.3f}, radius {d.radius:.4f}")

# %%
# Two disks of the same polygon are disjoint exactly when
# sin(delta/2) > sin(arc_i/4) + sin(arc_j/4), delta being the angle between
# their centers. The Euclidean check below reaches the same verdicts.
disks = side_disks(poly)
a, b = disks[0], disks[2]
lhs = math.sin(0.5 * circular_distance(a.center_angle, b.center_angle))
rhs = math.sin(a.arc_length / 4) + math.sin(b.arc_length / 4)
print("angular:", "disjoint" if lhs > rhs else "intersecting")
print("euclidean:", "disjoint" if math.dist(a.center, b.center) > a.radius + b.radius else "intersecting")

# %%
rep = analyze(poly)
print(f"d = {rep.d}, bounds [{rep.lower_bound}, {rep.upper_bound}], red chords {rep.graph.red_diagonals}")
render(poly, RenderSpec("side_disks_5.svg"))
