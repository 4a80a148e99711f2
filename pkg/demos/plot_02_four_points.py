"""
Four marked points: the corner rectangle
========================================

Consecutive side disks of four points meet a second time in X, Y, Z, T.
Those points form a rectangle, and each one is the incenter of a triangle
on three of the marked points.
"""

# %%
import math

from sidedisks.geometry import incenter, point_on_circle
from sidedisks.oracles import corner_points, quadruple_reports
from sidedisks.render import RenderSpec, render
from sidedisks import make_polygon

A, B, C, D = 0.3, 1.4, 3.5, 5.0
c = corner_points(A, B, C, D)
print("X, Y, Z, T =", c.X, c.Y, c.Z, c.T)
print("diagonals:", c.X.dist(c.Z), c.Y.dist(c.T))

# %%
pa, pc, pd = (point_on_circle(t) for t in (A, C, D))
print("X vs incenter(A, D, C):", c.X.dist(incenter(pa, pd, pc)))

# %%
for name, r in quadruple_reports(A, B, C, D).items():
    print(f"{name:10s} failures={r.failures} worst residual={r.worst_residual:.2e}")

# %%
# The square case gives X at -(sqrt(2) - 1) on the x axis.
sq = corner_points(math.pi / 2, 0.0, 3 * math.pi / 2, math.pi)
print(sq.X.x, -(math.sqrt(2) - 1))
render(make_polygon([A, B, C, D]), RenderSpec("four_points.svg"))
