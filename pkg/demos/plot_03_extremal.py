"""
Configurations that attain the bounds
=====================================

Equal arcs make every non-neighbouring pair disjoint (n(n-3)/2 pairs). One
long arc plus n-1 short ones makes the long arc's disk touch everything while
the rest only touch neighbours ((n-2)(n-3)/2 pairs).
"""

# %%
from sidedisks import analyze, star, triangle_config
from sidedisks.render import RenderSpec, render

print(" n  star  lower-config")
for n in range(3, 13):
    s, _ = star(n)
    t, _ = triangle_config(n)
    print(f"{n:2d}  {analyze(s).d:4d}  {analyze(t).d:4d}")

# %%
poly, expected = triangle_config(7)
print("red chords form a fan at disk 0:", analyze(poly).graph.red_diagonals)
render(poly, RenderSpec("triangle_7.svg"))
render(star(7)[0], RenderSpec("star_7.svg"))
