"""Side disks of a circle partitioned into arcs.

Build a configuration with :func:`make_polygon`, :func:`regular_polygon`,
:func:`star` or :func:`triangle_config`, then :func:`analyze` it to count the
disjoint side-disk pairs and check them against ``(n-2)(n-3)/2`` and
``n(n-3)/2``. :mod:`sidedisks.oracles` holds numerical checks of the
supporting geometric facts and :func:`harness` runs everything on random
configurations.
"""

from .configuration import GreatPolygon, SideDisk, make_polygon, regular_polygon, side_disks
from .extremal import HarnessReport, harness, random_polygon, run_lemma, star, triangle_config
from .geometry import DEFAULT_TOL, DegenerateError, Point, Tolerance
from .intersection import (
    AnalysisReport,
    IntersectionGraph,
    Kind,
    Relation,
    analyze,
    chords_cross,
    disjoint_pair_count,
    disks_intersect,
    intersection_graph,
    red_noncrossing,
    theorem_bounds,
)
from .oracles import CornerPoints, OracleReport, corner_points

__all__ = [
    "AnalysisReport", "CornerPoints", "DEFAULT_TOL", "DegenerateError", "GreatPolygon",
    "HarnessReport", "IntersectionGraph", "Kind", "OracleReport", "Point", "Relation",
    "SideDisk", "Tolerance", "analyze", "chords_cross", "corner_points", "disjoint_pair_count",
    "disks_intersect", "harness", "intersection_graph", "make_polygon", "random_polygon",
    "red_noncrossing", "regular_polygon", "run_lemma", "side_disks", "star", "theorem_bounds",
    "triangle_config",
]
