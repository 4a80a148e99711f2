"""Spherical great polygons (a circle cut into arcs) and their side disks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .geometry import TWO_PI, Point, normalize_angle, point_on_circle

DEFAULT_MIN_GAP = 1e-6


@dataclass(frozen=True)
class GreatPolygon:
    """Vertices on the unit circle, stored as ascending angles in [0, 2*pi).

    Build instances with :func:`make_polygon` or :func:`regular_polygon`;
    the constructor itself does not validate.
    """

    vertex_angles: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.vertex_angles)

    def arc_lengths(self) -> list[float]:
        v = self.vertex_angles
        arcs = [v[i + 1] - v[i] for i in range(len(v) - 1)]
        arcs.append(v[0] + TWO_PI - v[-1])
        return arcs

    def rotated(self, phi: float) -> GreatPolygon:
        return GreatPolygon(tuple(sorted(normalize_angle(a + phi) for a in self.vertex_angles)))


@dataclass(frozen=True)
class SideDisk:
    """The disk centered at the midpoint of one arc, with the arc's endpoints on its boundary.

    The arc runs counterclockwise from ``start_angle`` to ``end_angle``
    (the last arc of a polygon wraps through 2*pi).
    """

    index: int
    start_angle: float
    end_angle: float
    arc_length: float
    center_angle: float
    center: Point
    radius: float


def side_disk(start: float, arc_length: float, index: int = 0) -> SideDisk:
    """Side disk of the counterclockwise arc of length ``arc_length`` starting at ``start``."""
    if not (0.0 < arc_length < TWO_PI):
        raise ValueError(f"arc length must lie in (0, 2pi), got {arc_length!r}")
    m = normalize_angle(start + 0.5 * arc_length)
    return SideDisk(
        index=index,
        start_angle=normalize_angle(start),
        end_angle=normalize_angle(start + arc_length),
        arc_length=arc_length,
        center_angle=m,
        center=point_on_circle(m),
        radius=2.0 * math.sin(0.25 * arc_length),
    )


def make_polygon(raw_angles: Sequence[float], min_gap: float = DEFAULT_MIN_GAP) -> GreatPolygon:
    """Normalise, sort and validate vertex angles (radians).

    Raises ``ValueError`` for fewer than two vertices or when two vertices
    are closer than ``min_gap`` around the circle.
    """
    if len(raw_angles) < 2:
        raise ValueError(f"a great polygon needs at least 2 vertices, got {len(raw_angles)}")
    if min_gap <= 0:
        raise ValueError("min_gap must be positive")
    angles = sorted(normalize_angle(float(a)) for a in raw_angles)
    poly = GreatPolygon(tuple(angles))
    gaps = poly.arc_lengths()
    k = min(range(len(gaps)), key=gaps.__getitem__)
    if gaps[k] < min_gap:
        raise ValueError(
            f"near-duplicate vertices: gap {gaps[k]:.3g} after vertex {k} is below min_gap={min_gap:.3g}"
        )
    return poly


def regular_polygon(n: int) -> GreatPolygon:
    """The equal-arc configuration with vertices at 2*pi*k/n."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return GreatPolygon(tuple(TWO_PI * k / n for k in range(n)))


def polygon_from_arcs(arcs: Sequence[float], start: float = 0.0,
                      min_gap: float = DEFAULT_MIN_GAP) -> GreatPolygon:
    """Polygon whose first vertex sits at ``start`` and whose arcs follow ``arcs`` counterclockwise."""
    total = math.fsum(arcs)
    if abs(total - TWO_PI) > 1e-9:
        raise ValueError(f"arcs must sum to 2pi, got {total!r}")
    angles, t = [], start
    for a in arcs:
        angles.append(t)
        t += a
    return make_polygon(angles, min_gap=min_gap)


def side_disks(poly: GreatPolygon) -> list[SideDisk]:
    """Side disks in cyclic order; disk ``i`` spans vertex ``i`` to vertex ``i+1``."""
    return [side_disk(a, arc, i) for i, (a, arc) in enumerate(zip(poly.vertex_angles, poly.arc_lengths()))]
