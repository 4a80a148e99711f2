"""Planar primitives on and around the unit circle.

Everything here works in double precision with the two-level tolerance held
by :class:`Tolerance`: ``eps_geom`` classifies (tangent or not, on a line or
not) and ``eps_strict`` guards internal self-consistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

#: Angles are plain floats in radians; :func:`normalize_angle` maps them to [0, 2*pi).
Angle = float


class DegenerateError(ValueError):
    """Raised when a construction has no well-defined answer (collinear triangle, shared centers)."""


@dataclass(frozen=True)
class Tolerance:
    eps_geom: float = 1e-9
    eps_strict: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.eps_strict < self.eps_geom < 1e-3):
            raise ValueError(
                f"need 0 < eps_strict < eps_geom < 1e-3, got "
                f"eps_strict={self.eps_strict!r}, eps_geom={self.eps_geom!r}"
            )


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def rotated(self, phi: float) -> Point:
        c, s = math.cos(phi), math.sin(phi)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)


def cross(u: Point, v: Point) -> float:
    return u.x * v.y - u.y * v.x


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def normalize_angle(theta: float) -> Angle:
    """Reduce ``theta`` to [0, 2*pi)."""
    t = theta % TWO_PI
    # x % 2pi can round up to exactly 2pi for tiny negative x
    return 0.0 if t >= TWO_PI else t


def circular_distance(alpha: float, beta: float) -> float:
    """Shorter way round the circle between two angles, in [0, pi]."""
    d = abs(alpha - beta) % TWO_PI
    return min(d, TWO_PI - d)


def point_on_circle(theta: float) -> Point:
    return Point(math.cos(theta), math.sin(theta))


def chord_length(alpha: float, beta: float) -> float:
    """Length of the chord joining the unit-circle points at ``alpha`` and ``beta``."""
    return 2.0 * math.sin(0.5 * circular_distance(alpha, beta))


def circle_circle_intersections(
    c1: Point, r1: float, c2: Point, r2: float, tol: Tolerance = DEFAULT_TOL
) -> list[Point]:
    """Common points of the circles (c1, r1) and (c2, r2).

    Returns two points for a proper crossing, one when the circles are tangent
    within ``tol.eps_geom`` (externally or internally), and none otherwise.

    Raises
    ------
    DegenerateError
        If the centers coincide within ``tol.eps_strict``.
    """
    if r1 <= 0 or r2 <= 0:
        raise ValueError("radii must be positive")
    d = c1.dist(c2)
    if d <= tol.eps_strict:
        raise DegenerateError("coincident circle centers")

    outer = d - (r1 + r2)
    inner = d - abs(r1 - r2)
    tangent = abs(outer) <= tol.eps_geom or abs(inner) <= tol.eps_geom
    if not tangent and (outer > 0 or inner < 0):
        return []

    ux, uy = (c2.x - c1.x) / d, (c2.y - c1.y) / d
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    base = Point(c1.x + a * ux, c1.y + a * uy)
    if tangent:
        return [base]
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    return [
        Point(base.x - h * uy, base.y + h * ux),
        Point(base.x + h * uy, base.y - h * ux),
    ]


def _sine_of_angle(p: Point, q: Point, r: Point) -> float:
    u, v = q - p, r - p
    denom = u.norm() * v.norm()
    return 0.0 if denom == 0.0 else abs(cross(u, v)) / denom


def incenter(a: Point, b: Point, c: Point) -> Point:
    """Incenter of triangle ``abc`` as the side-length weighted vertex average."""
    if _sine_of_angle(a, b, c) <= DEFAULT_TOL.eps_strict:
        raise DegenerateError("incenter of a degenerate (collinear) triangle")
    la, lb, lc = b.dist(c), c.dist(a), a.dist(b)
    s = la + lb + lc
    return Point((la * a.x + lb * b.x + lc * c.x) / s, (la * a.y + lb * b.y + lc * c.y) / s)


def collinearity_residual(p: Point, q: Point, r: Point) -> float:
    """Twice the triangle area, normalised by ``max(1, |pq| |pr|)``."""
    u, v = q - p, r - p
    return abs(cross(u, v)) / max(1.0, u.norm() * v.norm())


def collinear(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    return collinearity_residual(p, q, r) <= tol.eps_geom


def circumcircle(p1: Point, p2: Point, p3: Point) -> tuple[Point, float]:
    """Center and radius of the circle through three points."""
    if _sine_of_angle(p1, p2, p3) <= DEFAULT_TOL.eps_strict:
        raise DegenerateError("circumcircle of collinear points is undefined")
    # translate to p1 for conditioning
    bx, by = p2.x - p1.x, p2.y - p1.y
    cx, cy = p3.x - p1.x, p3.y - p1.y
    det = 2.0 * (bx * cy - by * cx)
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ox = (cy * b2 - by * c2) / det
    oy = (bx * c2 - cx * b2) / det
    return Point(p1.x + ox, p1.y + oy), math.hypot(ox, oy)


def concyclic_residual(p1: Point, p2: Point, p3: Point, p4: Point) -> float:
    """Relative distance of ``p4`` from the circumcircle of the first three points."""
    center, radius = circumcircle(p1, p2, p3)
    return abs(p4.dist(center) - radius) / radius


def concyclic(p1: Point, p2: Point, p3: Point, p4: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    return concyclic_residual(p1, p2, p3, p4) <= tol.eps_geom


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    """Meet of the lines p1p2 and q1q2."""
    u, v = p2 - p1, q2 - q1
    den = cross(u, v)
    if abs(den) <= DEFAULT_TOL.eps_strict * u.norm() * v.norm():
        raise DegenerateError("lines are parallel")
    t = cross(q1 - p1, v) / den
    return Point(p1.x + t * u.x, p1.y + t * u.y)


def point_line_distance(p: Point, a: Point, b: Point) -> float:
    """Distance from ``p`` to the line through ``a`` and ``b``."""
    u = b - a
    n = u.norm()
    if n == 0.0:
        raise DegenerateError("line through coincident points")
    return abs(cross(u, p - a)) / n
