"""Numerical checks of the nesting lemma, the four-arc corner lemma and the separation steps.

Every check returns an :class:`OracleReport`. Its ``worst_residual`` is
oriented so that larger is worse: a penetration depth, a distance or a
relative error. Checks are deterministic given their inputs and seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .configuration import DEFAULT_MIN_GAP, GreatPolygon, SideDisk, side_disk, side_disks
from .geometry import (
    DEFAULT_TOL,
    TWO_PI,
    DegenerateError,
    Point,
    Tolerance,
    circle_circle_intersections,
    collinearity_residual,
    concyclic_residual,
    incenter,
    line_intersection,
    midpoint,
    normalize_angle,
    point_line_distance,
    point_on_circle,
)
from .intersection import disks_intersect


@dataclass
class OracleReport:
    claim: str
    trials: int = 0
    failures: int = 0
    worst_residual: float = -math.inf
    counterexample: dict[str, Any] | None = None

    def record(self, residual: float, failed: bool, example: dict[str, Any] | None = None) -> None:
        self.trials += 1
        if residual > self.worst_residual:
            self.worst_residual = residual
        if failed:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = example or {}

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def merge(self, other: OracleReport) -> OracleReport:
        self.trials += other.trials
        self.failures += other.failures
        self.worst_residual = max(self.worst_residual, other.worst_residual)
        if self.counterexample is None and other.counterexample is not None:
            self.counterexample = other.counterexample
        return self

    def to_dict(self) -> dict[str, Any]:
        w = self.worst_residual
        return {
            "claim": self.claim,
            "trials": self.trials,
            "failures": self.failures,
            "worst_residual": w if math.isfinite(w) else None,
            "counterexample": self.counterexample,
        }


def _ccw_span(a: float, b: float) -> float:
    return (b - a) % TWO_PI


# --- nesting of side disks sharing an endpoint ---------------------------------

def lemma1_check(a: float, b: float, c: float, samples: int = 10_000, seed: int = 0,
                 tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """Sample the part of the sub-arc disk inside the unit disk and test containment.

    With A, B, C at angles ``a``, ``b``, ``c`` and C strictly inside the
    counterclockwise arc A->B, let w1 be the side disk of arc AB and w2 that
    of arc AC. Every sampled point of (unit disk & w2) farther than
    ``10 * eps_geom`` from A must be strictly inside w1. The residual is
    ``|p - O1| - r1``.
    """
    span_ab, span_ac = _ccw_span(a, b), _ccw_span(a, c)
    if not (0.0 < span_ac < span_ab):
        raise ValueError("c must lie strictly inside the counterclockwise arc from a to b")
    if samples < 1:
        raise ValueError("samples must be positive")

    w1, w2 = side_disk(a, span_ab), side_disk(a, span_ac)
    pa = point_on_circle(a)
    rng = np.random.default_rng(seed)
    lo_x, hi_x = max(-1.0, w2.center.x - w2.radius), min(1.0, w2.center.x + w2.radius)
    lo_y, hi_y = max(-1.0, w2.center.y - w2.radius), min(1.0, w2.center.y + w2.radius)

    pts = np.empty((0, 2))
    while len(pts) < samples:
        batch = rng.uniform((lo_x, lo_y), (hi_x, hi_y), size=(max(4 * samples, 256), 2))
        inside = (np.einsum("ij,ij->i", batch, batch) <= 1.0) & (
            np.hypot(batch[:, 0] - w2.center.x, batch[:, 1] - w2.center.y) <= w2.radius
        )
        pts = np.concatenate([pts, batch[inside]])
    pts = pts[:samples]

    away = np.hypot(pts[:, 0] - pa.x, pts[:, 1] - pa.y) > 10.0 * tol.eps_geom
    resid = np.hypot(pts[:, 0] - w1.center.x, pts[:, 1] - w1.center.y) - w1.radius
    resid = resid[away]
    report = OracleReport("lemma1")
    report.trials = int(len(pts))
    if resid.size:
        report.worst_residual = float(resid.max())
    bad = resid >= -tol.eps_strict
    report.failures = int(bad.sum())
    if report.failures:
        k = int(np.argmax(resid))
        p = pts[away][k]
        report.counterexample = {"a": a, "b": b, "c": c, "seed": seed,
                                 "point": [float(p[0]), float(p[1])], "residual": float(resid[k])}
    return report


# --- four marked points -------------------------------------------------------

@dataclass(frozen=True)
class CornerPoints:
    """Second boundary intersections of consecutive side disks of A, B, C, D.

    X: arcs DA and CD (not D); Y: CD and BC (not C); Z: BC and AB (not B);
    T: AB and DA (not A). E is the meet of lines XZ and YT. ``disks`` holds
    the side disks of arcs AB, BC, CD, DA in that order.
    """

    X: Point
    Y: Point
    Z: Point
    T: Point
    E: Point
    angles: tuple[float, float, float, float] = field(repr=False)
    disks: tuple[SideDisk, SideDisk, SideDisk, SideDisk] = field(repr=False)


def quad_disks(A: float, B: float, C: float, D: float,
               min_gap: float = DEFAULT_MIN_GAP) -> tuple[SideDisk, SideDisk, SideDisk, SideDisk]:
    """Side disks of arcs AB, BC, CD, DA for four cyclically ordered points.

    The points may run either counterclockwise or clockwise.
    """
    angles = [normalize_angle(t) for t in (A, B, C, D)]
    fwd = [_ccw_span(angles[i], angles[(i + 1) % 4]) for i in range(4)]
    if abs(sum(fwd) - TWO_PI) < 1e-9:
        starts, spans = angles, fwd
    else:
        back = [_ccw_span(angles[(i + 1) % 4], angles[i]) for i in range(4)]
        if abs(sum(back) - TWO_PI) >= 1e-9:
            raise ValueError("A, B, C, D are not in cyclic order around the circle")
        starts, spans = [angles[(i + 1) % 4] for i in range(4)], back
    if min(spans) < min_gap:
        raise ValueError(f"gap {min(spans):.3g} between marked points is below min_gap={min_gap:.3g}")
    return tuple(side_disk(s, span, i) for i, (s, span) in enumerate(zip(starts, spans)))  # type: ignore[return-value]


def _second_intersection(d1: SideDisk, d2: SideDisk, shared: Point, tol: Tolerance) -> Point:
    pts = circle_circle_intersections(d1.center, d1.radius, d2.center, d2.radius, tol)
    if len(pts) < 2:
        raise DegenerateError("neighbouring side disks do not cross in two points")
    far = max(pts, key=shared.dist)
    if far.dist(shared) <= tol.eps_geom:
        raise DegenerateError("both intersection points coincide with the shared vertex")
    # The common chord is perpendicular to the line of centers, so the other
    # point is the mirror image of the shared one. This stays accurate when
    # the general solution loses digits (small arcs), which matters because
    # E is a meet of nearly parallel lines for thin rectangles.
    u = d2.center - d1.center
    t = ((shared.x - d1.center.x) * u.x + (shared.y - d1.center.y) * u.y) / (u.x * u.x + u.y * u.y)
    mirror = (d1.center + u * t) * 2.0 - shared
    if mirror.dist(far) > tol.eps_geom:
        raise DegenerateError("circle intersection and reflection disagree")
    return mirror


def corner_points(A: float, B: float, C: float, D: float, tol: Tolerance = DEFAULT_TOL,
                  min_gap: float = DEFAULT_MIN_GAP) -> CornerPoints:
    ab, bc, cd, da = quad_disks(A, B, C, D, min_gap)
    pa, pb, pc, pd = (point_on_circle(t) for t in (A, B, C, D))
    X = _second_intersection(da, cd, pd, tol)
    Y = _second_intersection(cd, bc, pc, tol)
    Z = _second_intersection(bc, ab, pb, tol)
    T = _second_intersection(ab, da, pa, tol)
    E = line_intersection(X, Z, Y, T)
    return CornerPoints(X, Y, Z, T, E, (A, B, C, D), (ab, bc, cd, da))


def _quad_example(corners: CornerPoints, **extra) -> dict[str, Any]:
    return {"angles": list(corners.angles), **extra}


def lemma2a_check(corners: CornerPoints, disks: Sequence[SideDisk] | None = None,
                  tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """The eight non-memberships: X,Y vs AB; Y,Z vs DA; Z,T vs CD; X,T vs BC.

    Residual is the penetration ``r - |p - center|``; a point fails when it
    is deeper than ``eps_geom`` inside the disk.
    """
    ab, bc, cd, da = disks if disks is not None else corners.disks
    X, Y, Z, T = corners.X, corners.Y, corners.Z, corners.T
    claims = [("X", X, "ab", ab), ("Y", Y, "ab", ab), ("Y", Y, "da", da), ("Z", Z, "da", da),
              ("Z", Z, "cd", cd), ("T", T, "cd", cd), ("X", X, "bc", bc), ("T", T, "bc", bc)]
    report = OracleReport("lemma2a")
    for pname, p, dname, disk in claims:
        depth = disk.radius - p.dist(disk.center)
        report.record(depth, depth > tol.eps_geom,
                      _quad_example(corners, point=pname, disk=dname, penetration=depth))
    return report


def lemma2b_rectangle_check(corners: CornerPoints, tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """XYZT is a rectangle (equal diagonals bisecting each other) and is concyclic.

    Raises :class:`DegenerateError` if three corners are collinear.
    """
    X, Y, Z, T = corners.X, corners.Y, corners.Z, corners.T
    residuals = {
        "midpoints": midpoint(X, Z).dist(midpoint(Y, T)),
        "diagonals": abs(X.dist(Z) - Y.dist(T)),
        "concyclic": concyclic_residual(X, Y, Z, T),
    }
    report = OracleReport("lemma2b")
    for name, r in residuals.items():
        report.record(r, r > tol.eps_geom, _quad_example(corners, check=name, residual=r))
    return report


def _corner_triangles(A: float, B: float, C: float, D: float):
    pa, pb, pc, pd = (point_on_circle(t) for t in (A, B, C, D))
    return pa, pb, pc, pd, {"X": (pa, pd, pc), "Y": (pd, pc, pb), "Z": (pc, pb, pa), "T": (pb, pa, pd)}


def incenter_coincidence_check(A: float, B: float, C: float, D: float, corners: CornerPoints,
                               tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """X, Y, Z, T are the incenters of ADC, DCB, CBA, BAD."""
    *_, triangles = _corner_triangles(A, B, C, D)
    report = OracleReport("incenter")
    for name, tri in triangles.items():
        r = getattr(corners, name).dist(incenter(*tri))
        report.record(r, r >= tol.eps_geom, _quad_example(corners, point=name, distance=r))
    return report


def collinearity_check(A: float, B: float, C: float, D: float, corners: CornerPoints,
                       tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """Each corner lies on the two lines joining an arc midpoint to the opposite vertex.

    For X this is F, X, A and W, X, C (F, W the centers of the CD and DA
    disks); Y, Z, T are checked the same way.
    """
    pa, pb, pc, pd = (point_on_circle(t) for t in (A, B, C, D))
    ab, bc, cd, da = (d.center for d in corners.disks)
    lines = [
        ("X", cd, pa), ("X", da, pc),
        ("Y", cd, pb), ("Y", bc, pd),
        ("Z", bc, pa), ("Z", ab, pc),
        ("T", ab, pd), ("T", da, pb),
    ]
    report = OracleReport("collinear")
    for name, center, vertex in lines:
        r = collinearity_residual(center, getattr(corners, name), vertex)
        report.record(r, r > tol.eps_geom, _quad_example(corners, point=name, residual=r))
    return report


def step1_check(A: float, B: float, C: float, D: float, tol: Tolerance = DEFAULT_TOL,
                corners: CornerPoints | None = None) -> OracleReport:
    """Some opposite pair of the four side disks is disjoint, and E lies on both center lines.

    Three records: the disjoint-pair existence (residual ``-max margin`` of
    the two opposite pairs) and the distances of E from lines FH and GW.
    """
    if corners is None:
        corners = corner_points(A, B, C, D, tol)
    ab, bc, cd, da = corners.disks
    rel1, rel2 = disks_intersect(ab, cd, tol), disks_intersect(bc, da, tol)
    report = OracleReport("step1")
    report.record(-max(rel1.margin, rel2.margin), not (rel1.disjoint or rel2.disjoint),
                  _quad_example(corners, check="disjoint_pair", margins=[rel1.margin, rel2.margin]))
    H, G, F, W = ab.center, bc.center, cd.center, da.center
    for name, p, q in (("E_on_FH", F, H), ("E_on_GW", G, W)):
        r = point_line_distance(corners.E, p, q)
        report.record(r, r >= tol.eps_geom, _quad_example(corners, check=name, distance=r))
    return report


def step2_check(poly: GreatPolygon, tol: Tolerance = DEFAULT_TOL) -> OracleReport:
    """If disks i and j meet, everything strictly between i->j misses everything strictly between j->i.

    One record per (k, l) pair that the claim forces apart; residual is
    ``-margin(k, l)``, a failure when the pair intersects.
    """
    n = poly.n
    if n < 4:
        raise ValueError(f"separation check needs n >= 4, got {n}")
    disks = side_disks(poly)
    rel = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rel[i][j] = rel[j][i] = disks_intersect(disks[i], disks[j], tol)

    report = OracleReport("step2")
    for i in range(n):
        for j in range(i + 2, n):
            if (j - i) == n - 1 or rel[i][j].disjoint:
                continue
            left = range(i + 1, j)
            right = [x % n for x in range(j + 1, i + n)]
            for k in left:
                for l in right:
                    r = rel[k][l]
                    report.record(-r.margin, not r.disjoint,
                                  {"angles": list(poly.vertex_angles), "pair": [i, j], "between": [k, l]})
    return report


QUAD_CHECKS = ("lemma2a", "lemma2b", "incenter", "collinear", "step1")


def quadruple_reports(A: float, B: float, C: float, D: float,
                      tol: Tolerance = DEFAULT_TOL) -> dict[str, OracleReport]:
    """All four-point oracles on one quadruple, sharing a single corner construction."""
    corners = corner_points(A, B, C, D, tol)
    return {
        "lemma2a": lemma2a_check(corners, tol=tol),
        "lemma2b": lemma2b_rectangle_check(corners, tol),
        "incenter": incenter_coincidence_check(A, B, C, D, corners, tol),
        "collinear": collinearity_check(A, B, C, D, corners, tol),
        "step1": step1_check(A, B, C, D, tol, corners),
    }


def merge_reports(claim: str, reports: Iterable[OracleReport]) -> OracleReport:
    total = OracleReport(claim)
    for r in reports:
        total.merge(r)
    return total
