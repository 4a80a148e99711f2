import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sidedisks.configuration import regular_polygon
from sidedisks.extremal import random_polygon, triangle_config
from sidedisks.geometry import DegenerateError, Point, incenter
from sidedisks.oracles import (
    OracleReport,
    collinearity_check,
    corner_points,
    incenter_coincidence_check,
    lemma1_check,
    lemma2a_check,
    lemma2b_rectangle_check,
    quad_disks,
    step1_check,
    step2_check,
)

SQUARE = (math.pi / 2, 0.0, 3 * math.pi / 2, math.pi)  # A, B, C, D as in the four-point figure
S = math.sqrt(2) - 1


def random_quad(seed):
    return random_polygon(4, seed).vertex_angles


def test_report_bookkeeping():
    r = OracleReport("x")
    r.record(-1.0, False)
    assert r.ok and r.counterexample is None
    r.record(0.5, True, {"k": 1})
    r.record(0.2, True, {"k": 2})
    assert (r.trials, r.failures, r.worst_residual, r.counterexample) == (3, 2, 0.5, {"k": 1})
    assert r.merge(OracleReport("x", 1, 0, 9.0)).worst_residual == 9.0


# --- lemma 1 ---

def test_lemma1_examples():
    assert lemma1_check(0, math.pi, math.pi / 2, 10_000, 5).failures == 0
    small = lemma1_check(0, math.pi, 0.01, 10_000, 5)
    assert small.failures == 0 and small.trials == 10_000
    with pytest.raises(ValueError):
        lemma1_check(0, math.pi, math.pi, 10, 0)
    with pytest.raises(ValueError):
        lemma1_check(0, math.pi, 4.0, 10, 0)


def test_lemma1_deterministic():
    a = lemma1_check(1.0, 4.0, 2.0, 2000, 9)
    b = lemma1_check(1.0, 4.0, 2.0, 2000, 9)
    assert a == b


def test_lemma1_wraps_through_zero():
    assert lemma1_check(5.5, 1.0, 6.2, 5000, 1).failures == 0


# --- corner points ---

def test_square_corner_points():
    c = corner_points(*SQUARE)
    expected = [Point(-S, 0), Point(0, -S), Point(S, 0), Point(0, S)]
    for p, q in zip((c.X, c.Y, c.Z, c.T), expected):
        assert p.dist(q) < 1e-12
    assert c.E.dist(Point(0, 0)) < 1e-12
    # X is the incenter of A, D, C, computed independently
    assert c.X.dist(incenter(Point(0, 1), Point(-1, 0), Point(0, -1))) < 1e-12


def test_orientation_does_not_matter():
    ccw = corner_points(0.0, math.pi / 2, math.pi, 3 * math.pi / 2)
    cw = corner_points(*SQUARE)
    assert {(round(p.x, 12), round(p.y, 12)) for p in (ccw.X, ccw.Y, ccw.Z, ccw.T)} == \
        {(round(p.x, 12) + 0.0, round(p.y, 12) + 0.0) for p in (cw.X, cw.Y, cw.Z, cw.T)}


def test_corner_points_errors():
    with pytest.raises(ValueError):
        corner_points(0.0, 1e-9, 2.0, 4.0)
    with pytest.raises(ValueError):
        corner_points(0.0, 2.0, 1.0, 4.0)  # not in cyclic order


@settings(max_examples=200)
@given(st.integers(0, 2**31))
def test_corners_on_circles_and_E_is_midpoint(seed):
    A, B, C, D = random_quad(seed)
    c = corner_points(A, B, C, D)
    ab, bc, cd, da = c.disks
    for p, d1, d2 in ((c.X, da, cd), (c.Y, cd, bc), (c.Z, bc, ab), (c.T, ab, da)):
        assert abs(p.dist(d1.center) - d1.radius) < 1e-9
        assert abs(p.dist(d2.center) - d2.radius) < 1e-9
    mid_xz = Point((c.X.x + c.Z.x) / 2, (c.X.y + c.Z.y) / 2)
    mid_yt = Point((c.Y.x + c.T.x) / 2, (c.Y.y + c.T.y) / 2)
    assert c.E.dist(mid_xz) < 1e-9 and c.E.dist(mid_yt) < 1e-9


@given(st.integers(0, 2**31), st.floats(0, 2 * math.pi))
def test_corner_points_rotate(seed, phi):
    quad = random_quad(seed)
    a = corner_points(*quad)
    b = corner_points(*(t + phi for t in quad))
    for name in "XYZT":
        assert getattr(b, name).dist(getattr(a, name).rotated(phi)) < 1e-12
    # E meets two nearly parallel diagonals when XYZT is thin; scale by the aspect ratio
    aspect = a.X.dist(a.Z) / min(a.X.dist(a.Y), a.Y.dist(a.Z))
    assert b.E.dist(a.E.rotated(phi)) < 1e-12 * max(1.0, aspect)


# --- four-point lemma ---

def test_lemma2a_square():
    c = corner_points(*SQUARE)
    r = lemma2a_check(c)
    assert r.trials == 8 and r.failures == 0
    assert r.worst_residual < 0  # every point strictly outside its disk
    # independent distance: X=(-S,0) to the AB disk centered at angle pi/4
    assert math.dist((-S, 0), (math.cos(math.pi / 4), math.sin(math.pi / 4))) > 2 * math.sin(math.pi / 8)


def test_lemma2a_detects_injected_point():
    c = corner_points(*SQUARE)
    bad = replace(c, X=c.disks[0].center)
    r = lemma2a_check(bad, c.disks)
    assert r.failures == 1 and r.counterexample["point"] == "X"


def test_lemma2b_square():
    c = corner_points(*SQUARE)
    assert lemma2b_rectangle_check(c).failures == 0
    sides = [c.X.dist(c.Y), c.Y.dist(c.Z), c.Z.dist(c.T), c.T.dist(c.X)]
    assert sides == pytest.approx([S * math.sqrt(2)] * 4)
    assert c.X.dist(c.E) == pytest.approx(S)


def test_lemma2b_degenerate_corners():
    c = corner_points(*SQUARE)
    bad = replace(c, X=Point(-1, 0), Y=Point(0, 0), Z=Point(1, 0))
    with pytest.raises(DegenerateError):
        lemma2b_rectangle_check(bad)


def test_incenter_check_square_and_sensitivity():
    c = corner_points(*SQUARE)
    r = incenter_coincidence_check(*SQUARE, c)
    assert r.failures == 0 and r.worst_residual < 1e-12
    other = corner_points(*random_quad(3))
    assert incenter_coincidence_check(*SQUARE, other).failures > 0


def test_collinearity_check_square_and_sensitivity():
    c = corner_points(*SQUARE)
    assert collinearity_check(*SQUARE, c).failures == 0
    quad = random_quad(17)
    c = corner_points(*quad)
    assert collinearity_check(*quad, c).failures == 0
    assert collinearity_check(*quad, replace(c, X=c.E)).failures > 0


@settings(max_examples=200)
@given(st.integers(0, 2**31))
def test_four_point_oracles_random(seed):
    quad = random_quad(seed)
    c = corner_points(*quad)
    assert lemma2a_check(c).failures == 0
    assert lemma2b_rectangle_check(c).failures == 0
    assert incenter_coincidence_check(*quad, c).failures == 0
    assert collinearity_check(*quad, c).failures == 0
    assert step1_check(*quad).failures == 0


def test_step1_square_and_perturbed():
    r = step1_check(*SQUARE)
    assert r.failures == 0
    ab, bc, cd, da = quad_disks(*SQUARE)
    assert math.dist(ab.center, cd.center) > ab.radius + cd.radius
    assert math.dist(bc.center, da.center) > bc.radius + da.radius
    rng = np.random.default_rng(4)
    for _ in range(50):
        quad = [t + rng.uniform(-1e-3, 1e-3) for t in SQUARE]
        assert step1_check(*quad).failures == 0


# --- separation ---

def test_step2_examples():
    assert step2_check(regular_polygon(6)).failures == 0
    t7 = step2_check(triangle_config(7)[0])
    assert t7.failures == 0 and t7.trials > 0
    for seed in range(100):
        assert step2_check(random_polygon(8, seed)).failures == 0
    with pytest.raises(ValueError):
        step2_check(regular_polygon(3))
