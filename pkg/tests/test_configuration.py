import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sidedisks.configuration import make_polygon, polygon_from_arcs, regular_polygon, side_disks
from sidedisks.extremal import random_polygon
from sidedisks.geometry import point_on_circle
from sidedisks.intersection import analyze

TAU = 2 * math.pi


def test_make_polygon_sorts_and_normalises():
    a = make_polygon([0, math.pi / 2, math.pi, 3 * math.pi / 2])
    b = make_polygon([3 * math.pi / 2, 0, math.pi, math.pi / 2 + TAU])
    assert a.n == 4
    assert a.vertex_angles == pytest.approx(b.vertex_angles, abs=1e-15)
    assert a.arc_lengths() == pytest.approx([math.pi / 2] * 4)


def test_make_polygon_errors():
    with pytest.raises(ValueError, match="near-duplicate"):
        make_polygon([0, 1e-9])
    with pytest.raises(ValueError, match="at least 2"):
        make_polygon([1.0])
    with pytest.raises(ValueError, match="near-duplicate"):
        make_polygon([1e-7, TAU - 1e-7])  # wrap-around gap


def test_regular_polygon():
    assert regular_polygon(4).vertex_angles == pytest.approx([0, math.pi / 2, math.pi, 3 * math.pi / 2])
    assert [d.radius for d in side_disks(regular_polygon(3))] == pytest.approx([1.0] * 3, abs=1e-15)
    assert [d.radius for d in side_disks(regular_polygon(2))] == pytest.approx([math.sqrt(2)] * 2, abs=1e-15)
    with pytest.raises(ValueError):
        regular_polygon(1)


def test_side_disks_square():
    disks = side_disks(regular_polygon(4))
    assert [d.radius for d in disks] == pytest.approx([0.76536686] * 4, abs=1e-8)
    assert [d.center_angle for d in disks] == pytest.approx([math.pi / 4 * k for k in (1, 3, 5, 7)])


def test_side_disks_two_vertices():
    disks = side_disks(make_polygon([0, math.pi]))
    assert [d.center_angle for d in disks] == pytest.approx([math.pi / 2, 3 * math.pi / 2])
    assert [d.radius for d in disks] == pytest.approx([math.sqrt(2)] * 2)


def test_wraparound_arc():
    disks = side_disks(make_polygon([0.5, 6.0]))
    last = disks[-1]
    assert last.start_angle == pytest.approx(6.0)
    assert last.end_angle == pytest.approx(0.5)
    assert last.arc_length == pytest.approx(0.5 + TAU - 6.0)
    assert last.center_angle == pytest.approx((6.0 + last.arc_length / 2) % TAU)


@given(st.integers(2, 20), st.integers(0, 2**31))
def test_side_disk_invariants(n, seed):
    poly = random_polygon(n, seed)
    disks = side_disks(poly)
    assert math.fsum(d.arc_length for d in disks) == pytest.approx(TAU, abs=1e-12)
    for i, d in enumerate(disks):
        assert 0 < d.radius < 2
        # the closed-form radius is the Euclidean center-to-endpoint distance
        for a in (d.start_angle, d.end_angle):
            assert abs(d.center.dist(point_on_circle(a)) - d.radius) < 1e-12
        # consecutive disks share the vertex point on both boundaries
        nxt = disks[(i + 1) % n]
        v = point_on_circle(poly.vertex_angles[(i + 1) % n])
        assert abs(nxt.center.dist(v) - nxt.radius) < 1e-12
        assert abs(d.center.dist(v) - d.radius) < 1e-12


@given(st.integers(3, 12), st.integers(0, 2**31), st.floats(0, TAU))
def test_rotation_equivariance(n, seed, phi):
    poly = random_polygon(n, seed)
    rot = make_polygon([a + phi for a in poly.vertex_angles])
    # find the cyclic shift that maps vertex 0 of poly to its rotated image
    target = (poly.vertex_angles[0] + phi) % TAU
    shift = min(range(n), key=lambda k: abs(math.remainder(rot.vertex_angles[k] - target, TAU)))
    a, b = side_disks(poly), side_disks(rot)
    for i in range(n):
        da, db = a[i], b[(i + shift) % n]
        assert db.radius == pytest.approx(da.radius, abs=1e-12)
        assert db.center.dist(da.center.rotated(phi)) < 1e-12
    ra, rb = analyze(poly), analyze(rot)
    if min(ra.min_abs_margin, rb.min_abs_margin) > 1e-9:
        assert ra.d == rb.d
        relabel = {tuple(sorted(((i + shift) % n, (j + shift) % n))) for i, j in ra.graph.red_diagonals}
        assert relabel == set(rb.graph.red_diagonals)


def test_polygon_from_arcs():
    poly = polygon_from_arcs([math.pi, math.pi / 2, math.pi / 2])
    assert poly.vertex_angles == pytest.approx([0, math.pi, 1.5 * math.pi])
    with pytest.raises(ValueError):
        polygon_from_arcs([1.0, 1.0])


def test_random_polygon_deterministic():
    a, b = random_polygon(5, 42), random_polygon(5, 42)
    assert a == b
    assert np.all(np.diff(a.vertex_angles) > 0)
