import math

import pytest

from sidedisks.configuration import side_disks
from sidedisks.extremal import (
    harness,
    random_lemma1_triple,
    random_polygon,
    run_lemma,
    star,
    triangle_config,
)
from sidedisks.intersection import analyze, intersection_graph

import numpy as np


def brute_disjoint_count(poly):
    """Oracle: count disjoint pairs by Euclidean center distance, neighbours excluded."""
    d = side_disks(poly)
    n = len(d)
    return sum(
        math.dist(d[i].center, d[j].center) > d[i].radius + d[j].radius
        for i in range(n) for j in range(i + 1, n) if (j - i) % n not in (1, n - 1)
    )


@pytest.mark.parametrize("n, expected", [(3, 0), (4, 2), (5, 5)])
def test_star_examples(n, expected):
    poly, e = star(n)
    assert e == expected == analyze(poly).d == brute_disjoint_count(poly)


@pytest.mark.parametrize("n, expected", [(4, 1), (5, 3), (6, 6)])
def test_triangle_examples(n, expected):
    poly, e = triangle_config(n)
    assert e == expected == analyze(poly).d == brute_disjoint_count(poly)


def test_triangle_explicit_s():
    poly, e = triangle_config(6, 0.1)
    assert e == 6 and analyze(poly).d == 6
    assert poly.arc_lengths() == pytest.approx([2 * math.pi - 0.5] + [0.1] * 5)
    with pytest.raises(ValueError):
        triangle_config(6, 2.0)  # (n-1)s > 2pi
    with pytest.raises(ValueError):
        triangle_config(5, 1.2)  # valid arcs, wrong pattern


def test_triangle_pattern():
    for n in (4, 8, 13):
        g = intersection_graph(triangle_config(n)[0])
        assert set(g.red_diagonals) == {(0, j) for j in range(2, n - 1)}


def test_random_polygon_contract():
    a = random_polygon(5, 42)
    assert a == random_polygon(5, 42) and a.n == 5
    with pytest.raises(ValueError):
        random_polygon(4, 0, 2.0)
    assert analyze(random_polygon(12, 7)).bounds_ok


def test_random_lemma1_triple_in_arc():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        a, b, c = random_lemma1_triple(rng)
        assert 0 < (c - a) % (2 * math.pi) < (b - a) % (2 * math.pi)


def test_harness_small_runs():
    r = harness(4, 4, 100, 9)
    assert r.ok and r.oracles["step1"].failures == 0
    r3 = harness(3, 3, 10, 0)
    assert r3.per_n[3].passes + r3.per_n[3].skips == 10
    with pytest.raises(ValueError):
        harness(2, 5, 1, 0)
    with pytest.raises(ValueError):
        harness(4, 4, 0, 0)


def test_harness_every_n3_trial_has_d_zero():
    from sidedisks.extremal import trial_seed
    for t in range(10):
        rng = np.random.default_rng(trial_seed(0, 3, t))
        assert analyze(random_polygon(3, rng)).d == 0


def test_harness_counts_add_up_and_trials_split():
    r = harness(3, 7, 40, 5)
    for s in r.per_n.values():
        assert s.passes + s.skips + s.violations == s.trials == 40
    # the per-trial stream depends only on (seed, n, trial)
    sub = harness(6, 6, 40, 5)
    assert sub.per_n[6] == r.per_n[6]


def test_run_lemma():
    assert run_lemma("2b", 20, 3).failures == 0
    assert run_lemma("1", 3, 0, samples=500).trials == 1500
    assert run_lemma("step2", 10, 1, n=6).failures == 0
    with pytest.raises(ValueError):
        run_lemma("bogus", 1)
