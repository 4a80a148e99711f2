"""Extremal configurations and the randomized verification harness.

Seeding
-------
Trial ``t`` for polygon size ``n`` draws from
``numpy.random.SeedSequence(seed, spawn_key=(n, t))``. The stream depends
only on ``(seed, n, t)``, so any subset of trials, in any order or in
parallel, reproduces the serial run exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .configuration import DEFAULT_MIN_GAP, GreatPolygon, make_polygon, polygon_from_arcs, regular_polygon
from .geometry import DEFAULT_TOL, TWO_PI, Tolerance
from .intersection import analyze, theorem_bounds
from .oracles import QUAD_CHECKS, OracleReport, lemma1_check, quadruple_reports, step2_check

MAX_RESAMPLES = 10_000


def star(n: int) -> tuple[GreatPolygon, int]:
    """Equal arcs; every non-neighbouring pair is disjoint, giving ``n(n-3)/2``."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return regular_polygon(n), theorem_bounds(n)[1]


def _triangle_pattern_ok(poly: GreatPolygon, tol: Tolerance) -> bool:
    rep = analyze(poly, tol)
    n = poly.n
    fan = tuple((0, j) for j in range(2, n - 1))
    return rep.graph.red_diagonals == fan and rep.d == theorem_bounds(n)[0]


def triangle_config(n: int, s: float | None = None,
                    tol: Tolerance = DEFAULT_TOL) -> tuple[GreatPolygon, int]:
    """One long arc followed by ``n - 1`` short arcs of length ``s``.

    The long arc's disk meets every other disk while the short-arc disks meet
    only their neighbours, so the count of disjoint pairs is
    ``(n-2)(n-3)/2``. Without ``s`` the short arc starts at ``pi / n**2`` and
    is halved until the pattern holds. The pattern is always re-checked on
    the returned polygon.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    expected = theorem_bounds(n)[0]

    def build(step: float) -> GreatPolygon:
        return polygon_from_arcs([TWO_PI - (n - 1) * step] + [step] * (n - 1))

    if s is not None:
        if not (s > 0 and (n - 1) * s < TWO_PI):
            raise ValueError(f"need 0 < (n-1)*s < 2pi, got s={s!r}")
        poly = build(s)
        if not _triangle_pattern_ok(poly, tol):
            raise ValueError(f"arc length s={s!r} does not produce the one-disk-meets-all pattern")
        return poly, expected

    step = math.pi / n**2
    for _ in range(64):
        poly = build(step)
        if _triangle_pattern_ok(poly, tol):
            return poly, expected
        step *= 0.5
    raise ValueError(f"no valid one-disk-meets-all configuration found for n={n}")


def _rng(seed: int | np.random.SeedSequence | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_polygon(n: int, seed: int | np.random.SeedSequence | np.random.Generator = 0,
                   min_gap: float = DEFAULT_MIN_GAP) -> GreatPolygon:
    """``n`` i.i.d. uniform vertices, redrawn until every cyclic gap is at least ``min_gap``."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if min_gap * n >= TWO_PI:
        raise ValueError(f"min_gap={min_gap!r} is infeasible for n={n}")
    rng = _rng(seed)
    for _ in range(MAX_RESAMPLES):
        angles = np.sort(rng.uniform(0.0, TWO_PI, n))
        gaps = np.diff(angles, append=angles[0] + TWO_PI)
        if gaps.min() >= min_gap:
            return make_polygon(angles.tolist(), min_gap=min_gap)
    raise ValueError(f"resample budget exhausted for n={n}, min_gap={min_gap!r}")


def trial_seed(seed: int, n: int, trial: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(seed, spawn_key=(n, trial))


@dataclass
class NStats:
    trials: int = 0
    passes: int = 0
    skips: int = 0
    violations: int = 0
    bounds_violations: int = 0
    noncrossing_violations: int = 0
    step2_failures: int = 0
    lemma_failures: int = 0

    def to_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


@dataclass
class HarnessReport:
    """Aggregated outcome of a harness run.

    Each trial is counted once as a pass, a skip (near-tangent, too close to
    a classification flip) or a violation; ``per_n`` splits violations by
    category. Counterexamples carry the full vertex angle list.
    """

    n_min: int
    n_max: int
    trials_per_n: int
    seed: int
    tol: Tolerance
    per_n: dict[int, NStats] = field(default_factory=dict)
    oracles: dict[str, OracleReport] = field(default_factory=dict)
    counterexamples: dict[str, dict[str, Any]] = field(default_factory=dict)

    def total(self, name: str) -> int:
        return sum(getattr(s, name) for s in self.per_n.values())

    @property
    def ok(self) -> bool:
        return self.total("violations") == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "trials_per_n": self.trials_per_n,
            "seed": self.seed,
            "eps_geom": self.tol.eps_geom,
            "eps_strict": self.tol.eps_strict,
            "ok": self.ok,
            "totals": {k: self.total(k) for k in NStats().__dict__},
            "per_n": {str(n): s.to_dict() for n, s in sorted(self.per_n.items())},
            "oracles": {k: r.to_dict() for k, r in self.oracles.items()},
            "counterexamples": self.counterexamples,
        }


def harness(n_min: int, n_max: int, trials_per_n: int, seed: int = 0,
            tol: Tolerance = DEFAULT_TOL, min_gap: float = DEFAULT_MIN_GAP) -> HarnessReport:
    """Check both theorems and the oracles on random polygons for every n in [n_min, n_max].

    For each trial with ``n >= 4`` the separation check runs on the whole
    polygon and the four-point oracles on one random choice of four of its
    vertices.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if trials_per_n < 1:
        raise ValueError("trials_per_n must be positive")

    rep = HarnessReport(n_min, n_max, trials_per_n, seed, tol)
    rep.oracles = {name: OracleReport(name) for name in ("step2",) + QUAD_CHECKS}

    def flag(category: str, poly: GreatPolygon, **extra) -> None:
        rep.counterexamples.setdefault(category, {"angles_radians": list(poly.vertex_angles), **extra})

    for n in range(n_min, n_max + 1):
        stats = rep.per_n[n] = NStats()
        for t in range(trials_per_n):
            stats.trials += 1
            rng = np.random.default_rng(trial_seed(seed, n, t))
            poly = random_polygon(n, rng, min_gap)
            analysis = analyze(poly, tol)
            if analysis.min_abs_margin <= tol.eps_geom:
                stats.skips += 1
                continue

            failed = False
            if not analysis.bounds_ok:
                stats.bounds_violations += 1
                flag("bounds", poly, d=analysis.d)
                failed = True
            if not analysis.noncrossing_ok:
                stats.noncrossing_violations += 1
                flag("noncrossing", poly, red_diagonals=[list(p) for p in analysis.graph.red_diagonals])
                failed = True
            if n >= 4:
                s2 = step2_check(poly, tol)
                rep.oracles["step2"].merge(s2)
                if s2.failures:
                    stats.step2_failures += 1
                    flag("step2", poly, detail=s2.counterexample)
                    failed = True
                idx = np.sort(rng.choice(n, size=4, replace=False))
                quad = [poly.vertex_angles[i] for i in idx]
                lemma_failed = False
                for name, r in quadruple_reports(*quad, tol=tol).items():
                    rep.oracles[name].merge(r)
                    if r.failures:
                        lemma_failed = True
                        flag(name, poly, quadruple=quad, detail=r.counterexample)
                if lemma_failed:
                    stats.lemma_failures += 1
                    failed = True

            if failed:
                stats.violations += 1
            else:
                stats.passes += 1
    return rep


LEMMAS = ("1", "2a", "2b", "incenter", "collinear", "step1", "step2")
_QUAD_LEMMA = {"2a": "lemma2a", "2b": "lemma2b", "incenter": "incenter",
               "collinear": "collinear", "step1": "step1"}


def random_lemma1_triple(rng: np.random.Generator) -> tuple[float, float, float]:
    """Angles ``(a, b, c)`` with c uniform inside the counterclockwise arc a->b."""
    a = rng.uniform(0.0, TWO_PI)
    span = rng.uniform(0.0, TWO_PI)
    frac = rng.uniform(0.0, 1.0)
    while span <= DEFAULT_MIN_GAP or not (0.0 < frac * span < span):
        span, frac = rng.uniform(0.0, TWO_PI), rng.uniform(0.0, 1.0)
    return a, (a + span) % TWO_PI, (a + frac * span) % TWO_PI


def run_lemma(which: str, trials: int, seed: int = 0, tol: Tolerance = DEFAULT_TOL,
              samples: int = 10_000, n: int = 8, min_gap: float = DEFAULT_MIN_GAP) -> OracleReport:
    """Run one oracle over ``trials`` seeded random inputs and merge the reports.

    ``which`` is one of :data:`LEMMAS`. Quadruple oracles draw four vertices
    per trial, ``"1"`` draws a triple and ``samples`` points, ``"step2"`` draws
    an ``n``-vertex polygon.
    """
    if which not in LEMMAS:
        raise ValueError(f"unknown lemma {which!r}; choose from {', '.join(LEMMAS)}")
    if trials < 1:
        raise ValueError("trials must be positive")
    claim = "lemma1" if which == "1" else _QUAD_LEMMA.get(which, which)
    total = OracleReport(claim)
    for t in range(trials):
        if which == "1":
            rng = np.random.default_rng(trial_seed(seed, 3, t))
            a, b, c = random_lemma1_triple(rng)
            total.merge(lemma1_check(a, b, c, samples, int(rng.integers(2**32)), tol))
        elif which == "step2":
            poly = random_polygon(n, trial_seed(seed, n, t), min_gap)
            total.merge(step2_check(poly, tol))
        else:
            quad = random_polygon(4, trial_seed(seed, 4, t), min_gap).vertex_angles
            total.merge(quadruple_reports(*quad, tol=tol)[claim])
    return total
