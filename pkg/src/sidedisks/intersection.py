"""Pairwise side-disk intersection, the coloured intersection graph and the bound checks.

Two side disks of the same polygon have centers ``2 sin(delta/2)`` apart
(``delta`` the circular distance between center angles) and radii
``2 sin(arc/4)``, so closed-disk intersection reduces to the sign of::

    margin = sin(delta/2) - (sin(arc_i/4) + sin(arc_j/4))

Positive margin means disjoint; zero (tangency) counts as intersecting.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import combinations

from .configuration import GreatPolygon, SideDisk, side_disks
from .geometry import DEFAULT_TOL, Tolerance, circular_distance


class Kind(enum.Enum):
    DISJOINT = "disjoint"
    INTERSECTING = "intersecting"


@dataclass(frozen=True)
class Relation:
    kind: Kind
    margin: float

    @property
    def disjoint(self) -> bool:
        return self.kind is Kind.DISJOINT


def margin(d_i: SideDisk, d_j: SideDisk) -> float:
    delta = circular_distance(d_i.center_angle, d_j.center_angle)
    return math.sin(0.5 * delta) - (math.sin(0.25 * d_i.arc_length) + math.sin(0.25 * d_j.arc_length))


def disks_intersect(d_i: SideDisk, d_j: SideDisk, tol: Tolerance = DEFAULT_TOL) -> Relation:
    """Classify two side disks of one polygon as closed disks.

    ``tol`` does not move the decision; callers compare ``abs(margin)``
    against ``tol.eps_geom`` to spot near-tangent pairs.
    """
    m = margin(d_i, d_j)
    return Relation(Kind.DISJOINT if m > 0.0 else Kind.INTERSECTING, m)


def _adjacent(i: int, j: int, n: int) -> bool:
    return (j - i) % n in (1, n - 1)


@dataclass(frozen=True)
class IntersectionGraph:
    """Neighbour edges plus the diagonals coloured red (disks meet) or blue (disjoint).

    Pairs are stored as ``(i, j)`` with ``i < j``, in lexicographic order.
    ``margins`` maps every diagonal to its signed margin.
    """

    n: int
    neighbour_edges: tuple[tuple[int, int], ...]
    red_diagonals: tuple[tuple[int, int], ...]
    blue_diagonals: tuple[tuple[int, int], ...]
    margins: dict[tuple[int, int], float] = field(default_factory=dict, compare=False, repr=False)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.neighbour_edges + self.red_diagonals))


def intersection_graph(poly: GreatPolygon, tol: Tolerance = DEFAULT_TOL) -> IntersectionGraph:
    n = poly.n
    if n < 3:
        raise ValueError(f"intersection graph needs n >= 3, got {n}")
    disks = side_disks(poly)
    neighbours, red, blue, margins = [], [], [], {}
    for i, j in combinations(range(n), 2):
        if _adjacent(i, j, n):
            # shared vertex: intersecting by construction, no predicate involved
            neighbours.append((i, j))
            continue
        rel = disks_intersect(disks[i], disks[j], tol)
        margins[(i, j)] = rel.margin
        (blue if rel.disjoint else red).append((i, j))
    return IntersectionGraph(n, tuple(neighbours), tuple(red), tuple(blue), margins)


def disjoint_pair_count(graph: IntersectionGraph) -> int:
    return len(graph.blue_diagonals)


def theorem_bounds(n: int) -> tuple[int, int]:
    """Lower and upper bounds ``((n-2)(n-3)/2, n(n-3)/2)`` on the number of disjoint pairs."""
    if n < 3:
        raise ValueError(f"bounds hold for n >= 3, got {n}")
    return (n - 2) * (n - 3) // 2, n * (n - 3) // 2


def _strictly_between(i: int, j: int, x: int, n: int) -> bool:
    # x in the open cyclic interval going forward from i to j
    return 0 < (x - i) % n < (j - i) % n


def chords_cross(i: int, j: int, k: int, l: int, n: int) -> bool:
    """Whether chords ``{i, j}`` and ``{k, l}`` of a convex ``n``-gon cross."""
    for x in (i, j, k, l):
        if not 0 <= x < n:
            raise ValueError(f"index {x} out of range for n={n}")
    if len({i, j, k, l}) != 4:
        raise ValueError("chords must have four distinct endpoints")
    return _strictly_between(i, j, k, n) != _strictly_between(i, j, l, n)


def red_noncrossing(graph: IntersectionGraph) -> bool:
    for (i, j), (k, l) in combinations(graph.red_diagonals, 2):
        if len({i, j, k, l}) == 4 and chords_cross(i, j, k, l, graph.n):
            return False
    return True


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    d: int
    lower_bound: int
    upper_bound: int
    bounds_ok: bool
    noncrossing_ok: bool
    #: smallest |margin| over the diagonals; inf when there are none (n = 3)
    min_abs_margin: float
    graph: IntersectionGraph = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "bounds_ok": self.bounds_ok,
            "noncrossing_ok": self.noncrossing_ok,
            "min_abs_margin": self.min_abs_margin if math.isfinite(self.min_abs_margin) else None,
            "red_diagonals": [list(p) for p in self.graph.red_diagonals],
            "blue_diagonals": [list(p) for p in self.graph.blue_diagonals],
        }


def analyze(poly: GreatPolygon, tol: Tolerance = DEFAULT_TOL) -> AnalysisReport:
    graph = intersection_graph(poly, tol)
    d = disjoint_pair_count(graph)
    lo, hi = theorem_bounds(poly.n)
    return AnalysisReport(
        n=poly.n,
        d=d,
        lower_bound=lo,
        upper_bound=hi,
        bounds_ok=lo <= d <= hi,
        noncrossing_ok=red_noncrossing(graph),
        min_abs_margin=min((abs(m) for m in graph.margins.values()), default=math.inf),
        graph=graph,
    )
