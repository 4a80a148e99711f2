"""Standalone SVG figures of a polygon, its side disks and the coloured chords."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .configuration import GreatPolygon, side_disks
from .geometry import DEFAULT_TOL, Point, Tolerance, point_on_circle
from .intersection import intersection_graph
from .oracles import corner_points

RED = "#d62728"
BLUE = "#1f77b4"


@dataclass(frozen=True)
class RenderSpec:
    output: str | Path | None = None
    width: int = 800
    height: int = 800
    show_disks: bool = True
    show_chords: bool = True
    show_corners: bool = True
    show_labels: bool = True

    def __post_init__(self):
        if self.width < 100 or self.height < 100:
            raise ValueError("canvas must be at least 100px in each direction")


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(poly: GreatPolygon, spec: RenderSpec = RenderSpec(), tol: Tolerance = DEFAULT_TOL) -> str:
    """SVG text for ``poly``; identical input gives identical bytes."""
    disks = side_disks(poly)
    extent = 1.0 + (max(d.radius for d in disks) if spec.show_disks else 0.15)
    scale = 0.5 * min(spec.width, spec.height) / (1.08 * extent)
    cx, cy = 0.5 * spec.width, 0.5 * spec.height

    def xy(p: Point) -> tuple[str, str]:
        return _f(cx + scale * p.x), _f(cy - scale * p.y)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
        f'<circle class="unit" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(scale)}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]

    if spec.show_disks:
        for d in disks:
            x, y = xy(d.center)
            out.append(f'<circle class="disk" cx="{x}" cy="{y}" r="{_f(scale * d.radius)}" '
                       f'fill="#7f7f7f" fill-opacity="0.08" stroke="#555555" stroke-width="1"/>')

    if spec.show_chords and poly.n >= 3:
        graph = intersection_graph(poly, tol)
        for cls, colour, pairs in (("neighbour", "#aaaaaa", graph.neighbour_edges),
                                   ("red", RED, graph.red_diagonals),
                                   ("blue", BLUE, graph.blue_diagonals)):
            for i, j in pairs:
                (x1, y1), (x2, y2) = xy(disks[i].center), xy(disks[j].center)
                out.append(f'<line class="chord {cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                           f'stroke="{colour}" stroke-width="1.5"/>')

    for k, a in enumerate(poly.vertex_angles):
        x, y = xy(point_on_circle(a))
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3.5" fill="black"/>')
        if spec.show_labels:
            lx, ly = xy(point_on_circle(a) * 1.06)
            out.append(f'<text class="label" x="{lx}" y="{ly}" font-size="12" font-family="sans-serif" '
                       f'text-anchor="middle" dominant-baseline="middle">v{k}</text>')

    if spec.show_corners and poly.n == 4:
        c = corner_points(*poly.vertex_angles, tol=tol)
        pts = [("X", c.X), ("Y", c.Y), ("Z", c.Z), ("T", c.T)]
        ring = " ".join(",".join(xy(p)) for _, p in pts)
        out.append(f'<polygon class="corners" points="{ring}" fill="none" stroke="#2ca02c" '
                   f'stroke-width="1.2" stroke-dasharray="4 3"/>')
        for name, p in pts + [("E", c.E)]:
            x, y = xy(p)
            out.append(f'<circle class="corner" cx="{x}" cy="{y}" r="3" fill="#2ca02c"/>')
            if spec.show_labels:
                out.append(f'<text class="label" x="{x}" y="{y}" dx="5" dy="-5" font-size="11" '
                           f'font-family="sans-serif">{name}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(poly: GreatPolygon, spec: RenderSpec, tol: Tolerance = DEFAULT_TOL) -> Path:
    if spec.output is None:
        raise ValueError("RenderSpec.output is required to write a file")
    path = Path(spec.output)
    path.write_text(render_svg(poly, spec, tol), encoding="utf-8")
    return path
