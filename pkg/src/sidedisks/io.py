"""JSON configuration files and report serialisation.

A configuration is one of::

    {"angles_radians": [0.0, 1.2, 3.4]}
    {"angles_degrees": [0, 90, 180, 270]}
    {"preset": {"star": 5}}
    {"preset": {"triangle": 6, "s": 0.1}}

with an optional ``"min_gap"`` (radians).
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Mapping

from .configuration import DEFAULT_MIN_GAP, GreatPolygon, make_polygon
from .extremal import star, triangle_config
from .geometry import DEFAULT_TOL, Tolerance

_SOURCES = ("angles_radians", "angles_degrees", "preset")


def _int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return value


def _angles(value: Any, name: str) -> list[float]:
    if not isinstance(value, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        raise ValueError(f"{name} must be a list of numbers")
    if len(value) < 2:
        raise ValueError(f"{name} needs at least 2 entries, got {len(value)}")
    if not all(math.isfinite(v) for v in value):
        raise ValueError(f"{name} contains non-finite values")
    return [float(v) for v in value]


def parse_config(data: Mapping[str, Any], tol: Tolerance = DEFAULT_TOL) -> GreatPolygon:
    """Build the polygon described by a decoded configuration mapping."""
    if not isinstance(data, Mapping):
        raise ValueError("configuration must be a JSON object")
    unknown = set(data) - set(_SOURCES) - {"min_gap"}
    if unknown:
        raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
    present = [k for k in _SOURCES if k in data]
    if len(present) != 1:
        raise ValueError(f"configuration needs exactly one of {_SOURCES}, got {present}")

    min_gap = data.get("min_gap", DEFAULT_MIN_GAP)
    if isinstance(min_gap, bool) or not isinstance(min_gap, (int, float)) or not min_gap > 0:
        raise ValueError(f"min_gap must be a positive number, got {min_gap!r}")

    key = present[0]
    if key == "angles_radians":
        return make_polygon(_angles(data[key], key), min_gap=min_gap)
    if key == "angles_degrees":
        return make_polygon([math.radians(a) for a in _angles(data[key], key)], min_gap=min_gap)

    preset = data["preset"]
    if not isinstance(preset, Mapping):
        raise ValueError("preset must be an object")
    if set(preset) == {"star"}:
        return star(_int(preset["star"], "star"))[0]
    if "triangle" in preset and set(preset) <= {"triangle", "s"}:
        s = preset.get("s")
        if s is not None and (isinstance(s, bool) or not isinstance(s, (int, float))):
            raise ValueError(f"s must be a number, got {s!r}")
        return triangle_config(_int(preset["triangle"], "triangle"), s, tol)[0]
    raise ValueError(f"unrecognised preset {dict(preset)!r}")


def load_config(path: str | Path, tol: Tolerance = DEFAULT_TOL) -> GreatPolygon:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON ({exc})") from exc
    return parse_config(data, tol)


def config_dict(poly: GreatPolygon) -> dict[str, Any]:
    # json writes floats with repr, the shortest string that round-trips exactly
    return {"angles_radians": list(poly.vertex_angles)}


def write_config(poly: GreatPolygon, path: str | Path) -> None:
    Path(path).write_text(json.dumps(config_dict(poly), indent=2) + "\n", encoding="utf-8")


def dumps(obj: Any, pretty: bool = False) -> str:
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=False, allow_nan=False)
