"""Reduced-web coordinates per triangle and per surface.

A reduced web on a triangle is a signed honeycomb of size |x| (sign = its
orientation) plus six corner-arc counts: w, v at the top corner (corner 0),
y, z at corner 1 and u, t at corner 2.  The first letter of each pair counts
the arcs crossed at cost 1/3 by the inward tripod leg at that corner.

The hive coordinates of a triangle web are explicit max-plus expressions in
(x, y, z, t, u, v, w), and conversely a valid triangle hive determines the
web coordinates by differences and minima; the two maps are mutually inverse.
A surface web stores one coordinate tuple per triangle; it glues iff for
every interior edge the oriented strand counts computed from both sides
match after swapping.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Dict

from .errors import GluingMismatch, InconsistentSide, InvalidHive, InvalidWebCoords
from .hive import (
    HiveValues,
    TriangleHive,
    triangle_frame,
    triangle_hive_of,
    triangle_violations,
    validate_hive,
)
from .surface import ThetaVertex, Triangulation
from .thirds import Third


@dataclass(frozen=True)
class TriangleWebCoords:
    x: int
    y: int
    z: int
    t: int
    u: int
    v: int
    w: int

    def __post_init__(self):
        for name in ("x", "y", "z", "t", "u", "v", "w"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidWebCoords(f"{name} must be an int, got {value!r}")
        for name in ("y", "z", "t", "u", "v", "w"):
            if getattr(self, name) < 0:
                raise InvalidWebCoords(f"corner count {name} is negative")

    def to_json(self) -> dict:
        return {k: v for k, v in zip("xyztuvw", astuple(self))}

    @classmethod
    def from_json(cls, obj: dict) -> "TriangleWebCoords":
        return cls(**{k: int(obj[k]) for k in "xyztuvw"})


SurfaceWeb = Dict[str, TriangleWebCoords]


def web_to_hive_triangle(c: TriangleWebCoords) -> TriangleHive:
    """Hive coordinates of a triangle web, in thirds:

        3a1 = 2t+u+2w+v+max(2x,-x)      3a2 = 2w+v+2z+y+max(x,-2x)
        3a3 = 2v+w+2u+t+max(x,-2x)      3a4 = 2v+w+2t+u+2z+y+3|x|
        3a5 = 2v+w+2y+z+max(2x,-x)      3a6 = 2z+y+2u+t+max(2x,-x)
        3a7 = 2t+u+2y+z+max(x,-2x)
    """
    x, y, z, t, u, v, w = astuple(c)
    lo = max(x, -2 * x)
    hi = max(2 * x, -x)
    return TriangleHive.from_thirds((
        2 * t + u + 2 * w + v + hi,
        2 * w + v + 2 * z + y + lo,
        2 * v + w + 2 * u + t + lo,
        2 * v + w + 2 * t + u + 2 * z + y + 3 * abs(x),
        2 * v + w + 2 * y + z + hi,
        2 * z + y + 2 * u + t + hi,
        2 * t + u + 2 * y + z + lo,
    ))


def hive_to_web_triangle(h: TriangleHive) -> TriangleWebCoords:
    """Inverse of :func:`web_to_hive_triangle` on valid triangle hives."""
    bad = triangle_violations(h)
    if bad:
        raise InvalidHive(f"rhombus conditions fail: {bad}")
    a1, a2, a3, a4, a5, a6, a7 = (v.thirds for v in h.values())
    div = lambda n: n // 3  # all the combinations below are multiples of 3
    return TriangleWebCoords(
        x=div(a1 + a5 + a6 - a2 - a3 - a7),
        y=div(a5 + a7 - a4),
        z=div(min(a2 + a4 - a1 - a5, a4 + a6 - a3 - a7)),
        t=div(min(a1 + a4 - a3 - a2, a4 + a7 - a6 - a5)),
        u=div(a3 + a6 - a4),
        v=div(min(a3 + a4 - a6 - a1, a4 + a5 - a2 - a7)),
        w=div(a1 + a2 - a4),
    )


def side_arc_counts(a_near: Third, a_far: Third) -> tuple[int, int]:
    """Oriented strand counts (2a_near - a_far, 2a_far - a_near) through a
    side carrying hive values a_near, a_far."""
    first = 2 * a_near.thirds - a_far.thirds
    second = 2 * a_far.thirds - a_near.thirds
    if first % 3 or second % 3:
        raise InconsistentSide(
            f"values {a_near!r}, {a_far!r} give non-integer strand counts"
        )
    first, second = first // 3, second // 3
    if first < 0 or second < 0:
        raise InconsistentSide(
            f"values {a_near!r}, {a_far!r} give negative strand counts"
        )
    return first, second


def _near_far(t_hive: TriangleHive, s: int) -> tuple[Third, Third]:
    """Hive values on side ``s``, ordered (near corner s, near corner s+1)."""
    return {
        0: (t_hive.a2, t_hive.a5),
        1: (t_hive.a7, t_hive.a6),
        2: (t_hive.a3, t_hive.a1),
    }[s % 3]


def _slot_values(tri: Triangulation, t: str, s: int, h: TriangleHive) -> tuple[Third, Third]:
    """Same values reordered (slot 0, slot 1) of the underlying edge."""
    near, far = _near_far(h, s)
    _, fwd = tri.side(t, s)
    return (near, far) if fwd else (far, near)


def surface_web_to_hive(tri: Triangulation, web: SurfaceWeb) -> HiveValues:
    """Assemble the surface hive of an edge-consistent surface web."""
    values: HiveValues = {}
    hives = {}
    for t in tri.triangles:
        if t not in web:
            raise InvalidWebCoords(f"no coordinates for triangle {t!r}")
        hives[t] = web_to_hive_triangle(web[t])
    for rec in tri.edges:
        t0, s0 = rec.attach0
        v0 = _slot_values(tri, t0, s0, hives[t0])
        if rec.attach1 is not None:
            t1, s1 = rec.attach1
            v1 = _slot_values(tri, t1, s1, hives[t1])
            if v0 != v1:
                pair0 = side_arc_counts(*_near_far(hives[t0], s0))
                pair1 = side_arc_counts(*_near_far(hives[t1], s1))
                raise GluingMismatch(rec.id, pair0, pair1)
        values[ThetaVertex.edge(rec.id, 0)] = v0[0]
        values[ThetaVertex.edge(rec.id, 1)] = v0[1]
    for t in tri.triangles:
        frame = triangle_frame(tri, t)
        values[frame.a4] = hives[t].a4
    return values


def hive_to_surface_web(tri: Triangulation, values: HiveValues) -> SurfaceWeb:
    """Per-triangle web coordinates of a valid surface hive."""
    bad = validate_hive(tri, values)
    if bad:
        raise InvalidHive(f"hive has {len(bad)} rhombus violations: {bad[:3]}")
    return {
        t: hive_to_web_triangle(triangle_hive_of(tri, t, values))
        for t in tri.triangles
    }


def surface_web_to_json(tri: Triangulation, web: SurfaceWeb, inline: bool = True) -> dict:
    doc = {"coords": {t: c.to_json() for t, c in web.items()}}
    if inline:
        doc["triangulation"] = tri.to_json()
    return doc


def surface_web_from_json(doc: dict) -> SurfaceWeb:
    return {t: TriangleWebCoords.from_json(c) for t, c in doc["coords"].items()}
