"""Hives on triangulated surfaces.

A hive assigns a value in (1/3)Z to every quiver vertex so that within each
triangle the nine rhombus quantities

    a1+a2-a4   a3+a4-a1-a6   a4+a5-a2-a7
    a5+a7-a4   a2+a4-a1-a5   a4+a6-a3-a7
    a3+a6-a4   a4+a7-a5-a6   a1+a4-a2-a3

are non-negative integers.  The per-triangle labels are read off a fixed
frame: a4 at the center, a2/a5 on side 0 near corners 0/1, a7/a6 on side 1
near corners 1/2, and a3/a1 on side 2 near corners 2/0.  The three-term
quantities then pair the two edge vertices flanking each corner
((a1,a2) at corner 0, (a5,a7) at corner 1, (a3,a6) at corner 2), and the
whole list is invariant under rotating which corner is called 0.

Across a diagonal flip, hives are transported by the max-plus octahedron
relations; the four new values land on the four inner positions of the
quadrilateral frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from .errors import IncompleteHive, InvalidHive
from .surface import QuadFrame, ThetaVertex, Triangulation
from .thirds import Third

HiveValues = Dict[ThetaVertex, Third]


@dataclass(frozen=True)
class TriangleHive:
    a1: Third
    a2: Third
    a3: Third
    a4: Third
    a5: Third
    a6: Third
    a7: Third

    @classmethod
    def from_thirds(cls, values) -> "TriangleHive":
        return cls(*(Third(int(v)) for v in values))

    def values(self) -> tuple[Third, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6, self.a7)

    def thirds(self) -> tuple[int, ...]:
        return tuple(v.thirds for v in self.values())


@dataclass(frozen=True)
class TriangleFrame:
    """Quiver vertices of one triangle in hive-label order a1..a7."""

    a1: ThetaVertex
    a2: ThetaVertex
    a3: ThetaVertex
    a4: ThetaVertex
    a5: ThetaVertex
    a6: ThetaVertex
    a7: ThetaVertex

    def vertices(self) -> tuple[ThetaVertex, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6, self.a7)


def triangle_frame(tri: Triangulation, t: str) -> TriangleFrame:
    return TriangleFrame(
        a1=tri.corner_vertex(t, 2, at_start=False),
        a2=tri.corner_vertex(t, 0, at_start=True),
        a3=tri.corner_vertex(t, 2, at_start=True),
        a4=ThetaVertex.center(t),
        a5=tri.corner_vertex(t, 0, at_start=False),
        a6=tri.corner_vertex(t, 1, at_start=False),
        a7=tri.corner_vertex(t, 1, at_start=True),
    )


def rhombus_differences(h: TriangleHive) -> tuple[Third, ...]:
    """The nine rhombus quantities in the canonical listing order."""
    a1, a2, a3, a4, a5, a6, a7 = h.values()
    return (
        a1 + a2 - a4,
        a3 + a4 - a1 - a6,
        a4 + a5 - a2 - a7,
        a5 + a7 - a4,
        a2 + a4 - a1 - a5,
        a4 + a6 - a3 - a7,
        a3 + a6 - a4,
        a4 + a7 - a5 - a6,
        a1 + a4 - a2 - a3,
    )


def triangle_violations(h: TriangleHive):
    """(rhombus index, offending value) for every failed condition."""
    out = []
    for i, d in enumerate(rhombus_differences(h), start=1):
        if d.thirds < 0 or not d.is_integer():
            out.append((i, d))
    return out


def is_triangle_hive(h: TriangleHive) -> bool:
    return not triangle_violations(h)


def triangle_hive_of(tri: Triangulation, t: str, values: HiveValues) -> TriangleHive:
    frame = triangle_frame(tri, t)
    picked = []
    for v in frame.vertices():
        if v not in values:
            raise IncompleteHive(f"no value for vertex {v.key()}")
        picked.append(values[v])
    return TriangleHive(*picked)


def validate_hive(tri: Triangulation, values: HiveValues) -> list[dict]:
    """All rhombus violations, each naming (triangle, rhombus index, value)."""
    for v in tri.theta_index():
        if v not in values:
            raise IncompleteHive(f"no value for vertex {v.key()}")
    violations = []
    for t in tri.triangles:
        h = triangle_hive_of(tri, t, values)
        for index, value in triangle_violations(h):
            violations.append(
                {"triangle": t, "rhombus": index, "thirds": value.thirds}
            )
    return violations


def tropical_potential(tri: Triangulation, values: HiveValues) -> Third:
    """Max over all triangles and rhombi of minus the rhombus quantity."""
    best = None
    for t in tri.triangles:
        h = triangle_hive_of(tri, t, values)
        for d in rhombus_differences(h):
            if best is None or -d.thirds > best:
                best = -d.thirds
    if best is None:
        raise InvalidHive("triangulation has no triangles")
    return Third(best)


def is_in_positive_cone(tri: Triangulation, values: HiveValues) -> bool:
    """True iff every rhombus quantity is a non-negative integer; agrees with
    validate_hive returning no violations."""
    for t in tri.triangles:
        h = triangle_hive_of(tri, t, values)
        for d in rhombus_differences(h):
            if d.thirds < 0 or not d.is_integer():
                return False
    return True


def _read(values: HiveValues, frame: QuadFrame) -> list[Third]:
    out = []
    for v in frame.vertices():
        if v not in values:
            raise InvalidHive(f"hive has no value at frame vertex {v.key()}")
        out.append(values[v])
    return out


def octahedron_transport(
    values: HiveValues, frame_old: QuadFrame, frame_new: QuadFrame
) -> HiveValues:
    """Transport a hive across a diagonal flip.

    b2 and b6 are computed first, then b5 and b7 which reference them; the
    results are written to the post-flip frame's inner positions and all
    other values carry over unchanged.
    """
    a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12 = (
        v.thirds for v in _read(values, frame_old)
    )
    b2 = max(a1 + a7, a5 + a3) - a2
    b6 = max(a5 + a11, a7 + a10) - a6
    b5 = max(a4 + b6, a9 + b2) - a5
    b7 = max(b2 + a12, a8 + b6) - a7
    out = dict(values)
    # the diagonal vertices and the two centers are the only moving carriers
    for vertex in (frame_old.a2, frame_old.a5, frame_old.a6, frame_old.a7):
        del out[vertex]
    out[frame_new.a2] = Third(b2)
    out[frame_new.a5] = Third(b5)
    out[frame_new.a6] = Third(b6)
    out[frame_new.a7] = Third(b7)
    return out


def hive_to_json(tri: Triangulation, values: HiveValues, inline: bool = True) -> dict:
    doc = {"values": {v.key(): x.to_json() for v, x in values.items()}}
    if inline:
        doc["triangulation"] = tri.to_json()
    return doc


def hive_values_from_json(doc: dict) -> HiveValues:
    return {
        ThetaVertex.parse(key): Third.from_json(v)
        for key, v in doc["values"].items()
    }
