"""Asymmetric intersection metric on finite oriented graphs.

Traversing an arc with its direction costs 1/3, against it 2/3.  Distances are
computed by Dijkstra on the doubled arc set with integer weights 1 and 2 in
third units, so every result is an exact :class:`~hiveweb.thirds.Third`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import OmegaEmpty, Unreachable
from .thirds import LatticePoint, Third

Vertex = Hashable


class OrientedGraph:
    """Finite directed multigraph; immutable once built."""

    def __init__(self, vertices: Iterable[Vertex], arcs: Iterable[tuple[Vertex, Vertex]]):
        self.vertices = list(vertices)
        self._vertex_set = set(self.vertices)
        if len(self._vertex_set) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self.arcs = list(arcs)
        # weight-1 forward / weight-2 backward adjacency, in thirds
        self._adj: dict[Vertex, list[tuple[Vertex, int]]] = {v: [] for v in self.vertices}
        for tail, head in self.arcs:
            if tail not in self._vertex_set or head not in self._vertex_set:
                raise ValueError(f"arc ({tail!r}, {head!r}) has an unknown endpoint")
            self._adj[tail].append((head, 1))
            self._adj[head].append((tail, 2))

    def __contains__(self, v: Vertex) -> bool:
        return v in self._vertex_set

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arcs": [[t, h] for t, h in self.arcs]}

    @classmethod
    def from_json(cls, obj: dict) -> "OrientedGraph":
        return cls(obj["vertices"], [tuple(arc) for arc in obj["arcs"]])


def distances_from(graph: OrientedGraph, source: Vertex) -> dict[Vertex, Third]:
    """Exact distances from ``source`` to every reachable vertex."""
    if source not in graph:
        raise KeyError(f"unknown vertex {source!r}")
    dist: dict[Vertex, int] = {source: 0}
    done: set[Vertex] = set()
    heap: list[tuple[int, int, Vertex]] = [(0, 0, source)]
    order = 0
    while heap:
        d, _, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, w in graph._adj[u]:
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                order += 1
                heapq.heappush(heap, (nd, order, v))
    return {v: Third(d) for v, d in dist.items()}


def shortest_distance(graph: OrientedGraph, s: Vertex, t: Vertex) -> Third:
    """Minimum 1/3-2/3 path length from ``s`` to ``t``."""
    if t not in graph:
        raise KeyError(f"unknown vertex {t!r}")
    dist = distances_from(graph, s)
    if t not in dist:
        raise Unreachable(f"no path from {s!r} to {t!r}")
    return dist[t]


def gamma_distance(p: LatticePoint) -> Third:
    """Closed-form distance from the origin to ``p`` on the infinite lattice graph."""
    return Third(max(p.x + p.y, p.y - 2 * p.x, p.x - 2 * p.y))


def gamma_window(radius: int) -> OrientedGraph:
    """Induced subgraph of the lattice graph on the square [-radius, radius]^2.

    Vertices are keyed by :meth:`LatticePoint.key` strings; every vertex sends
    arcs to (x+1,y), (x,y+1) and (x-1,y-1) when those stay inside the window.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    span = range(-radius, radius + 1)
    vertices = [f"{x},{y}" for x in span for y in span]
    arcs = []
    for x in span:
        for y in span:
            src = f"{x},{y}"
            for dx, dy in ((1, 0), (0, 1), (-1, -1)):
                nx, ny = x + dx, y + dy
                if -radius <= nx <= radius and -radius <= ny <= radius:
                    arcs.append((src, f"{nx},{ny}"))
    return OrientedGraph(vertices, arcs)


@dataclass(frozen=True)
class FermatSpec:
    """Corner points for the tripod minimum, in the fixed role layout:
    ``a`` lower-left, ``b`` lower-right, ``c`` upper.  Permuted roles must be
    rotated into this layout by the caller."""

    a: LatticePoint
    b: LatticePoint
    c: LatticePoint


def _omega_bounds(spec: FermatSpec) -> tuple[int, int, int, int, int, int]:
    return (
        spec.a.x, spec.b.x,            # a1 <= x <= b1
        spec.a.y, spec.c.y,            # a2 <= y <= c2
        spec.b.y - spec.b.x,           # b2-b1 <= y-x
        spec.c.y - spec.c.x,           # y-x <= c2-c1
    )


def omega_is_empty(spec: FermatSpec) -> bool:
    xlo, xhi, ylo, yhi, dlo, dhi = _omega_bounds(spec)
    if xlo > xhi or ylo > yhi or dlo > dhi:
        return True
    # the band y-x in [dlo, dhi] must meet the box's diagonal range
    return dlo > yhi - xlo or dhi < ylo - xhi


def fermat_closed_form(spec: FermatSpec) -> Third:
    """Minimum of d(a,X)+d(b,X)+d(c,X) over the lattice, when the minimizer
    region is nonempty."""
    if omega_is_empty(spec):
        raise OmegaEmpty(f"empty minimizer region for {spec}")
    value = -spec.a.x - spec.a.y + 2 * spec.b.x - spec.b.y - spec.c.x + 2 * spec.c.y
    return Third(value)


def omega_points(spec: FermatSpec, radius: int) -> set[LatticePoint]:
    """Integer points of the minimizer region inside [-radius, radius]^2."""
    xlo, xhi, ylo, yhi, dlo, dhi = _omega_bounds(spec)
    points = set()
    for x in range(max(xlo, -radius), min(xhi, radius) + 1):
        for y in range(max(ylo, -radius), min(yhi, radius) + 1):
            if dlo <= y - x <= dhi:
                points.add(LatticePoint(x, y))
    return points


def fermat_brute(
    graph: OrientedGraph, a: Vertex, b: Vertex, c: Vertex
) -> tuple[Third, set[Vertex]]:
    """Exact minimum of the three-distance sum over all vertices, with the
    full argmin set."""
    da = distances_from(graph, a)
    db = distances_from(graph, b)
    dc = distances_from(graph, c)
    best: int | None = None
    argmin: set[Vertex] = set()
    for v in graph.vertices:
        if v not in da or v not in db or v not in dc:
            continue
        total = da[v].thirds + db[v].thirds + dc[v].thirds
        if best is None or total < best:
            best = total
            argmin = {v}
        elif total == best:
            argmin.add(v)
    if best is None:
        raise Unreachable(f"no vertex reachable from all of {a!r}, {b!r}, {c!r}")
    return Third(best), argmin
