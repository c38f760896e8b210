"""Deterministic valid-hive generation.

Triangles are visited in spanning-tree order.  For each one, every
coordinate tuple in the box x in [-K, K], corner counts in [0, K] is a
candidate; tuples whose side values disagree with already-fixed shared-edge
values are filtered out and the seeded generator picks one of the survivors.
All candidate hive tuples for a given K are precomputed once and indexed by
their per-side value pairs, so each constrained lookup is a dict hit.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .errors import InvalidTriangulation, SamplingFailed
from .hive import HiveValues, TriangleHive, triangle_frame
from .surface import ThetaVertex, Triangulation
from .web import TriangleWebCoords, web_to_hive_triangle


@lru_cache(maxsize=8)
def _box(k: int):
    """All box coordinate tuples with their hives and per-side value indexes."""
    entries: list[tuple[TriangleWebCoords, TriangleHive]] = []
    by_side: tuple[dict, dict, dict] = ({}, {}, {})
    for x in range(-k, k + 1):
        for y, z, t, u, v, w in product(range(k + 1), repeat=6):
            coords = TriangleWebCoords(x, y, z, t, u, v, w)
            h = web_to_hive_triangle(coords)
            idx = len(entries)
            entries.append((coords, h))
            for s, pair in enumerate(
                ((h.a2, h.a5), (h.a7, h.a6), (h.a3, h.a1))
            ):
                by_side[s].setdefault((pair[0].thirds, pair[1].thirds), []).append(idx)
    return entries, by_side


def _tree_order(tri: Triangulation) -> list[str]:
    """Breadth-first over shared interior edges, from the first triangle."""
    if not tri.triangles:
        return []
    neighbors: dict[str, list[str]] = {t: [] for t in tri.triangles}
    for rec in tri.edges:
        if rec.attach1 is not None:
            t0, t1 = rec.attach0[0], rec.attach1[0]
            if t0 == t1:
                raise InvalidTriangulation(
                    f"edge {rec.id!r} glues a triangle to itself; sampling needs "
                    "flippable-or-boundary edges"
                )
            neighbors[t0].append(t1)
            neighbors[t1].append(t0)
    order, seen = [], set()
    queue = [tri.triangles[0]]
    while queue:
        t = queue.pop(0)
        if t in seen:
            continue
        seen.add(t)
        order.append(t)
        queue.extend(n for n in neighbors[t] if n not in seen)
    for t in tri.triangles:  # disconnected complexes: start a new tree
        if t not in seen:
            raise InvalidTriangulation("triangulation is not connected")
    return order


def sample_hive(tri: Triangulation, bound: int, seed: int) -> HiveValues:
    """A valid hive, deterministic in (triangulation, bound, seed)."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    entries, by_side = _box(bound)
    rng = random.Random(seed)
    values: HiveValues = {}
    for t in _tree_order(tri):
        frame = triangle_frame(tri, t)
        wanted = []  # (side, (near, far)) constraints from already-fixed edges
        for s, (near_v, far_v) in enumerate(
            ((frame.a2, frame.a5), (frame.a7, frame.a6), (frame.a3, frame.a1))
        ):
            if near_v in values and far_v in values:
                wanted.append((s, (values[near_v].thirds, values[far_v].thirds)))
        if not wanted:
            candidates = range(len(entries))
        else:
            pools = [by_side[s].get(pair, []) for s, pair in wanted]
            if any(not p for p in pools):
                candidates = []
            else:
                candidates = set(pools[0])
                for p in pools[1:]:
                    candidates &= set(p)
                candidates = sorted(candidates)
        if not candidates:
            raise SamplingFailed(
                f"no box coordinates fit the fixed edges of triangle {t!r}"
            )
        _, h = entries[candidates[rng.randrange(len(candidates))]]
        for vertex, val in zip(frame.vertices(), (h.a1, h.a2, h.a3, h.a4, h.a5, h.a6, h.a7)):
            if vertex in values and values[vertex] != val:
                raise SamplingFailed(
                    f"internal inconsistency writing {vertex.key()}"
                )
            values[vertex] = val
    return values
