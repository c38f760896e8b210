"""Combinatorial ideal triangulations and the diagonal flip.

A triangulation is a list of triangle ids plus edge records.  Each triangle
has sides 0, 1, 2 listed counterclockwise, side ``s`` running from corner
``s`` to corner ``s+1`` (mod 3).  An edge record stores an orientation
(``tail`` -> ``head``) and its attachments: the first attachment is the
(triangle, side) slot that walks the edge from tail to head along its own
counterclockwise boundary, the second (if any) walks it head to tail.  A
boundary edge has only the first.

Quiver vertices: one at the center of each triangle and two on each edge,
slot 0 nearer the tail.  Triangle and edge ids are plain strings; the polygon
builder and the flip derive them canonically from marked-point labels
("a-b" for an edge, "a-b-c" for a triangle), which makes triangulations
produced along different flip paths directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import (
    InvalidPolygonTriangulation,
    InvalidTriangulation,
    NotFlippable,
    SelfFoldedUnsupported,
)

Label = object  # marked-point labels: ints for polygons, anything JSON-able in general
Attach = tuple[str, int]


@dataclass(frozen=True, order=True)
class ThetaVertex:
    """A quiver vertex: kind "c" (triangle center) or "e" (edge vertex)."""

    kind: str
    ref: str
    slot: int = -1

    @classmethod
    def center(cls, tri: str) -> "ThetaVertex":
        return cls("c", tri)

    @classmethod
    def edge(cls, edge_id: str, slot: int) -> "ThetaVertex":
        if slot not in (0, 1):
            raise ValueError(f"slot must be 0 or 1, got {slot}")
        return cls("e", edge_id, slot)

    def key(self) -> str:
        if self.kind == "c":
            return f"c:{self.ref}"
        return f"e:{self.ref}:{self.slot}"

    @classmethod
    def parse(cls, key: str) -> "ThetaVertex":
        if key.startswith("c:"):
            return cls.center(key[2:])
        if key.startswith("e:"):
            ref, slot = key[2:].rsplit(":", 1)
            return cls.edge(ref, int(slot))
        raise ValueError(f"bad vertex key {key!r}")


@dataclass(frozen=True)
class EdgeRec:
    id: str
    tail: Label
    head: Label
    attach0: Attach                 # walks tail -> head
    attach1: Optional[Attach]       # walks head -> tail; None on the boundary

    @property
    def interior(self) -> bool:
        return self.attach1 is not None


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, **details):
        self.violations.append({"kind": kind, **details})

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": self.violations}


class Triangulation:
    """Immutable-by-convention triangulation; derived lookups are cached."""

    def __init__(self, triangles, edges, signature=None):
        self.triangles: list[str] = list(triangles)
        self.edges: list[EdgeRec] = list(edges)
        self.signature: Optional[tuple[int, int, int]] = (
            tuple(signature) if signature is not None else None
        )
        self._edge_by_id = {e.id: e for e in self.edges}
        if len(self._edge_by_id) != len(self.edges):
            raise InvalidTriangulation("duplicate edge ids")
        if len(set(self.triangles)) != len(self.triangles):
            raise InvalidTriangulation("duplicate triangle ids")
        self._slot_table: Optional[dict] = None

    # -- raw lookups ---------------------------------------------------

    def edge(self, edge_id: str) -> EdgeRec:
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise KeyError(f"unknown edge {edge_id!r}") from None

    def _slots(self) -> dict[Attach, list[tuple[str, bool]]]:
        """(triangle, side) -> [(edge id, walks tail->head)], possibly 0 or 2+ entries."""
        if self._slot_table is None:
            table: dict[Attach, list[tuple[str, bool]]] = {}
            for rec in self.edges:
                table.setdefault(tuple(rec.attach0), []).append((rec.id, True))
                if rec.attach1 is not None:
                    table.setdefault(tuple(rec.attach1), []).append((rec.id, False))
            self._slot_table = table
        return self._slot_table

    def side(self, tri: str, s: int) -> tuple[str, bool]:
        """Edge at side ``s`` of ``tri`` and whether the side walks tail->head."""
        entries = self._slots().get((tri, s % 3), [])
        if len(entries) != 1:
            raise InvalidTriangulation(
                f"side {s % 3} of triangle {tri!r} attached {len(entries)} times"
            )
        return entries[0]

    def corner_label(self, tri: str, k: int) -> Label:
        """Marked point at corner ``k``, read from side ``k``."""
        edge_id, fwd = self.side(tri, k)
        rec = self.edge(edge_id)
        return rec.tail if fwd else rec.head

    def corner_vertex(self, tri: str, s: int, at_start: bool) -> ThetaVertex:
        """Edge vertex on side ``s`` nearest corner ``s`` (``at_start``) or
        corner ``s+1`` (otherwise)."""
        edge_id, fwd = self.side(tri, s)
        slot = (0 if fwd else 1) if at_start else (1 if fwd else 0)
        return ThetaVertex.edge(edge_id, slot)

    # -- derived sets ---------------------------------------------------

    def theta_index(self) -> list[ThetaVertex]:
        """Canonical enumeration: centers by triangle id, then both slots of
        every edge by edge id."""
        out = [ThetaVertex.center(t) for t in sorted(self.triangles)]
        for eid in sorted(self._edge_by_id):
            out.append(ThetaVertex.edge(eid, 0))
            out.append(ThetaVertex.edge(eid, 1))
        return out

    def interior_edges(self) -> list[str]:
        return [e.id for e in self.edges if e.interior]

    # -- value semantics --------------------------------------------------

    def _content(self):
        return (
            frozenset(self.triangles),
            frozenset(
                (e.id, repr(e.tail), repr(e.head), tuple(e.attach0),
                 tuple(e.attach1) if e.attach1 else None)
                for e in self.edges
            ),
            self.signature,
        )

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self._content() == other._content()

    def __repr__(self):
        return (f"Triangulation({len(self.triangles)} triangles, "
                f"{len(self.edges)} edges)")

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        edges = []
        for rec in sorted(self.edges, key=lambda r: r.id):
            attach = [list(rec.attach0)]
            attach.append(list(rec.attach1) if rec.attach1 is not None else "boundary")
            edges.append(
                {"id": rec.id, "tail": rec.tail, "head": rec.head, "attach": attach}
            )
        doc = {"triangles": sorted(self.triangles), "edges": edges}
        if self.signature is not None:
            g, c, m = self.signature
            doc["signature"] = {"g": g, "c": c, "m": m}
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Triangulation":
        edges = []
        for e in doc["edges"]:
            raw = e["attach"]
            attach0 = (str(raw[0][0]), int(raw[0][1]))
            attach1 = None
            if len(raw) > 1 and raw[1] != "boundary":
                attach1 = (str(raw[1][0]), int(raw[1][1]))
            edges.append(EdgeRec(str(e["id"]), e["tail"], e["head"], attach0, attach1))
        sig = None
        if "signature" in doc:
            s = doc["signature"]
            sig = (int(s["g"]), int(s["c"]), int(s["m"]))
        return cls([str(t) for t in doc["triangles"]], edges, sig)


def validate_complex(tri: Triangulation) -> ValidationReport:
    """Structural checks; an empty report means the gluing data is coherent."""
    report = ValidationReport()
    tri_set = set(tri.triangles)
    slots: dict[Attach, list[str]] = {}
    for rec in tri.edges:
        attachments = [rec.attach0] + ([rec.attach1] if rec.attach1 is not None else [])
        for t, s in attachments:
            if t not in tri_set:
                report.add("unknown-triangle", edge=rec.id, triangle=t)
                continue
            if s not in (0, 1, 2):
                report.add("bad-side-index", edge=rec.id, triangle=t, side=s)
                continue
            slots.setdefault((t, s), []).append(rec.id)
    for t in tri.triangles:
        for s in range(3):
            hits = slots.get((t, s), [])
            if not hits:
                report.add("dangling-side", triangle=t, side=s)
            elif len(hits) > 1:
                report.add("double-attached-side", triangle=t, side=s, edges=hits)
    # corner coherence: the label of corner k read from side k must match the
    # label read from side k-1 (gluing reverses direction)
    if report.ok:
        for t in tri.triangles:
            for k in range(3):
                via_side_k = tri.corner_label(t, k)
                eid, fwd = tri.side(t, (k - 1) % 3)
                rec = tri.edge(eid)
                via_prev = rec.head if fwd else rec.tail
                if via_side_k != via_prev:
                    report.add(
                        "corner-mismatch", triangle=t, corner=k,
                        labels=[via_side_k, via_prev],
                    )
    if tri.signature is not None:
        g, c, m = tri.signature
        want_f = 2 * c + m + 4 * g - 4
        want_e = 3 * c + 2 * m + 6 * g - 6
        if len(tri.triangles) != want_f:
            report.add("count-mismatch", field="triangles",
                       have=len(tri.triangles), want=want_f)
        if len(tri.edges) != want_e:
            report.add("count-mismatch", field="edges",
                       have=len(tri.edges), want=want_e)
    return report


# -- polygon construction ---------------------------------------------------


def _chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    if set(a) & set(b):
        return False
    inside = lambda v: a[0] < v < a[1]
    return inside(b[0]) != inside(b[1])


def build_polygon(m: int, diagonals) -> Triangulation:
    """Triangulated convex m-gon with vertices 0..m-1 counterclockwise.

    Boundary edges are oriented counterclockwise (i -> i+1 mod m), diagonals
    from the lower vertex index.  Edge ids are "lo-hi", triangle ids "a-b-c"
    with sorted corners.
    """
    if not isinstance(m, int) or m < 3:
        raise InvalidPolygonTriangulation(f"need an integer m >= 3, got {m!r}")
    diags: list[tuple[int, int]] = []
    for pair in diagonals:
        a, b = int(pair[0]), int(pair[1])
        if not (0 <= a < m and 0 <= b < m):
            raise InvalidPolygonTriangulation(f"diagonal {pair!r} out of range")
        lo, hi = min(a, b), max(a, b)
        if lo == hi or (hi - lo) % m in (1, m - 1):
            raise InvalidPolygonTriangulation(f"{pair!r} is not a diagonal of the {m}-gon")
        if (lo, hi) in diags:
            raise InvalidPolygonTriangulation(f"duplicate diagonal {pair!r}")
        diags.append((lo, hi))
    if len(diags) != m - 3:
        raise InvalidPolygonTriangulation(
            f"a triangulated {m}-gon needs {m - 3} diagonals, got {len(diags)}"
        )
    for d1, d2 in combinations(diags, 2):
        if _chords_cross(d1, d2):
            raise InvalidPolygonTriangulation(f"diagonals {d1} and {d2} cross")
    diags.sort()

    recs: list[EdgeRec] = []
    pair_to_id: dict[frozenset, str] = {}
    order: list[tuple[str, Label, Label]] = []
    for i in range(m):
        j = (i + 1) % m
        eid = f"{min(i, j)}-{max(i, j)}"
        order.append((eid, i, j))
        pair_to_id[frozenset((i, j))] = eid
    for lo, hi in diags:
        eid = f"{lo}-{hi}"
        order.append((eid, lo, hi))
        pair_to_id[frozenset((lo, hi))] = eid

    chords = set(pair_to_id)
    faces = sorted(
        (a, b, c)
        for a, b, c in combinations(range(m), 3)
        if frozenset((a, b)) in chords
        and frozenset((b, c)) in chords
        and frozenset((a, c)) in chords
    )
    if len(faces) != m - 2:
        raise InvalidPolygonTriangulation(
            f"diagonal set yields {len(faces)} triangles, expected {m - 2}"
        )

    attach_fwd: dict[str, Attach] = {}
    attach_bwd: dict[str, Attach] = {}
    tail_of = {eid: tail for eid, tail, _ in order}
    tri_ids = []
    for corners in faces:
        tid = "-".join(str(v) for v in corners)
        tri_ids.append(tid)
        for s in range(3):
            u, v = corners[s], corners[(s + 1) % 3]
            eid = pair_to_id[frozenset((u, v))]
            if u == tail_of[eid]:
                attach_fwd[eid] = (tid, s)
            else:
                attach_bwd[eid] = (tid, s)
    for eid, tail, head in order:
        if eid not in attach_fwd:
            raise InvalidPolygonTriangulation(f"edge {eid} has no forward attachment")
        recs.append(EdgeRec(eid, tail, head, attach_fwd[eid], attach_bwd.get(eid)))
    return Triangulation(tri_ids, recs, signature=(0, 1, m))


# -- the quadrilateral frame and the flip ------------------------------------


@dataclass(frozen=True)
class QuadFrame:
    """The 12 quiver vertices around an interior diagonal.

    For the frame of (T, e): the diagonal runs Q -> P by its stored
    orientation; a6/a2 sit on the diagonal near Q/P; a5/a7 are the centers of
    the triangles to the left/right of Q -> P; a1/a4 lie on the P-R edge near
    P/R, a9/a10 on R-Q near R/Q, a3/a8 on S-P near P/S, a11/a12 on Q-S near
    Q/S, where R and S are the far corners of the left and right triangle.

    The post-flip frame returned by :func:`flip_triangulation` is positional:
    its slot k holds the vertex that now occupies the pre-flip position of
    slot k (so a2/a6 are the new centers and a5/a7 the new diagonal's
    vertices near R and S).
    """

    a1: ThetaVertex
    a2: ThetaVertex
    a3: ThetaVertex
    a4: ThetaVertex
    a5: ThetaVertex
    a6: ThetaVertex
    a7: ThetaVertex
    a8: ThetaVertex
    a9: ThetaVertex
    a10: ThetaVertex
    a11: ThetaVertex
    a12: ThetaVertex
    diagonal: str
    tri_left: str
    tri_right: str
    labels: dict = field(compare=False, default_factory=dict)

    def vertices(self) -> tuple[ThetaVertex, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6,
                self.a7, self.a8, self.a9, self.a10, self.a11, self.a12)


def quad_frame(tri: Triangulation, edge_id: str) -> QuadFrame:
    """Canonical frame of the quadrilateral around interior edge ``edge_id``."""
    rec = tri.edge(edge_id)
    if rec.attach1 is None:
        raise NotFlippable(f"edge {edge_id!r} is on the boundary")
    t_left, s_left = rec.attach0
    t_right, s_right = rec.attach1
    if t_left == t_right:
        raise SelfFoldedUnsupported(
            f"edge {edge_id!r} glues triangle {t_left!r} to itself"
        )
    frame = QuadFrame(
        a1=tri.corner_vertex(t_left, s_left + 1, at_start=True),
        a2=ThetaVertex.edge(edge_id, 1),
        a3=tri.corner_vertex(t_right, s_right + 2, at_start=False),
        a4=tri.corner_vertex(t_left, s_left + 1, at_start=False),
        a5=ThetaVertex.center(t_left),
        a6=ThetaVertex.edge(edge_id, 0),
        a7=ThetaVertex.center(t_right),
        a8=tri.corner_vertex(t_right, s_right + 2, at_start=True),
        a9=tri.corner_vertex(t_left, s_left + 2, at_start=True),
        a10=tri.corner_vertex(t_left, s_left + 2, at_start=False),
        a11=tri.corner_vertex(t_right, s_right + 1, at_start=True),
        a12=tri.corner_vertex(t_right, s_right + 1, at_start=False),
        diagonal=edge_id,
        tri_left=t_left,
        tri_right=t_right,
        labels={
            "Q": rec.tail,
            "P": rec.head,
            "R": tri.corner_label(t_left, s_left + 2),
            "S": tri.corner_label(t_right, s_right + 2),
        },
    )
    if len(set(frame.vertices())) != 12:
        raise SelfFoldedUnsupported(
            f"quadrilateral around {edge_id!r} wraps onto itself"
        )
    return frame


def _ordered_pair(a: Label, b: Label) -> tuple[Label, Label]:
    try:
        if b < a:
            return b, a
    except TypeError:
        pass
    return a, b


def _rotate_to_min(cycle: tuple) -> tuple:
    rotations = [cycle[i:] + cycle[:i] for i in range(3)]
    try:
        return min(rotations)
    except TypeError:
        return min(rotations, key=lambda r: tuple(map(repr, r)))


def flip_triangulation(
    tri: Triangulation, edge_id: str
) -> tuple[Triangulation, QuadFrame, QuadFrame]:
    """Replace the diagonal of its quadrilateral with the other diagonal.

    Returns the new triangulation, the frame of (T, e) and the positional
    post-flip frame.  Ids of the two rebuilt cells and of the new diagonal
    are derived from corner labels, so any flip path between the same two
    triangulations of a polygon yields identical data.
    """
    frame_old = quad_frame(tri, edge_id)
    rec = tri.edge(edge_id)
    t_left, s_left = rec.attach0
    t_right, s_right = rec.attach1
    lbl = frame_old.labels
    q, p, r, s = lbl["Q"], lbl["P"], lbl["R"], lbl["S"]

    outer = {
        "PL": tri.side(t_left, s_left + 1),    # P -> R as walked by the old left cell
        "RQ": tri.side(t_left, s_left + 2),
        "QS": tri.side(t_right, s_right + 1),
        "SP": tri.side(t_right, s_right + 2),
    }
    ids = [edge_id] + [eid for eid, _ in outer.values()]
    if len(set(ids)) != 5:
        raise SelfFoldedUnsupported(
            f"quadrilateral around {edge_id!r} repeats an edge"
        )

    tail, head = _ordered_pair(r, s)
    new_eid = f"{tail}-{head}"
    if new_eid in tri._edge_by_id and new_eid != edge_id:
        raise InvalidTriangulation(
            f"flip of {edge_id!r} would reuse edge id {new_eid!r}; "
            "distinct arcs with equal endpoints are not supported"
        )

    # cell_p covers {R, P, S} (the old a2 side of the quad), cell_q covers
    # {R, Q, S}; both corner cycles are counterclockwise
    cycle_p, sides_p = (r, s, p), ["diag", "SP", "PL"]
    cycle_q, sides_q = (r, q, s), ["RQ", "QS", "diag"]

    def build_cell(cycle, side_names):
        rot = _rotate_to_min(cycle)
        shift = next(i for i in range(3) if cycle[i:] + cycle[:i] == rot)
        tid = "-".join(str(v) for v in rot)
        sides = {side_names[(k + shift) % 3]: k for k in range(3)}
        return tid, sides

    pid, sides_of_p = build_cell(cycle_p, sides_p)
    qid, sides_of_q = build_cell(cycle_q, sides_q)
    if pid == qid:
        raise SelfFoldedUnsupported(
            f"flip of {edge_id!r} would produce two cells with id {pid!r}"
        )

    replacements: dict[str, tuple[Attach, Attach]] = {}
    for name, cell_id, sides in (("p", pid, sides_of_p), ("q", qid, sides_of_q)):
        for side_name, k in sides.items():
            if side_name == "diag":
                continue
            eid, fwd = outer[side_name]
            old_owner = (t_left, (s_left + (1 if side_name == "PL" else 2)) % 3) \
                if side_name in ("PL", "RQ") \
                else (t_right, (s_right + (1 if side_name == "QS" else 2)) % 3)
            replacements[eid] = (old_owner, (cell_id, k))

    diag_fwd_cell = (pid, sides_of_p["diag"]) if tail == r else (qid, sides_of_q["diag"])
    diag_bwd_cell = (qid, sides_of_q["diag"]) if tail == r else (pid, sides_of_p["diag"])

    new_edges: list[EdgeRec] = []
    for old in tri.edges:
        if old.id == edge_id:
            new_edges.append(EdgeRec(new_eid, tail, head, diag_fwd_cell, diag_bwd_cell))
        elif old.id in replacements:
            old_owner, new_owner = replacements[old.id]
            a0 = new_owner if tuple(old.attach0) == tuple(old_owner) else old.attach0
            a1 = old.attach1
            if a1 is not None and tuple(a1) == tuple(old_owner):
                a1 = new_owner
            new_edges.append(EdgeRec(old.id, old.tail, old.head, a0, a1))
        else:
            new_edges.append(old)
    new_tris = [pid if t == t_left else qid if t == t_right else t for t in tri.triangles]
    flipped = Triangulation(new_tris, new_edges, tri.signature)

    slot_near_r = 0 if tail == r else 1
    frame_new = QuadFrame(
        a1=frame_old.a1,
        a2=ThetaVertex.center(pid),
        a3=frame_old.a3,
        a4=frame_old.a4,
        a5=ThetaVertex.edge(new_eid, slot_near_r),
        a6=ThetaVertex.center(qid),
        a7=ThetaVertex.edge(new_eid, 1 - slot_near_r),
        a8=frame_old.a8,
        a9=frame_old.a9,
        a10=frame_old.a10,
        a11=frame_old.a11,
        a12=frame_old.a12,
        diagonal=new_eid,
        tri_left=diag_fwd_cell[0],
        tri_right=diag_bwd_cell[0],
        labels={"Q": q, "P": p, "R": r, "S": s},
    )
    return flipped, frame_old, frame_new
