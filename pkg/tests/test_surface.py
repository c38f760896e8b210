import pytest

from hiveweb.errors import (
    InvalidPolygonTriangulation,
    NotFlippable,
    SelfFoldedUnsupported,
)
from hiveweb.surface import (
    EdgeRec,
    ThetaVertex,
    Triangulation,
    build_polygon,
    flip_triangulation,
    quad_frame,
    validate_complex,
)


def test_theta_vertex_keys_round_trip():
    c = ThetaVertex.center("0-1-2")
    e = ThetaVertex.edge("0-2", 1)
    assert ThetaVertex.parse(c.key()) == c
    assert ThetaVertex.parse(e.key()) == e
    with pytest.raises(ValueError):
        ThetaVertex.edge("0-2", 2)


def test_triangle_is_forced():
    t = build_polygon(3, [])
    assert len(t.triangles) == 1
    assert len(t.edges) == 3
    assert len(t.theta_index()) == 7
    assert validate_complex(t).ok


def test_quadrilateral_counts():
    t = build_polygon(4, [(0, 2)])
    assert len(t.triangles) == 2
    assert len(t.edges) == 5
    assert len(t.theta_index()) == 12
    assert t.signature == (0, 1, 4)
    assert validate_complex(t).ok


def test_pentagon_counts():
    t = build_polygon(5, [(0, 2), (0, 3)])
    assert len(t.triangles) == 3
    assert len(t.edges) == 7
    assert len(t.theta_index()) == 17


@pytest.mark.parametrize(
    "m, diagonals",
    [
        (4, []),                      # not maximal
        (4, [(0, 1)]),                # a side, not a diagonal
        (5, [(0, 2), (1, 3)]),        # crossing
        (5, [(0, 2), (0, 2)]),        # duplicate
        (5, [(0, 2), (0, 3), (1, 4)]),  # too many
        (2, []),                      # not a polygon
    ],
)
def test_bad_polygon_input(m, diagonals):
    with pytest.raises(InvalidPolygonTriangulation):
        build_polygon(m, diagonals)


def test_validate_reports_double_attachment():
    t = build_polygon(4, [(0, 2)])
    # re-point one boundary edge at an already-attached slot
    broken = []
    for rec in t.edges:
        if rec.id == "0-1":
            broken.append(EdgeRec(rec.id, rec.tail, rec.head, ("0-1-2", 1), None))
        else:
            broken.append(rec)
    report = validate_complex(Triangulation(t.triangles, broken))
    kinds = {v["kind"] for v in report.violations}
    assert "double-attached-side" in kinds
    assert "dangling-side" in kinds


def test_validate_reports_count_mismatch():
    t = build_polygon(4, [(0, 2)])
    report = validate_complex(Triangulation(t.triangles, t.edges, signature=(0, 1, 5)))
    assert any(v["kind"] == "count-mismatch" for v in report.violations)


def test_theta_index_is_stable():
    t = build_polygon(6, [(0, 2), (2, 4), (0, 4)])
    first = t.theta_index()
    assert first == t.theta_index()
    assert first == build_polygon(6, [(0, 4), (0, 2), (2, 4)]).theta_index()
    assert len(first) == len(set(first)) == 2 * 9 + 4


def test_json_round_trip():
    t = build_polygon(5, [(1, 3), (1, 4)])
    doc = t.to_json()
    assert Triangulation.from_json(doc) == t
    assert [e["id"] for e in doc["edges"]] == sorted(e["id"] for e in doc["edges"])


def test_flip_quadrilateral_switches_diagonal():
    t = build_polygon(4, [(0, 2)])
    flipped, frame_old, frame_new = flip_triangulation(t, "0-2")
    assert frame_old.diagonal == "0-2"
    assert frame_new.diagonal == "1-3"
    assert flipped == build_polygon(4, [(1, 3)])


def test_flip_is_an_involution_on_the_complex():
    t = build_polygon(4, [(0, 2)])
    once, _, frame_new = flip_triangulation(t, "0-2")
    twice, _, _ = flip_triangulation(once, frame_new.diagonal)
    assert twice == t
    assert twice.theta_index() == t.theta_index()


def test_flip_boundary_edge_rejected():
    t = build_polygon(4, [(0, 2)])
    with pytest.raises(NotFlippable):
        flip_triangulation(t, "0-1")


def test_flip_self_glued_rejected():
    edges = [
        EdgeRec("loop", "v", "v", ("A", 0), ("A", 1)),
        EdgeRec("b2", "v", "v", ("A", 2), None),
    ]
    t = Triangulation(["A"], edges)
    with pytest.raises(SelfFoldedUnsupported):
        flip_triangulation(t, "loop")


def test_quad_frame_has_twelve_distinct_vertices():
    t = build_polygon(5, [(0, 2), (0, 3)])
    for edge_id in ("0-2", "0-3"):
        frame = quad_frame(t, edge_id)
        assert len(set(frame.vertices())) == 12
        assert frame.a6 == ThetaVertex.edge(edge_id, 0)
        assert frame.a2 == ThetaVertex.edge(edge_id, 1)


def test_flip_path_independence_of_labels():
    # both routes from the fan {0-2, 0-3} to {1-3, 1-4} give identical data
    t = build_polygon(5, [(0, 2), (0, 3)])
    a, _, _ = flip_triangulation(t, "0-2")
    a, _, _ = flip_triangulation(a, "0-3")
    b, _, _ = flip_triangulation(t, "0-3")
    b, _, _ = flip_triangulation(b, "0-2")
    b, _, _ = flip_triangulation(b, "2-4")
    assert a == b
