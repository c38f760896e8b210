import json

import pytest

from hiveweb.cli import run
from hiveweb.hive import hive_to_json, validate_hive
from hiveweb.sampling import sample_hive
from hiveweb.surface import Triangulation, build_polygon
from hiveweb.thirds import Third


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_web2hive_coords_golden(capsys):
    code, out, _ = invoke(capsys, "web2hive", "--coords", "3,2,1,1,1,1,1")
    assert code == 0
    assert out == (
        '{"a1":{"thirds":12},"a2":{"thirds":10},"a3":{"thirds":9},'
        '"a4":{"thirds":19},"a5":{"thirds":14},"a6":{"thirds":13},'
        '"a7":{"thirds":11}}\n'
    )


def test_gamma_dist_golden(capsys):
    code, out, _ = invoke(capsys, "gamma-dist", "--to", "-1,0")
    assert code == 0
    assert out == '{"thirds":2}\n'


def test_gamma_dist_with_source(capsys):
    code, out, _ = invoke(capsys, "gamma-dist", "--from", "1,1", "--to", "3,2")
    assert code == 0
    assert json.loads(out) == {"thirds": 3}


def test_validate_zero_hive(tmp_path, capsys):
    tri = build_polygon(5, [(0, 2), (0, 3)])
    tri_path = write(tmp_path / "t.json", tri.to_json())
    values = {v: Third(0) for v in tri.theta_index()}
    hive_path = write(tmp_path / "h.json", hive_to_json(tri, values, inline=False))
    code, out, _ = invoke(
        capsys, "validate", "--triangulation", tri_path, "--hive", hive_path
    )
    assert code == 0
    assert json.loads(out) == {"valid": True, "violations": []}


def test_validate_invalid_hive_exits_one(tmp_path, capsys):
    tri = build_polygon(4, [(0, 2)])
    tri_path = write(tmp_path / "t.json", tri.to_json())
    values = {v: Third(0) for v in tri.theta_index()}
    values[tri.theta_index()[0]] = Third(1)  # a center
    hive_path = write(tmp_path / "h.json", hive_to_json(tri, values, inline=False))
    code, out, _ = invoke(
        capsys, "validate", "--triangulation", tri_path, "--hive", hive_path
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False and doc["violations"]


def test_validate_triangulation_only(tmp_path, capsys):
    tri_path = write(tmp_path / "t.json", build_polygon(3, []).to_json())
    code, out, _ = invoke(capsys, "validate", "--triangulation", tri_path)
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_file_round_trip_is_byte_exact(tmp_path, capsys):
    tri = build_polygon(4, [(0, 2)])
    web_doc = {
        "triangulation": tri.to_json(),
        "coords": {
            "0-1-2": {"x": 1, "y": 0, "z": 1, "t": 0, "u": 2, "v": 0, "w": 1},
            "0-2-3": {"x": -1, "y": 2, "z": 1, "t": 1, "u": 0, "v": 2, "w": 0},
        },
    }
    # make the pair consistent: derive the second triangle from a real hive
    values = sample_hive(tri, 2, seed=4)
    from hiveweb.web import hive_to_surface_web, surface_web_to_json

    web_doc = surface_web_to_json(tri, hive_to_surface_web(tri, values))
    web_path = write(tmp_path / "w.json", web_doc)

    code, hive_out, _ = invoke(capsys, "web2hive", "--web", web_path)
    assert code == 0
    hive_path = tmp_path / "h.json"
    hive_path.write_text(hive_out)

    code, web_out, _ = invoke(capsys, "hive2web", "--hive", str(hive_path))
    assert code == 0
    canonical = json.dumps(
        json.loads(json.dumps(web_doc)), sort_keys=True, separators=(",", ":")
    )
    assert web_out == canonical + "\n"


def test_flip_with_hive_transport(tmp_path, capsys):
    tri = build_polygon(4, [(0, 2)])
    tri_path = write(tmp_path / "t.json", tri.to_json())
    values = sample_hive(tri, 3, seed=21)
    hive_path = write(tmp_path / "h.json", hive_to_json(tri, values, inline=False))
    code, out, _ = invoke(
        capsys, "flip", "--triangulation", tri_path, "--edge", "0-2",
        "--hive", hive_path,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["old_edge"] == "0-2" and doc["new_edge"] == "1-3"
    flipped = Triangulation.from_json(doc["triangulation"])
    assert flipped == build_polygon(4, [(1, 3)])
    from hiveweb.hive import hive_values_from_json

    moved = hive_values_from_json(doc["hive"])
    assert validate_hive(flipped, moved) == []


def test_flip_boundary_edge_is_semantic_error(tmp_path, capsys):
    tri_path = write(tmp_path / "t.json", build_polygon(4, [(0, 2)]).to_json())
    code, out, _ = invoke(capsys, "flip", "--triangulation", tri_path, "--edge", "0-1")
    assert code == 1
    assert json.loads(out)["error"] == "NotFlippable"


def test_potential_and_cone(tmp_path, capsys):
    tri = build_polygon(4, [(0, 2)])
    values = sample_hive(tri, 2, seed=9)
    hive_path = write(tmp_path / "h.json", hive_to_json(tri, values))
    code, out, _ = invoke(capsys, "potential", "--hive", hive_path)
    assert code == 0
    assert json.loads(out)["thirds"] <= 0
    code, out, _ = invoke(capsys, "cone", "--hive", hive_path)
    assert code == 0
    assert json.loads(out) == {"in_positive_cone": True}


def test_oracle_single_and_sweep(capsys):
    code, out, _ = invoke(capsys, "oracle", "--coords", "2,0,1,0,1,0,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["match"] is True
    assert doc["formula"] == doc["oracle"]

    code, out, _ = invoke(
        capsys, "oracle", "--sweep", "25", "--seed", "5", "--bound", "2"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {"all_match": True, "instances": 25, "mismatches": []}


def test_fermat_with_brute_window(capsys):
    code, out, _ = invoke(
        capsys, "fermat", "--a", "0,0", "--b", "2,0", "--c", "0,2", "--window", "6"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["thirds"] == 8
    assert doc["brute"] == {"argmin_size": 9, "thirds": 8}
    assert doc["match"] is True


def test_fermat_empty_region_is_semantic_error(capsys):
    code, out, _ = invoke(capsys, "fermat", "--a", "0,0", "--b", "-1,0", "--c", "0,-1")
    assert code == 1
    assert json.loads(out)["error"] == "OmegaEmpty"


def test_sample_outputs_valid_hive(tmp_path, capsys):
    tri = build_polygon(5, [(0, 2), (0, 3)])
    tri_path = write(tmp_path / "t.json", tri.to_json())
    code, out, _ = invoke(
        capsys, "sample", "--triangulation", tri_path, "--bound", "2", "--seed", "3"
    )
    assert code == 0
    doc = json.loads(out)
    from hiveweb.hive import hive_values_from_json

    assert validate_hive(tri, hive_values_from_json(doc)) == []


def test_dist_generic_graph(tmp_path, capsys):
    graph_path = write(
        tmp_path / "g.json",
        {"vertices": ["u", "v", "w"], "arcs": [["u", "v"], ["v", "w"], ["w", "u"]]},
    )
    code, out, _ = invoke(capsys, "dist", "--graph", graph_path, "--from", "u", "--to", "w")
    assert code == 0
    assert json.loads(out) == {"thirds": 2}


def test_dist_unreachable(tmp_path, capsys):
    graph_path = write(tmp_path / "g.json", {"vertices": ["u", "v"], "arcs": []})
    code, out, _ = invoke(capsys, "dist", "--graph", graph_path, "--from", "u", "--to", "v")
    assert code == 1
    assert json.loads(out)["error"] == "Unreachable"


def test_unknown_subcommand_exits_two(capsys):
    code, _, err = invoke(capsys, "frobnicate")
    assert code == 2
    assert "usage" in err.lower() or "invalid" in err.lower()


def test_malformed_coords_exit_two(capsys):
    code, _, err = invoke(capsys, "web2hive", "--coords", "1,2,3")
    assert code == 2
    assert "coords" in err


def test_magnitude_cap_from_env(capsys, monkeypatch):
    monkeypatch.setenv("HIVEWEB_MAX_THIRDS", "100")
    code, _, err = invoke(capsys, "web2hive", "--coords", "101,0,0,0,0,0,0")
    assert code == 2
    assert "HIVEWEB_MAX_THIRDS" in err
    monkeypatch.setenv("HIVEWEB_MAX_THIRDS", "1000")
    code, out, _ = invoke(capsys, "web2hive", "--coords", "101,0,0,0,0,0,0")
    assert code == 0


def test_out_flag_writes_file(tmp_path, capsys):
    out_path = tmp_path / "result.json"
    code, out, _ = invoke(
        capsys, "gamma-dist", "--to", "2,1", "--out", str(out_path)
    )
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text()) == {"thirds": 3}


def test_inline_triangulation_reference_path(tmp_path, capsys):
    tri = build_polygon(4, [(0, 2)])
    write(tmp_path / "t.json", tri.to_json())
    values = sample_hive(tri, 2, seed=1)
    doc = hive_to_json(tri, values, inline=False)
    doc["triangulation"] = "t.json"
    hive_path = write(tmp_path / "h.json", doc)
    code, out, _ = invoke(capsys, "cone", "--hive", hive_path)
    assert code == 0
    assert json.loads(out) == {"in_positive_cone": True}
