"""Batch command line over the library: one JSON document per invocation.

Exit codes: 0 success / valid, 1 semantically invalid input (a hive that
fails validation, an empty minimizer region, ...), 2 malformed input or
usage errors (usage text goes to stderr).  Output JSON is canonical: sorted
keys, no insignificant whitespace, integers only.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import hive as hive_mod
from . import metric as metric_mod
from . import sampling, surface, surfacoid, web
from .errors import HivewebError
from .thirds import LatticePoint, Third

DEFAULT_MAX_THIRDS = 10**12


class MalformedInput(ValueError):
    pass


def _max_magnitude() -> int:
    raw = os.environ.get("HIVEWEB_MAX_THIRDS")
    if raw is None:
        return DEFAULT_MAX_THIRDS
    try:
        return int(raw)
    except ValueError:
        raise MalformedInput(f"HIVEWEB_MAX_THIRDS={raw!r} is not an integer")


def _checked_int(value, what: str) -> int:
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise MalformedInput(f"{what}: expected an integer, got {value!r}")
    cap = _max_magnitude()
    if abs(n) > cap:
        raise MalformedInput(f"{what}: |{n}| exceeds HIVEWEB_MAX_THIRDS={cap}")
    return n


def _canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _emit(doc, out_path) -> None:
    text = _canonical(doc) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_doc(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}")


def _load_triangulation(path: str) -> surface.Triangulation:
    return surface.Triangulation.from_json(_load_doc(path))


def _resolve_triangulation(doc: dict, doc_path: str, args) -> surface.Triangulation:
    """Triangulation from --triangulation, else inline, else ref path."""
    if getattr(args, "triangulation", None):
        return _load_triangulation(args.triangulation)
    ref = doc.get("triangulation")
    if isinstance(ref, dict):
        return surface.Triangulation.from_json(ref)
    if isinstance(ref, str):
        base = Path(doc_path).parent
        return _load_triangulation(str(base / ref))
    raise MalformedInput(
        "no triangulation: pass --triangulation or embed one in the document"
    )


def _values_from_doc(doc: dict) -> hive_mod.HiveValues:
    if "values" not in doc:
        raise MalformedInput("hive document has no 'values' field")
    values = {}
    for key, obj in doc["values"].items():
        try:
            vertex = surface.ThetaVertex.parse(key)
        except ValueError as exc:
            raise MalformedInput(str(exc))
        values[vertex] = Third(_checked_int(obj.get("thirds"), f"values[{key}]"))
    return values


def _parse_coords(text: str) -> web.TriangleWebCoords:
    parts = text.split(",")
    if len(parts) != 7:
        raise MalformedInput(f"--coords needs 7 comma-separated integers, got {text!r}")
    x, y, z, t, u, v, w = (_checked_int(p, "--coords") for p in parts)
    return web.TriangleWebCoords(x, y, z, t, u, v, w)


def _parse_point(text: str, what: str) -> LatticePoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise MalformedInput(f"{what} needs 'x,y', got {text!r}")
    return LatticePoint(_checked_int(parts[0], what), _checked_int(parts[1], what))


def _triangle_hive_doc(h) -> dict:
    return {f"a{i}": v.to_json() for i, v in enumerate(h.values(), start=1)}


def _triangle_hive_from_doc(doc: dict) -> hive_mod.TriangleHive:
    missing = [f"a{i}" for i in range(1, 8) if f"a{i}" not in doc]
    if missing:
        raise MalformedInput(f"triangle hive document is missing {missing}")
    vals = [
        Third(_checked_int(doc[f"a{i}"].get("thirds"), f"a{i}")) for i in range(1, 8)
    ]
    return hive_mod.TriangleHive(*vals)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args) -> int:
    if args.hive:
        doc = _load_doc(args.hive)
        tri = _resolve_triangulation(doc, args.hive, args)
        values = _values_from_doc(doc)
        violations = hive_mod.validate_hive(tri, values)
        _emit({"valid": not violations, "violations": violations}, args.out)
        return 0 if not violations else 1
    if args.web:
        doc = _load_doc(args.web)
        tri = _resolve_triangulation(doc, args.web, args)
        coords = web.surface_web_from_json(doc)
        web.surface_web_to_hive(tri, coords)  # raises GluingMismatch when bad
        _emit({"valid": True, "violations": []}, args.out)
        return 0
    if not args.triangulation:
        raise MalformedInput("validate needs --triangulation, --hive or --web")
    tri = _load_triangulation(args.triangulation)
    report = surface.validate_complex(tri)
    _emit(report.to_json(), args.out)
    return 0 if report.ok else 1


def cmd_web2hive(args) -> int:
    if args.coords:
        h = web.web_to_hive_triangle(_parse_coords(args.coords))
        _emit(_triangle_hive_doc(h), args.out)
        return 0
    if not args.web:
        raise MalformedInput("web2hive needs --coords or --web")
    doc = _load_doc(args.web)
    tri = _resolve_triangulation(doc, args.web, args)
    coords = web.surface_web_from_json(doc)
    values = web.surface_web_to_hive(tri, coords)
    _emit(hive_mod.hive_to_json(tri, values), args.out)
    return 0


def cmd_hive2web(args) -> int:
    doc = _load_doc(args.hive)
    if "values" not in doc:
        coords = web.hive_to_web_triangle(_triangle_hive_from_doc(doc))
        _emit(coords.to_json(), args.out)
        return 0
    tri = _resolve_triangulation(doc, args.hive, args)
    values = _values_from_doc(doc)
    coords = web.hive_to_surface_web(tri, values)
    _emit(web.surface_web_to_json(tri, coords), args.out)
    return 0


def cmd_flip(args) -> int:
    tri = _load_triangulation(args.triangulation)
    flipped, frame_old, frame_new = surface.flip_triangulation(tri, args.edge)
    out = {
        "old_edge": args.edge,
        "new_edge": frame_new.diagonal,
        "triangulation": flipped.to_json(),
    }
    if args.hive:
        doc = _load_doc(args.hive)
        values = _values_from_doc(doc)
        bad = hive_mod.validate_hive(tri, values)
        if bad:
            raise HivewebError(f"hive is invalid before transport: {bad[:3]}")
        moved = hive_mod.octahedron_transport(values, frame_old, frame_new)
        out["hive"] = hive_mod.hive_to_json(flipped, moved, inline=False)
    _emit(out, args.out)
    return 0


def cmd_potential(args) -> int:
    doc = _load_doc(args.hive)
    tri = _resolve_triangulation(doc, args.hive, args)
    values = _values_from_doc(doc)
    _emit(hive_mod.tropical_potential(tri, values).to_json(), args.out)
    return 0


def cmd_cone(args) -> int:
    doc = _load_doc(args.hive)
    tri = _resolve_triangulation(doc, args.hive, args)
    values = _values_from_doc(doc)
    _emit({"in_positive_cone": hive_mod.is_in_positive_cone(tri, values)}, args.out)
    return 0


def _oracle_once(coords: web.TriangleWebCoords) -> dict:
    formula = web.web_to_hive_triangle(coords)
    oracle = surfacoid.oracle_triangle_hive(coords)
    return {
        "coords": coords.to_json(),
        "formula": _triangle_hive_doc(formula),
        "oracle": _triangle_hive_doc(oracle),
        "match": formula == oracle,
    }


def cmd_oracle(args) -> int:
    if args.sweep is not None:
        rng = random.Random(args.seed)
        bound = args.bound if args.bound is not None else 2
        mismatches = []
        for _ in range(args.sweep):
            coords = web.TriangleWebCoords(
                rng.randint(-bound, bound),
                *(rng.randint(0, bound) for _ in range(6)),
            )
            result = _oracle_once(coords)
            if not result["match"]:
                mismatches.append(result)
        _emit(
            {"instances": args.sweep, "all_match": not mismatches,
             "mismatches": mismatches},
            args.out,
        )
        return 0 if not mismatches else 1
    if not args.coords:
        raise MalformedInput("oracle needs --coords or --sweep")
    result = _oracle_once(_parse_coords(args.coords))
    _emit(result, args.out)
    return 0 if result["match"] else 1


def cmd_gamma_dist(args) -> int:
    to = _parse_point(args.to, "--to")
    src = _parse_point(args.src, "--from") if args.src else LatticePoint(0, 0)
    _emit(metric_mod.gamma_distance(to - src).to_json(), args.out)
    return 0


def cmd_fermat(args) -> int:
    spec = metric_mod.FermatSpec(
        _parse_point(args.a, "--a"),
        _parse_point(args.b, "--b"),
        _parse_point(args.c, "--c"),
    )
    value = metric_mod.fermat_closed_form(spec)
    out = value.to_json()
    if args.window is not None:
        graph = metric_mod.gamma_window(args.window)
        brute, argmin = metric_mod.fermat_brute(
            graph, spec.a.key(), spec.b.key(), spec.c.key()
        )
        out = {
            "thirds": value.thirds,
            "brute": {"thirds": brute.thirds, "argmin_size": len(argmin)},
            "match": brute == value,
        }
    _emit(out, args.out)
    return 0


def cmd_sample(args) -> int:
    tri = _load_triangulation(args.triangulation)
    values = sampling.sample_hive(tri, args.bound, args.seed)
    _emit(hive_mod.hive_to_json(tri, values), args.out)
    return 0


def cmd_dist(args) -> int:
    graph = metric_mod.OrientedGraph.from_json(_load_doc(args.graph))
    _emit(metric_mod.shortest_distance(graph, args.src, args.to).to_json(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiveweb",
        description="Exact web/hive calculus on triangulated surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON document here instead of stdout")

    p = sub.add_parser("validate", help="check a triangulation, hive or web")
    p.add_argument("--triangulation")
    p.add_argument("--hive")
    p.add_argument("--web")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("web2hive", help="web coordinates to hive values")
    p.add_argument("--coords", help="x,y,z,t,u,v,w for a single triangle")
    p.add_argument("--web", help="surface web JSON file")
    p.add_argument("--triangulation")
    common(p)
    p.set_defaults(func=cmd_web2hive)

    p = sub.add_parser("hive2web", help="hive values to web coordinates")
    p.add_argument("--hive", required=True)
    p.add_argument("--triangulation")
    common(p)
    p.set_defaults(func=cmd_hive2web)

    p = sub.add_parser("flip", help="flip a diagonal, optionally transporting a hive")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--edge", required=True)
    p.add_argument("--hive")
    common(p)
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("potential", help="tropical potential of an assignment")
    p.add_argument("--hive", required=True)
    p.add_argument("--triangulation")
    common(p)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("cone", help="positive-cone membership")
    p.add_argument("--hive", required=True)
    p.add_argument("--triangulation")
    common(p)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("oracle", help="compare formula hive against the net oracle")
    p.add_argument("--coords")
    p.add_argument("--sweep", type=int, help="number of seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int)
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gamma-dist", help="closed-form lattice distance")
    p.add_argument("--to", required=True, help="x,y")
    p.add_argument("--from", dest="src", help="x,y (default origin)")
    common(p)
    p.set_defaults(func=cmd_gamma_dist)

    p = sub.add_parser("fermat", help="closed-form tripod minimum")
    p.add_argument("--a", required=True, help="x,y of the lower-left point")
    p.add_argument("--b", required=True, help="x,y of the lower-right point")
    p.add_argument("--c", required=True, help="x,y of the upper point")
    p.add_argument("--window", type=int, help="also brute-force on this window radius")
    common(p)
    p.set_defaults(func=cmd_fermat)

    p = sub.add_parser("sample", help="deterministic valid hive")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("dist", help="shortest distance in an oriented graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", required=True)
    common(p)
    p.set_defaults(func=cmd_dist)

    return parser


_COORD_FLAGS = {"--to", "--from", "--a", "--b", "--c", "--coords"}


def _absorb_negative_values(argv):
    """Let coordinate flags take values like "-1,0" without argparse reading
    them as options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _COORD_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_absorb_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"hiveweb: {exc}", file=sys.stderr)
        return 2
    except (HivewebError, KeyError) as exc:
        detail = str(exc.args[0]) if exc.args else str(exc)
        _emit({"error": type(exc).__name__, "detail": detail}, getattr(args, "out", None))
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
