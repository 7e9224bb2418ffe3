"""Command-line interface.

Subcommands: det, solve, tp3line, curve, intersect, conic5, pencil4,
pappus, trees, serve, render, evaluate.  Matrices, points and scenes are
JSON files with exact "p/q" / "inf" scalar strings; results are JSON on
stdout.  Precondition violations exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .conics import classify_conic, is_proper_conic
from .constructions import (
    PappusTrace,
    conic_through_five,
    pappus_construct,
    pencil_through_four,
)
from .curves import build_curve
from .intersect import stable_intersect
from .linalg import PreconditionError, TropMatrix, cramer_solve, linkage_tree, tp3_line, trop_det
from .polynomial import CONIC_LABELS, TropicalPolynomial, conic_polynomial
from .scalars import format_scalar, parse_scalar
from .scene import SceneFormatError, evaluate_scene, graph_to_json, intersection_to_json, parse_scene
from .trees import enumerate_trees, is_planar_realizable


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _parse_matrix(data) -> TropMatrix:
    return TropMatrix.from_rows(
        [[parse_scalar(str(v)) for v in row] for row in data]
    )


def _parse_points(data) -> list:
    return [tuple(Fraction(parse_scalar(str(c))) for c in p) for p in data]


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_det(args) -> int:
    cert = trop_det(_parse_matrix(_load_json(args.matrix)))
    _emit(
        {
            "value": format_scalar(cert.value),
            "singular": cert.multiple_optima,
            "witnesses": [list(w) for w in cert.witnesses],
        }
    )
    return 0


def _cmd_solve(args) -> int:
    m = _parse_matrix(_load_json(args.matrix))
    sol = cramer_solve(m)
    out = {
        "point": [format_scalar(c) for c in sol.coords],
        "minors": [
            {"deleted_column": j, "value": format_scalar(c.value), "singular": c.multiple_optima}
            for j, c in enumerate(sol.minors)
        ],
    }
    if args.linkage:
        tree, p = linkage_tree(m)
        out["linkage"] = {
            "edges": [{"row": lab, "columns": [j, k]} for lab, j, k in tree.edges],
            "point": [format_scalar(c) for c in p],
        }
    _emit(out)
    return 0


def _cmd_tp3line(args) -> int:
    data = _load_json(args.pluecker)
    keys = ("a12", "a13", "a14", "a23", "a24", "a34")
    vals = [parse_scalar(str(data[k])) for k in keys]
    line = tp3_line(*vals)
    _emit(
        {
            "case": line.case_tag,
            "endpoint_1": [format_scalar(c) for c in line.endpoint_1],
            "endpoint_2": [format_scalar(c) for c in line.endpoint_2],
        }
    )
    return 0


def _cmd_curve(args) -> int:
    poly = TropicalPolynomial.from_json(_load_json(args.poly))
    graph = build_curve(poly)
    out = {"polynomial": poly.to_json(), "graph": graph_to_json(graph)}
    if args.json:
        Path(args.json).write_text(json.dumps(out, indent=2) + "\n")
    if args.svg:
        from .svgout import curve_svg

        Path(args.svg).write_text(curve_svg(graph))
    if not args.json:
        _emit(out)
    return 0


def _cmd_intersect(args) -> int:
    fa = TropicalPolynomial.from_json(_load_json(args.a))
    fb = TropicalPolynomial.from_json(_load_json(args.b))
    result = stable_intersect(fa, fb)
    out = intersection_to_json(result)
    if args.json:
        Path(args.json).write_text(json.dumps(out, indent=2) + "\n")
    if args.svg:
        from .svgout import overlay_svg

        ga, gb = build_curve(fa), build_curve(fb)
        pts = [((p.location[0], p.location[1]), p.multiplicity) for p in result.points]
        Path(args.svg).write_text(overlay_svg([ga, gb], pts))
    if not args.json:
        _emit(out)
    return 0


def _cmd_conic5(args) -> int:
    pts = _parse_points(_load_json(args.points))
    coeffs = conic_through_five(pts)
    out = {
        "coefficients": dict(zip(CONIC_LABELS, (format_scalar(c) for c in coeffs))),
        "proper": is_proper_conic(coeffs),
        "class": classify_conic(coeffs).tag,
    }
    if args.svg:
        from .svgout import curve_svg

        graph = build_curve(conic_polynomial(coeffs))
        pts2 = [(p[0] - p[2], p[1] - p[2]) for p in pts]
        Path(args.svg).write_text(curve_svg(graph, extra_points=pts2))
    _emit(out)
    return 0


def _cmd_pencil4(args) -> int:
    from .scene import pencil_to_json

    pts = _parse_points(_load_json(args.points))
    res = pencil_through_four(pts)
    _emit(pencil_to_json(res))
    if args.svg:
        from .svgout import curve_svg, pencil_tree_svg

        outdir = Path(args.svg)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "tree.svg").write_text(pencil_tree_svg(res))
        pts2 = [(p[0] - p[2], p[1] - p[2]) for p in pts]
        for n, entry in enumerate(res.pairs_of_lines):
            graph = build_curve(conic_polynomial(entry["coefficients"]))
            (outdir / f"pair_of_lines_{n}.svg").write_text(
                curve_svg(graph, extra_points=pts2)
            )
        for entry in res.limit_conics:
            graph = build_curve(conic_polynomial(entry["coefficients"]))
            (outdir / f"limit_{entry['missing_term']}.svg").write_text(
                curve_svg(graph, extra_points=pts2)
            )
    return 0


def _pappus_json(trace: PappusTrace) -> dict:
    return {
        "free_points": [[format_scalar(c) for c in p] for p in trace.free_points],
        "derived_points": {
            k: [format_scalar(c) for c in v] for k, v in trace.derived_points.items()
        },
        "lines": {k: [format_scalar(c) for c in v] for k, v in trace.lines.items()},
        "singular": trace.singular,
        "concurrent": trace.concurrent,
        "witness": None
        if trace.witness is None
        else [format_scalar(c) for c in trace.witness],
    }


def _cmd_pappus(args) -> int:
    if args.points:
        trace = pappus_construct(_parse_points(_load_json(args.points)))
        _emit(_pappus_json(trace))
        return 0
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        pts = [
            (Fraction(rng.randint(-60, 60)), Fraction(rng.randint(-60, 60)), Fraction(0))
            for _ in range(5)
        ]
        trace = pappus_construct(pts)
        if not trace.singular:
            _emit({"counterexample": True, "trial": trial, "trace": _pappus_json(trace)})
            return 1
    _emit({"counterexample": False, "trials": args.trials, "seed": args.seed})
    return 0


def _cmd_trees(args) -> int:
    labels = CONIC_LABELS if args.leaves == 6 else tuple(f"l{i}" for i in range(args.leaves))
    all_trees = enumerate_trees(labels)
    rows = []
    for t in all_trees:
        shape = t.shape6() if args.leaves == 6 else None
        realizable = (
            is_planar_realizable(t, labels) if args.leaves == 6 else None
        )
        if args.realizable and not realizable:
            continue
        row = {"splits": [list(s) for s in t.sorted_splits()]}
        if shape is not None:
            row["shape"] = shape
            row["realizable"] = realizable
        rows.append(row)
    _emit({"leaves": args.leaves, "count": len(rows), "trees": rows})
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    serve(args.port, host=args.host)
    return 0


def _parse_viewport(arg):
    if arg is None:
        return None
    parts = [Fraction(parse_scalar(s)) for s in arg.split(",")]
    if len(parts) != 4:
        raise PreconditionError("viewport must be x0,y0,x1,y1")
    return tuple(parts)


def _cmd_render(args) -> int:
    from .svgout import export_svg

    scene = parse_scene(_load_json(args.scene))
    evaluated = evaluate_scene(scene)
    svg = export_svg(evaluated, _parse_viewport(args.viewport))
    Path(args.svg).write_text(svg)
    return 0


def _cmd_evaluate(args) -> int:
    scene = parse_scene(_load_json(args.scene))
    _emit(evaluate_scene(scene).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropgeo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="tropical determinant with singularity certificate")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("solve", help="stable solution of an (n-1) x n system")
    p.add_argument("--matrix", required=True)
    p.add_argument("--linkage", action="store_true", help="also compute the linkage tree")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("tp3line", help="line in TP^3 from Pluecker orders")
    p.add_argument("--pluecker", required=True)
    p.set_defaults(func=_cmd_tp3line)

    p = sub.add_parser("curve", help="build a plane curve from a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--svg")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("intersect", help="stable intersection of two curves")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--svg")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("conic5", help="stable conic through five points")
    p.add_argument("--points", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_conic5)

    p = sub.add_parser("pencil4", help="pencil of conics through four points")
    p.add_argument("--points", required=True)
    p.add_argument("--svg", help="directory for per-conic SVGs and the tree diagram")
    p.set_defaults(func=_cmd_pencil4)

    p = sub.add_parser("pappus", help="constructive Pappus: one trace or a random sweep")
    p.add_argument("--points", help="five points (JSON); omit to run random trials")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_pappus)

    p = sub.add_parser("trees", help="enumerate trivalent leaf-labeled trees")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--realizable", action="store_true", help="only planar-realizable (6 leaves)")
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("serve", help="run the scene-evaluation HTTP service")
    p.add_argument("--port", type=int, default=8023)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("render", help="render a scene JSON to SVG")
    p.add_argument("--scene", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--viewport", help="x0,y0,x1,y1")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("evaluate", help="evaluate a scene JSON to stdout")
    p.add_argument("--scene", required=True)
    p.set_defaults(func=_cmd_evaluate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, SceneFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
