"""Scene schema, evaluation semantics, HTTP service, SVG determinism."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from tropgeo.scene import (
    Scene,
    SceneFormatError,
    evaluate_scene,
    parse_scene,
)
from tropgeo.svgout import export_svg, pencil_tree_svg

GOLDEN = Path(__file__).parent / "golden"


def _demo_scene_json():
    return {
        "free_points": {
            "P1": ["0", "6", "0"],
            "P2": ["5", "3", "0"],
            "P3": ["10", "0", "0"],
            "P4": ["8", "8", "0"],
            "P5": ["2", "-3", "0"],
        },
        "steps": [
            {"op": "join", "args": ["P1", "P2"], "out": "L"},
            {"op": "join", "args": ["P3", "P4"], "out": "M"},
            {"op": "meet", "args": ["L", "M"], "out": "Q"},
            {"op": "conic5", "args": ["P1", "P2", "P3", "P4", "P5"], "out": "C"},
            {"op": "intersect", "args": ["L", "C"], "out": "X"},
        ],
    }


def _pappus_scene_json(points):
    steps = []
    for out, args in (
        ("a", ["1", "4"]), ("b", ["2", "4"]), ("c", ["3", "4"]),
        ("a'", ["1", "5"]), ("b'", ["2", "5"]), ("c'", ["3", "5"]),
    ):
        steps.append({"op": "join", "args": args, "out": out})
    steps.append({"op": "meet", "args": ["b", "c'"], "out": "6"})
    steps.append({"op": "meet", "args": ["a'", "c"], "out": "7"})
    steps.append({"op": "meet", "args": ["a", "b'"], "out": "8"})
    steps.append({"op": "join", "args": ["1", "6"], "out": "a''"})
    steps.append({"op": "join", "args": ["2", "7"], "out": "b''"})
    steps.append({"op": "join", "args": ["3", "8"], "out": "c''"})
    return {
        "free_points": {str(i + 1): [str(c) for c in p] for i, p in enumerate(points)},
        "steps": steps,
        "checks": [
            {"kind": "singular", "args": ["a''", "b''", "c''"], "name": "conclusion_matrix"},
            {"kind": "concurrent", "args": ["a''", "b''", "c''"], "name": "conclusion_geometric"},
        ],
    }


def test_scene_round_trip():
    scene = parse_scene(_demo_scene_json())
    assert scene.to_json() == parse_scene(scene.to_json()).to_json()


def test_scene_validation_errors():
    with pytest.raises(SceneFormatError):
        parse_scene({"free_points": {"A": ["1", "2"]}})
    with pytest.raises(SceneFormatError):
        parse_scene({"free_points": {}, "steps": [{"op": "warp", "out": "x"}]})
    with pytest.raises(SceneFormatError):
        parse_scene({"free_points": {}, "steps": [{"op": "join", "args": ["a"], "out": "x"}]})
    with pytest.raises(SceneFormatError):
        parse_scene(
            {"free_points": {"A": ["0", "0", "0"]},
             "steps": [{"op": "join", "args": ["A", "A"], "out": "A"}]}
        )


def test_evaluation_of_demo_scene():
    ev = evaluate_scene(parse_scene(_demo_scene_json()))
    assert all(d["status"] == "ok" for d in ev.diagnostics)
    assert ev.elements["C"]["proper"] is True
    assert ev.elements["X"]["result"].total == 2
    out = ev.to_json()
    assert out["elements"]["Q"]["kind"] == "point"


def test_join_meet_conic5_are_total():
    scene = parse_scene(
        {
            "free_points": {"A": ["0", "0", "0"], "B": ["0", "0", "0"]},
            "steps": [
                {"op": "join", "args": ["A", "B"], "out": "L"},
                {"op": "join", "args": ["A", "B"], "out": "L2"},
                {"op": "meet", "args": ["L", "L2"], "out": "P"},
                {"op": "conic5", "args": ["A", "B", "A", "B", "A"], "out": "C"},
            ],
        }
    )
    ev = evaluate_scene(scene)
    assert all(d["status"] == "ok" for d in ev.diagnostics)
    assert any("stable join" in f for f in ev.diagnostics[0]["flags"])
    assert any("stable meet" in f for f in ev.diagnostics[2]["flags"])


def test_error_and_skip_propagation():
    data = _demo_scene_json()
    data["steps"].append({"op": "meet", "args": ["L", "GHOST"], "out": "bad"})
    data["steps"].append({"op": "join", "args": ["bad", "P1"], "out": "worse"})
    data["steps"].append({"op": "meet", "args": ["P1", "P2"], "out": "mismatch"})
    ev = evaluate_scene(parse_scene(data))
    by_out = {d["out"]: d for d in ev.diagnostics}
    assert by_out["bad"]["status"] == "error"
    assert by_out["worse"]["status"] == "skipped"
    assert by_out["mismatch"]["status"] == "error"
    assert "needs line" in by_out["mismatch"]["error"]
    # earlier steps still present
    assert "C" in ev.elements and "bad" not in ev.elements


def test_pappus_scene_checks_report_verdict():
    points = [(0, 0, 0), (4, 1, 0), (-1, 5, 0), (7, -3, 0), (-4, -2, 0)]
    ev = evaluate_scene(parse_scene(_pappus_scene_json(points)))
    checks = {c["name"]: c for c in ev.checks}
    assert checks["conclusion_matrix"]["result"] is True
    assert checks["conclusion_geometric"]["result"] in (True, False)
    from tropgeo.constructions import pappus_construct

    trace = pappus_construct([tuple(Fraction(c) for c in p) for p in points])
    assert checks["conclusion_matrix"]["result"] == trace.singular
    assert checks["conclusion_geometric"]["result"] == trace.concurrent


def test_pencil_genericity_failure_is_a_diagnostic_not_an_error():
    scene = parse_scene(
        {
            "free_points": {
                "A": ["0", "0", "0"], "B": ["0", "0", "0"],
                "C": ["1", "1", "0"], "D": ["2", "2", "0"],
            },
            "steps": [{"op": "pencil4", "args": ["A", "B", "C", "D"], "out": "PEN"}],
        }
    )
    ev = evaluate_scene(scene)
    assert ev.diagnostics[0]["status"] == "ok"
    assert any("genericity" in f for f in ev.diagnostics[0]["flags"])
    assert "error" in ev.elements["PEN"]
    assert ev.to_json()["elements"]["PEN"]["kind"] == "pencil"


def test_evaluation_is_deterministic():
    data = _demo_scene_json()
    a = json.dumps(evaluate_scene(parse_scene(data)).to_json(), sort_keys=False)
    b = json.dumps(evaluate_scene(parse_scene(data)).to_json(), sort_keys=False)
    assert a == b
    assert export_svg(evaluate_scene(parse_scene(data))) == export_svg(
        evaluate_scene(parse_scene(data))
    )


def test_continuity_smoke():
    base = _demo_scene_json()

    def run(dx):
        data = json.loads(json.dumps(base))
        data["free_points"]["P2"] = [str(Fraction(5) + dx), "3", "0"]
        ev = evaluate_scene(parse_scene(data))
        names = tuple(d["out"] for d in ev.diagnostics if d["status"] == "ok")
        coeffs = ev.elements["C"]["coefficients"]
        line = ev.elements["L"]["coeffs"]
        meet = ev.elements["Q"]["coords"]
        return names, coeffs + tuple(line) + tuple(meet)

    names0, vals0 = run(Fraction(0))
    for delta in (Fraction(1, 100), Fraction(1, 200)):
        names, vals = run(delta)
        assert names == names0  # step structure never changes
        moved = max(abs(a - b) for a, b in zip(vals, vals0))
        assert moved <= 10 * delta  # coarse Lipschitz bound


def test_svg_empty_scene_valid():
    svg = export_svg(evaluate_scene(Scene({}, [])))
    assert svg.startswith("<svg") and svg.endswith("</svg>")


def test_scene_svg_matches_golden():
    svg = export_svg(evaluate_scene(parse_scene(_demo_scene_json())))
    golden_path = GOLDEN / "demo_scene.svg"
    assert svg == golden_path.read_text()


def test_pencil_tree_svg_matches_golden():
    from tropgeo.constructions import pencil_through_four

    golden = json.loads((GOLDEN / "pencil_fixture.json").read_text())
    pts = [tuple(Fraction(c) for c in p) for p in golden["points"]]
    svg = pencil_tree_svg(pencil_through_four(pts, sweep=False))
    assert svg == (GOLDEN / "pencil_tree.svg").read_text()


# --- HTTP service ---------------------------------------------------------------


def test_http_endpoints():
    from fastapi.testclient import TestClient
    from tropgeo.server import create_app

    client = TestClient(create_app())
    assert client.get("/api/health").json() == {"status": "ok"}
    r = client.post("/api/evaluate", json=_demo_scene_json())
    assert r.status_code == 200
    body = r.json()
    assert body["elements"]["C"]["proper"] is True
    assert body["elements"]["X"]["total"] == 2
    # coordinates cross the wire as exact strings
    assert body["elements"]["Q"]["coords"][0].lstrip("-").replace("/", "").isdigit()
    bad = client.post("/api/evaluate", json={"free_points": {"A": ["oops", "0", "0"]}})
    assert bad.status_code == 400
    assert "error" in bad.json()


def test_http_pappus_end_to_end():
    from fastapi.testclient import TestClient
    from tropgeo.server import create_app

    client = TestClient(create_app())
    scene = _pappus_scene_json([(0, 0, 0), (4, 1, 0), (-1, 5, 0), (7, -3, 0), (-4, -2, 0)])
    body = client.post("/api/evaluate", json=scene).json()
    checks = {c["name"]: c for c in body["checks"]}
    assert checks["conclusion_matrix"]["result"] is True
