"""The scene service: declarative constructions evaluated in one shot.

A scene is free points plus construction steps; evaluation is a pure
function of the free points, so a client can re-send the scene on every
drag tick.  The same payload works over HTTP (`tropgeo serve`, then POST
/api/evaluate) and through `tropgeo evaluate` / `tropgeo render`.

    python3 demos/07_scene_service.py          # writes demos/out/scene.svg
"""

import json
from pathlib import Path

from tropgeo.scene import evaluate_scene, parse_scene
from tropgeo.svgout import export_svg

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

scene = {
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
    "checks": [{"kind": "proper", "args": ["C"], "name": "conic is proper"}],
}

evaluated = evaluate_scene(parse_scene(scene))
print("diagnostics:")
for d in evaluated.diagnostics:
    print("  ", d)
print("checks:", evaluated.checks)
print("intersection X:", json.dumps(evaluated.to_json()["elements"]["X"], indent=2))

(OUT / "scene.svg").write_text(export_svg(evaluated))
print("wrote", OUT / "scene.svg")
