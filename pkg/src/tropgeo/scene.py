"""Stateless scene evaluation for dynamic constructions.

A scene is a set of named free points plus an ordered list of construction
steps (join, meet, conic5, pencil4, intersect, curve), each defining a new
named element from previously defined ones.  Evaluation is a pure function
of the free points: re-evaluating with moved points changes geometry only,
never the step structure.  Optional checks (concurrent / singular / proper)
are evaluated into the diagnostics, which is how a constructive-Pappus scene
reports its verdict.

Coordinates cross the wire as exact "p/q" strings; +inf is "inf".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .conics import classify_conic, is_proper_conic
from .constructions import (
    GenericityError,
    lines_concurrent,
    pencil_through_four,
    trop_cross,
)
from .curves import PlaneCurveGraph, build_curve
from .intersect import NotTransversal, stable_intersect, transversal_intersect
from .linalg import is_tropically_singular
from .polynomial import TropicalPolynomial, conic_polynomial, line_polynomial
from .scalars import EpsRational, format_scalar, parse_scalar

STEP_KINDS = ("join", "meet", "conic5", "pencil4", "intersect", "curve")
CHECK_KINDS = ("concurrent", "singular", "proper")


class SceneFormatError(ValueError):
    """The scene payload does not conform to the schema."""


@dataclass(frozen=True)
class Step:
    op: str
    args: tuple
    out: str
    poly: Optional[TropicalPolynomial] = None


@dataclass(frozen=True)
class Check:
    kind: str
    args: tuple
    name: str


@dataclass
class Scene:
    free_points: dict  # name -> (x, y, z) Fractions, insertion order preserved
    steps: list
    checks: list = field(default_factory=list)

    def to_json(self) -> dict:
        data = {
            "free_points": {
                name: [format_scalar(c) for c in p] for name, p in self.free_points.items()
            },
            "steps": [_step_to_json(s) for s in self.steps],
        }
        if self.checks:
            data["checks"] = [
                {"kind": c.kind, "args": list(c.args), "name": c.name} for c in self.checks
            ]
        return data


def _step_to_json(s: Step) -> dict:
    out = {"op": s.op, "out": s.out}
    if s.op == "curve":
        out["poly"] = s.poly.to_json()
    else:
        out["args"] = list(s.args)
    return out


def parse_scene(data) -> Scene:
    if not isinstance(data, dict):
        raise SceneFormatError("scene must be a JSON object")
    raw_points = data.get("free_points", {})
    if not isinstance(raw_points, dict):
        raise SceneFormatError("free_points must map names to coordinate triples")
    free_points = {}
    for name, coords in raw_points.items():
        if not isinstance(coords, (list, tuple)) or len(coords) != 3:
            raise SceneFormatError(f"point {name!r} needs three coordinates")
        try:
            free_points[name] = tuple(Fraction(parse_scalar(str(c))) for c in coords)
        except (ValueError, ZeroDivisionError) as exc:
            raise SceneFormatError(f"point {name!r}: {exc}") from exc
    steps = []
    defined = set(free_points)
    for idx, raw in enumerate(data.get("steps", [])):
        if not isinstance(raw, dict) or "op" not in raw or "out" not in raw:
            raise SceneFormatError(f"step {idx} needs 'op' and 'out'")
        op = raw["op"]
        out = raw["out"]
        if op not in STEP_KINDS:
            raise SceneFormatError(f"step {idx}: unknown op {op!r}")
        if not isinstance(out, str) or not out:
            raise SceneFormatError(f"step {idx}: bad output name")
        if out in defined:
            raise SceneFormatError(f"step {idx}: name {out!r} already defined")
        poly = None
        args: tuple = ()
        if op == "curve":
            try:
                poly = TropicalPolynomial.from_json(raw["poly"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SceneFormatError(f"step {idx}: bad polynomial: {exc}") from exc
        else:
            args = tuple(raw.get("args", ()))
            want = {"join": 2, "meet": 2, "conic5": 5, "pencil4": 4, "intersect": 2}[op]
            if len(args) != want:
                raise SceneFormatError(f"step {idx}: {op} takes {want} arguments")
        steps.append(Step(op, args, out, poly))
        defined.add(out)
    checks = []
    for idx, raw in enumerate(data.get("checks", [])):
        if not isinstance(raw, dict) or raw.get("kind") not in CHECK_KINDS:
            raise SceneFormatError(f"check {idx}: unknown kind")
        checks.append(
            Check(raw["kind"], tuple(raw.get("args", ())), str(raw.get("name", f"check{idx}")))
        )
    return Scene(free_points, steps, checks)


@dataclass
class EvaluatedScene:
    elements: dict  # name -> element dict (kind + geometry)
    diagnostics: list  # per-step records
    checks: list  # check results

    def to_json(self) -> dict:
        return {
            "elements": {name: _element_to_json(el) for name, el in self.elements.items()},
            "diagnostics": self.diagnostics,
            "checks": self.checks,
        }


def evaluate_scene(scene: Scene) -> EvaluatedScene:
    """Topological (sequential) evaluation; errors stay local to their step."""
    elements = {}
    diagnostics = []
    for name, coords in scene.free_points.items():
        elements[name] = {"kind": "point", "coords": coords, "free": True}
    failed = set()
    for idx, step in enumerate(scene.steps):
        record = {"step": idx, "op": step.op, "out": step.out, "status": "ok", "flags": []}
        missing = [a for a in step.args if a not in elements and a not in failed]
        if missing:
            record["status"] = "error"
            record["error"] = f"unknown reference: {', '.join(missing)}"
            failed.add(step.out)
            diagnostics.append(record)
            continue
        if any(a in failed for a in step.args):
            record["status"] = "skipped"
            record["error"] = "depends on a failed step"
            failed.add(step.out)
            diagnostics.append(record)
            continue
        try:
            element = _apply_step(step, elements, record)
        except _StepTypeError as exc:
            record["status"] = "error"
            record["error"] = str(exc)
            failed.add(step.out)
            diagnostics.append(record)
            continue
        elements[step.out] = element
        diagnostics.append(record)
    checks = [_run_check(c, elements) for c in scene.checks]
    return EvaluatedScene(elements, diagnostics, checks)


class _StepTypeError(TypeError):
    pass


def _want(elements, name, kinds, op):
    el = elements[name]
    if el["kind"] not in kinds:
        raise _StepTypeError(
            f"{op} cannot take {name!r} of kind {el['kind']} (needs {'/'.join(kinds)})"
        )
    return el


def _apply_step(step: Step, elements, record) -> dict:
    op = step.op
    if op == "join":
        pts = [_want(elements, a, ("point",), op)["coords"] for a in step.args]
        if _tp2_same(pts[0], pts[1]):
            record["flags"].append("coincident points: stable join applied")
        coeffs = trop_cross(pts[0], pts[1])
        return _line_element(coeffs)
    if op == "meet":
        lines = [_want(elements, a, ("line",), op)["coeffs"] for a in step.args]
        if _tp2_same(lines[0], lines[1]):
            record["flags"].append("identical lines: stable meet applied")
        point = trop_cross(lines[0], lines[1])
        return {"kind": "point", "coords": point, "free": False}
    if op == "conic5":
        pts = [_want(elements, a, ("point",), op)["coords"] for a in step.args]
        from .constructions import conic_through_five

        coeffs = conic_through_five(pts)
        poly = conic_polynomial(coeffs)
        record["flags"].append(f"classified {classify_conic(coeffs).tag}")
        return {
            "kind": "conic",
            "coefficients": coeffs,
            "polynomial": poly,
            "graph": build_curve(poly),
            "proper": is_proper_conic(coeffs),
        }
    if op == "pencil4":
        pts = [_want(elements, a, ("point",), op)["coords"] for a in step.args]
        try:
            pencil = pencil_through_four(pts)
        except GenericityError as exc:
            record["flags"].append(f"genericity failure: {exc}")
            return {"kind": "pencil", "error": str(exc)}
        return {"kind": "pencil", "result": pencil}
    if op == "intersect":
        polys = []
        for a in step.args:
            el = _want(elements, a, ("line", "conic", "curve"), op)
            if el["kind"] == "line":
                polys.append(line_polynomial(el["coeffs"]))
            else:
                polys.append(el["polynomial"])
        direct = transversal_intersect(build_curve(polys[0]), build_curve(polys[1]))
        if isinstance(direct, NotTransversal):
            record["flags"].append("not transversal: stable perturbation applied")
        result = stable_intersect(polys[0], polys[1])
        return {"kind": "intersection", "result": result}
    if op == "curve":
        return {"kind": "curve", "polynomial": step.poly, "graph": build_curve(step.poly)}
    raise AssertionError(f"unhandled op {op}")


def _tp2_same(a, b) -> bool:
    d = a[0] - b[0]
    return a[1] - b[1] == d and a[2] - b[2] == d


def _line_element(coeffs) -> dict:
    return {
        "kind": "line",
        "coeffs": coeffs,
        "graph": build_curve(line_polynomial(coeffs)),
    }


def _run_check(check: Check, elements) -> dict:
    out = {"name": check.name, "kind": check.kind, "args": list(check.args)}
    try:
        if check.kind == "concurrent":
            lines = [_want(elements, a, ("line",), "concurrent") for a in check.args]
            if len(lines) != 3:
                raise _StepTypeError("concurrent takes three lines")
            ok, witness = lines_concurrent(*(l["coeffs"] for l in lines))
            out["result"] = ok
            if witness is not None:
                out["witness"] = [format_scalar(c) for c in witness]
        elif check.kind == "singular":
            lines = [_want(elements, a, ("line",), "singular") for a in check.args]
            out["result"] = is_tropically_singular([l["coeffs"] for l in lines])
        elif check.kind == "proper":
            (conic,) = (_want(elements, a, ("conic",), "proper") for a in check.args)
            out["result"] = is_proper_conic(conic["coefficients"])
    except (KeyError, _StepTypeError, ValueError) as exc:
        out["error"] = str(exc)
    return out


# --- JSON views of evaluated geometry ----------------------------------------


def _element_to_json(el) -> dict:
    kind = el["kind"]
    if kind == "point":
        return {"kind": "point", "coords": [format_scalar(c) for c in el["coords"]],
                "free": el.get("free", False)}
    if kind == "line":
        return {"kind": "line", "coeffs": [format_scalar(c) for c in el["coeffs"]],
                "graph": graph_to_json(el["graph"])}
    if kind == "conic":
        return {
            "kind": "conic",
            "coefficients": [format_scalar(c) for c in el["coefficients"]],
            "polynomial": el["polynomial"].to_json(),
            "graph": graph_to_json(el["graph"]),
            "proper": el["proper"],
        }
    if kind == "curve":
        return {
            "kind": "curve",
            "polynomial": el["polynomial"].to_json(),
            "graph": graph_to_json(el["graph"]),
        }
    if kind == "pencil":
        if "error" in el:
            return {"kind": "pencil", "error": el["error"]}
        return {"kind": "pencil", **pencil_to_json(el["result"])}
    if kind == "intersection":
        return {"kind": "intersection", **intersection_to_json(el["result"])}
    raise AssertionError(f"unhandled element kind {kind}")


def graph_to_json(g: PlaneCurveGraph) -> dict:
    return {
        "vertices": [[format_scalar(_plain(x)), format_scalar(_plain(y)), "0"]
                     for x, y in g.vertices],
        "bounded_edges": [
            {"v1": e.v1, "v2": e.v2, "multiplicity": e.multiplicity} for e in g.bounded_edges
        ],
        "rays": [
            {
                "vertex": r.vertex,
                "direction": [r.direction[0], r.direction[1], 0],
                "multiplicity": r.multiplicity,
            }
            for r in g.rays
        ],
    }


def _plain(v):
    return v.std if isinstance(v, EpsRational) else v


def intersection_to_json(si) -> dict:
    return {
        "points": [
            {"location": [format_scalar(c) for c in pt.location], "multiplicity": pt.multiplicity}
            for pt in si.points
        ],
        "total": si.total,
    }


def pencil_to_json(res) -> dict:
    return {
        "pluecker": {
            "|".join(sorted(pair)): format_scalar(v) for pair, v in sorted(
                res.pluecker.items(), key=lambda kv: sorted(kv[0])
            )
        },
        "splits": [list(s) for s in res.tree.sorted_splits()],
        "shape": res.shape,
        "realizable": res.realizable,
        "pairs_of_lines": [
            {
                "pairing": [list(p) for p in entry["pairing"]],
                "lines": [[format_scalar(c) for c in u] for u in entry["lines"]],
                "coefficients": [format_scalar(c) for c in entry["coefficients"]],
            }
            for entry in res.pairs_of_lines
        ],
        "limit_conics": [
            {
                "missing_term": entry["missing_term"],
                "coefficients": [format_scalar(c) for c in entry["coefficients"]],
            }
            for entry in res.limit_conics
        ],
        "vertex_conics": [
            {
                "point_index": ev.point_index,
                "arc": ev.arc,
                "t_range": [format_scalar(t) for t in ev.t_range],
                "coefficients": [format_scalar(c) for c in ev.coefficients],
            }
            for ev in res.vertex_conics
        ],
    }
