// Scene builders used by the studio's tool buttons and by the tests: the
// exported JSON is exactly what gets POSTed to the service.

import { Point3, Scene } from "./schema.js";

export function emptyScene(): Scene {
  return { freePoints: new Map(), steps: [], checks: [] };
}

export function conic5Demo(): Scene {
  const scene = emptyScene();
  const pts: [string, Point3][] = [
    ["P1", ["0", "6", "0"]],
    ["P2", ["5", "3", "0"]],
    ["P3", ["10", "0", "0"]],
    ["P4", ["8", "8", "0"]],
    ["P5", ["2", "-3", "0"]],
  ];
  for (const [name, p] of pts) scene.freePoints.set(name, p);
  scene.steps.push({ op: "conic5", args: pts.map(([n]) => n), out: "C" });
  scene.checks.push({ kind: "proper", args: ["C"], name: "properness" });
  return scene;
}

/**
 * The twelve-step constructive Pappus scene over five free points, with the
 * conclusion verdicts as checks.  Point names "1".."5"; the conclusion
 * matrix check reports tropical singularity of rows a'', b'', c''.
 */
export function pappusScene(points: Point3[]): Scene {
  if (points.length !== 5) throw new Error("pappusScene needs five points");
  const scene = emptyScene();
  points.forEach((p, i) => scene.freePoints.set(String(i + 1), p));
  const joins: [string, [string, string]][] = [
    ["a", ["1", "4"]],
    ["b", ["2", "4"]],
    ["c", ["3", "4"]],
    ["a'", ["1", "5"]],
    ["b'", ["2", "5"]],
    ["c'", ["3", "5"]],
  ];
  for (const [out, args] of joins) scene.steps.push({ op: "join", args: [...args], out });
  scene.steps.push({ op: "meet", args: ["b", "c'"], out: "6" });
  scene.steps.push({ op: "meet", args: ["a'", "c"], out: "7" });
  scene.steps.push({ op: "meet", args: ["a", "b'"], out: "8" });
  scene.steps.push({ op: "join", args: ["1", "6"], out: "a''" });
  scene.steps.push({ op: "join", args: ["2", "7"], out: "b''" });
  scene.steps.push({ op: "join", args: ["3", "8"], out: "c''" });
  scene.checks.push({
    kind: "singular",
    args: ["a''", "b''", "c''"],
    name: "conclusion_matrix",
  });
  scene.checks.push({
    kind: "concurrent",
    args: ["a''", "b''", "c''"],
    name: "conclusion_geometric",
  });
  return scene;
}

export function pencilDemo(): Scene {
  const scene = emptyScene();
  const pts: [string, Point3][] = [
    ["P1", ["0", "6", "0"]],
    ["P2", ["5", "3", "0"]],
    ["P3", ["10", "0", "0"]],
    ["P4", ["8", "8", "0"]],
  ];
  for (const [name, p] of pts) scene.freePoints.set(name, p);
  scene.steps.push({ op: "pencil4", args: pts.map(([n]) => n), out: "PEN" });
  return scene;
}
