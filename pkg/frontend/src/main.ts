// Studio wiring: toolbar, canvas interaction, verdict panel.

import { drawPencilPanel, SceneRenderer, worldPoint } from "./render.js";
import { pappusScene, conic5Demo, pencilDemo } from "./scenes.js";
import { Studio, Tool } from "./state.js";
import { sceneToJson } from "./schema.js";

const SERVICE = (window as unknown as { TROPGEO_SERVICE?: string }).TROPGEO_SERVICE ??
  "http://127.0.0.1:8023";

const canvas = document.getElementById("board") as HTMLCanvasElement;
const toolbar = document.getElementById("toolbar") as HTMLElement;
const panel = document.getElementById("panel") as HTMLElement;
const verdicts = document.getElementById("verdicts") as HTMLElement;

const renderer = new SceneRenderer(canvas);
const studio = new Studio(SERVICE);

function redraw(): void {
  renderer.draw(studio.evaluated, new Set(studio.selection), studio.stale);
  if (verdicts && studio.evaluated) {
    const parts: string[] = [];
    for (const check of studio.evaluated.checks) {
      const value = check.error ? `error: ${check.error}` : String(check.result);
      parts.push(`${check.name} [${check.kind}]: ${value}`);
    }
    for (const d of studio.evaluated.diagnostics) {
      if (d.status !== "ok") parts.push(`${d.out}: ${d.status} (${d.error ?? ""})`);
      for (const flag of d.flags) parts.push(`${d.out}: ${flag}`);
    }
    verdicts.textContent = parts.join("\n") || "all steps ok";
    const pencil = Object.values(studio.evaluated.elements).find((e) => e.kind === "pencil");
    if (pencil && panel) drawPencilPanel(panel, pencil);
  }
}

studio.subscribe(redraw);

const tools: Tool[] = [
  "add-point", "drag", "join", "meet", "conic5", "pencil4", "pappus", "intersect",
];
for (const tool of tools) {
  const button = document.createElement("button");
  button.textContent = tool;
  button.onclick = () => {
    studio.tool = tool;
    studio.selection = [];
    for (const other of toolbar.querySelectorAll("button")) {
      other.classList.toggle("active", other === button);
    }
    redraw();
  };
  toolbar.appendChild(button);
}

for (const [label, build] of [
  ["demo: conic through 5", conic5Demo],
  ["demo: pencil of conics", pencilDemo],
  ["demo: Pappus construction", () =>
    pappusScene([
      ["0", "0", "0"],
      ["4", "1", "0"],
      ["-1", "5", "0"],
      ["7", "-3", "0"],
      ["-4", "-2", "0"],
    ])],
] as const) {
  const button = document.createElement("button");
  button.textContent = label;
  button.onclick = () => studio.reset(build());
  toolbar.appendChild(button);
}

const exportButton = document.createElement("button");
exportButton.textContent = "export scene JSON";
exportButton.onclick = () => {
  const blob = new Blob([JSON.stringify(sceneToJson(studio.scene), null, 2)], {
    type: "application/json",
  });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "scene.json";
  a.click();
};
toolbar.appendChild(exportButton);

function pointAt(sx: number, sy: number): string | null {
  if (!studio.evaluated) return null;
  for (const [name, el] of Object.entries(studio.evaluated.elements)) {
    if (el.kind !== "point" || !el.coords) continue;
    const [wx, wy] = worldPoint(el.coords);
    const [px, py] = renderer.toScreen(wx, wy);
    if (Math.hypot(px - sx, py - sy) < 10) return name;
  }
  return null;
}

function elementAt(sx: number, sy: number): string | null {
  // points first, then anything with a graph whose vertex is close
  const point = pointAt(sx, sy);
  if (point) return point;
  if (!studio.evaluated) return null;
  for (const [name, el] of Object.entries(studio.evaluated.elements)) {
    if (!el.graph) continue;
    for (const v of el.graph.vertices) {
      const [wx, wy] = worldPoint(v);
      const [px, py] = renderer.toScreen(wx, wy);
      if (Math.hypot(px - sx, py - sy) < 12) return name;
    }
  }
  return null;
}

let dragging: string | null = null;

canvas.addEventListener("mousedown", (event) => {
  const rect = canvas.getBoundingClientRect();
  const sx = event.clientX - rect.left;
  const sy = event.clientY - rect.top;
  if (studio.tool === "add-point") {
    const [wx, wy] = renderer.toWorld(sx, sy);
    studio.addFreePoint([wx, wy]);
    return;
  }
  if (studio.tool === "drag") {
    const name = pointAt(sx, sy);
    if (name && studio.scene.freePoints.has(name)) dragging = name;
    return;
  }
  const name = elementAt(sx, sy);
  if (name) studio.select(name);
});

canvas.addEventListener("mousemove", (event) => {
  if (!dragging) return;
  const rect = canvas.getBoundingClientRect();
  const [wx, wy] = renderer.toWorld(event.clientX - rect.left, event.clientY - rect.top);
  studio.dragPoint(dragging, [wx, wy]);
});

for (const done of ["mouseup", "mouseleave"] as const) {
  canvas.addEventListener(done, () => {
    dragging = null;
  });
}

studio.reset(conic5Demo());
