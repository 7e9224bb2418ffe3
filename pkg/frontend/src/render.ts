// Canvas rendering of evaluated scenes.  World coordinates use the z = 0
// chart with y up; rays are clipped at the viewport; multiplicity-m edges
// are drawn as m parallel strokes.  Floats appear here and nowhere else.

import { scalarToNumber } from "./rational.js";
import { ElementJson, EvaluatedScene, GraphJson, Point3 } from "./schema.js";

export interface Viewport {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#17becf", "#e377c2"];

export function worldPoint(p: Point3): [number, number] {
  const z = scalarToNumber(p[2]);
  return [scalarToNumber(p[0]) - z, scalarToNumber(p[1]) - z];
}

export class SceneRenderer {
  constructor(
    private readonly canvas: HTMLCanvasElement,
    public viewport: Viewport = { x0: -5, y0: -8, x1: 15, y1: 12 },
  ) {}

  toScreen(x: number, y: number): [number, number] {
    const { x0, y0, x1, y1 } = this.viewport;
    const sx = ((x - x0) / (x1 - x0)) * this.canvas.width;
    const sy = ((y1 - y) / (y1 - y0)) * this.canvas.height;
    return [sx, sy];
  }

  toWorld(sx: number, sy: number): [number, number] {
    const { x0, y0, x1, y1 } = this.viewport;
    return [
      x0 + (sx / this.canvas.width) * (x1 - x0),
      y1 - (sy / this.canvas.height) * (y1 - y0),
    ];
  }

  draw(evaluated: EvaluatedScene | null, selection: Set<string>, stale: boolean): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    ctx.fillStyle = "#ffffff";
    ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);
    this.drawGrid(ctx);
    if (!evaluated) return;
    let colorIdx = 0;
    for (const [name, el] of Object.entries(evaluated.elements)) {
      if (el.kind === "line" || el.kind === "conic" || el.kind === "curve") {
        if (el.graph) {
          this.drawGraph(ctx, el.graph, PALETTE[colorIdx % PALETTE.length], name);
        }
        colorIdx += 1;
      }
    }
    for (const [name, el] of Object.entries(evaluated.elements)) {
      if (el.kind === "intersection" && el.points) {
        for (const pt of el.points) {
          const [x, y] = worldPoint(pt.location);
          this.drawDot(ctx, x, y, "#000000", 5);
          this.label(ctx, x, y, pt.multiplicity > 1 ? `${name} (x${pt.multiplicity})` : name);
        }
      }
    }
    for (const [name, el] of Object.entries(evaluated.elements)) {
      if (el.kind === "point" && el.coords) {
        const [x, y] = worldPoint(el.coords);
        const free = el.free === true;
        const selected = selection.has(name);
        this.drawDot(ctx, x, y, selected ? "#e11" : free ? "#111111" : "#555555", free ? 6 : 4);
        this.label(ctx, x, y, name);
      }
    }
    if (stale) {
      ctx.fillStyle = "rgba(200, 60, 60, 0.9)";
      ctx.font = "14px sans-serif";
      ctx.fillText("service unreachable: showing last geometry", 12, 22);
    }
  }

  private drawGrid(ctx: CanvasRenderingContext2D): void {
    const { x0, y0, x1, y1 } = this.viewport;
    ctx.strokeStyle = "#eeeeee";
    ctx.lineWidth = 1;
    for (let x = Math.ceil(x0); x <= Math.floor(x1); x++) {
      const [sx] = this.toScreen(x, 0);
      ctx.beginPath();
      ctx.moveTo(sx, 0);
      ctx.lineTo(sx, this.canvas.height);
      ctx.stroke();
    }
    for (let y = Math.ceil(y0); y <= Math.floor(y1); y++) {
      const [, sy] = this.toScreen(0, y);
      ctx.beginPath();
      ctx.moveTo(0, sy);
      ctx.lineTo(this.canvas.width, sy);
      ctx.stroke();
    }
  }

  private drawGraph(ctx: CanvasRenderingContext2D, graph: GraphJson, color: string,
                    name: string): void {
    const verts = graph.vertices.map(worldPoint);
    const span = 2 * Math.max(
      this.viewport.x1 - this.viewport.x0,
      this.viewport.y1 - this.viewport.y0,
    );
    const segments: [number, number, number, number, number][] = [];
    for (const e of graph.bounded_edges) {
      const [ax, ay] = verts[e.v1];
      const [bx, by] = verts[e.v2];
      segments.push([ax, ay, bx, by, e.multiplicity]);
    }
    for (const r of graph.rays) {
      const [ax, ay] = verts[r.vertex];
      const [dx, dy] = [r.direction[0] - r.direction[2], r.direction[1] - r.direction[2]];
      const scale = span / Math.max(Math.abs(dx), Math.abs(dy));
      segments.push([ax, ay, ax + dx * scale, ay + dy * scale, r.multiplicity]);
    }
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.8;
    for (const [ax, ay, bx, by, mult] of segments) {
      const [sax, say] = this.toScreen(ax, ay);
      const [sbx, sby] = this.toScreen(bx, by);
      let [nx, ny] = [-(sby - say), sbx - sax];
      const norm = Math.hypot(nx, ny) || 1;
      nx /= norm;
      ny /= norm;
      for (let t = 0; t < mult; t++) {
        const off = (t - (mult - 1) / 2) * 2.6;
        ctx.beginPath();
        ctx.moveTo(sax + nx * off, say + ny * off);
        ctx.lineTo(sbx + nx * off, sby + ny * off);
        ctx.stroke();
      }
    }
    if (verts.length > 0) {
      for (const [vx, vy] of verts) this.drawDot(ctx, vx, vy, color, 2.4);
      this.label(ctx, verts[0][0], verts[0][1], name, color);
    }
  }

  private drawDot(ctx: CanvasRenderingContext2D, x: number, y: number, color: string,
                  r: number): void {
    const [sx, sy] = this.toScreen(x, y);
    ctx.fillStyle = color;
    ctx.beginPath();
    ctx.arc(sx, sy, r, 0, 2 * Math.PI);
    ctx.fill();
  }

  private label(ctx: CanvasRenderingContext2D, x: number, y: number, text: string,
                color = "#111111"): void {
    const [sx, sy] = this.toScreen(x, y);
    ctx.fillStyle = color;
    ctx.font = "13px sans-serif";
    ctx.fillText(text, sx + 7, sy - 7);
  }
}

/** Abstract pencil-tree diagram in a side panel. */
export function drawPencilPanel(panel: HTMLElement, el: ElementJson): void {
  if (el.error) {
    panel.textContent = `pencil degenerate: ${el.error}`;
    return;
  }
  const lines = [
    `shape: ${el.shape ?? "?"}  realizable: ${String(el.realizable)}`,
    ...(el.splits ?? []).map((s) => `split {${s.join(", ")}}`),
  ];
  panel.textContent = lines.join("\n");
}
