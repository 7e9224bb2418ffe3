// Studio state: the scene under construction, the active tool, selection,
// and the evaluation loop (re-evaluation throttled to animation frames,
// last in-flight response wins, stale responses discarded).

import { evaluateScene } from "./api.js";
import { snapToRational } from "./rational.js";
import { EvaluatedScene, Point3, Scene, Step, StepOp } from "./schema.js";
import { emptyScene } from "./scenes.js";

export type Tool =
  | "add-point"
  | "drag"
  | "join"
  | "meet"
  | "conic5"
  | "pencil4"
  | "pappus"
  | "intersect";

const TOOL_STEP: Record<string, { op: StepOp; arity: number; wants: string }> = {
  join: { op: "join", arity: 2, wants: "point" },
  meet: { op: "meet", arity: 2, wants: "line" },
  conic5: { op: "conic5", arity: 5, wants: "point" },
  pencil4: { op: "pencil4", arity: 4, wants: "point" },
  intersect: { op: "intersect", arity: 2, wants: "curve" },
};

const PAPPUS_ARITY = 5;

export class Studio {
  scene: Scene = emptyScene();
  tool: Tool = "add-point";
  selection: string[] = [];
  evaluated: EvaluatedScene | null = null;
  stale = false;

  private pointCounter = 0;
  private stepCounter = 0;
  private requestSeq = 0;
  private appliedSeq = 0;
  private pending = false;
  private onUpdate: () => void = () => {};

  constructor(private readonly baseUrl: string) {}

  subscribe(onUpdate: () => void): void {
    this.onUpdate = onUpdate;
  }

  reset(scene: Scene): void {
    this.scene = scene;
    this.selection = [];
    this.pointCounter = scene.freePoints.size;
    this.stepCounter = scene.steps.length;
    this.requestEvaluation();
  }

  addFreePoint(coords: [number, number]): string {
    this.pointCounter += 1;
    const name = `P${this.pointCounter}`;
    this.scene.freePoints.set(name, snapPoint(coords));
    this.requestEvaluation();
    return name;
  }

  /** Move a free point to a screen-derived position (snapped to rationals). */
  dragPoint(name: string, coords: [number, number]): void {
    if (!this.scene.freePoints.has(name)) return;
    this.scene.freePoints.set(name, snapPoint(coords));
    this.requestEvaluation();
  }

  elementKind(name: string): string | undefined {
    if (this.scene.freePoints.has(name)) return "point";
    const el = this.evaluated?.elements[name];
    if (el) return el.kind === "conic" || el.kind === "curve" ? "curve" : el.kind;
    return undefined;
  }

  /** Select an element under the current tool; emits steps when saturated. */
  select(name: string): void {
    if (this.tool === "pappus") {
      if (this.elementKind(name) !== "point" || this.selection.includes(name)) return;
      this.selection.push(name);
      if (this.selection.length === PAPPUS_ARITY) {
        this.emitPappus([...this.selection]);
        this.selection = [];
        this.requestEvaluation();
      } else {
        this.onUpdate();
      }
      return;
    }
    const toolSpec = TOOL_STEP[this.tool];
    if (!toolSpec) return;
    const kind = this.elementKind(name);
    const acceptable =
      toolSpec.wants === "curve"
        ? kind === "line" || kind === "curve"
        : kind === toolSpec.wants;
    if (!acceptable || this.selection.includes(name)) return;
    this.selection.push(name);
    if (this.selection.length === toolSpec.arity) {
      this.stepCounter += 1;
      const out = `${toolSpec.op}${this.stepCounter}`;
      const step: Step = { op: toolSpec.op, args: [...this.selection], out };
      this.scene.steps.push(step);
      this.selection = [];
      this.requestEvaluation();
    } else {
      this.onUpdate();
    }
  }

  /** The twelve-step constructive Pappus sequence over five chosen points,
   *  with singularity and concurrency checks on the conclusion triple. */
  private emitPappus(points: string[]): void {
    this.stepCounter += 1;
    const tag = `pp${this.stepCounter}`;
    const name = (s: string) => `${tag}:${s}`;
    const [p1, p2, p3, p4, p5] = points;
    const joins: [string, string, string][] = [
      ["a", p1, p4],
      ["b", p2, p4],
      ["c", p3, p4],
      ["a'", p1, p5],
      ["b'", p2, p5],
      ["c'", p3, p5],
    ];
    for (const [out, u, v] of joins) {
      this.scene.steps.push({ op: "join", args: [u, v], out: name(out) });
    }
    const meets: [string, string, string][] = [
      ["6", "b", "c'"],
      ["7", "a'", "c"],
      ["8", "a", "b'"],
    ];
    for (const [out, u, v] of meets) {
      this.scene.steps.push({ op: "meet", args: [name(u), name(v)], out: name(out) });
    }
    this.scene.steps.push({ op: "join", args: [p1, name("6")], out: name("a''") });
    this.scene.steps.push({ op: "join", args: [p2, name("7")], out: name("b''") });
    this.scene.steps.push({ op: "join", args: [p3, name("8")], out: name("c''") });
    const conclusion = [name("a''"), name("b''"), name("c''")];
    this.scene.checks.push({
      kind: "singular",
      args: conclusion,
      name: name("conclusion_matrix"),
    });
    this.scene.checks.push({
      kind: "concurrent",
      args: conclusion,
      name: name("conclusion_geometric"),
    });
  }

  /** Throttled re-evaluation: at most one request per animation frame, the
   *  latest response wins and out-of-order responses are dropped. */
  requestEvaluation(): void {
    if (this.pending) return;
    this.pending = true;
    const schedule =
      typeof requestAnimationFrame === "function"
        ? requestAnimationFrame
        : (fn: () => void) => setTimeout(fn, 16);
    schedule(() => {
      this.pending = false;
      const seq = ++this.requestSeq;
      evaluateScene(this.baseUrl, this.scene)
        .then((result) => {
          if (seq < this.appliedSeq) return; // stale response
          this.appliedSeq = seq;
          this.evaluated = result;
          this.stale = false;
          this.onUpdate();
        })
        .catch(() => {
          this.stale = true; // keep last geometry, show the banner
          this.onUpdate();
        });
    });
  }
}

function snapPoint(coords: [number, number]): Point3 {
  return [snapToRational(coords[0]), snapToRational(coords[1]), "0"];
}
