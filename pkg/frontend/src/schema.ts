// Scene wire schema shared with the evaluation service.  Parsing is strict
// and serialization is lossless: parse(serialize(scene)) round-trips.

import { isScalarString } from "./rational.js";

export type Scalar = string; // "p/q", "p", or "inf"
export type Point3 = [Scalar, Scalar, Scalar];

export type StepOp = "join" | "meet" | "conic5" | "pencil4" | "intersect" | "curve";

export interface PolyTerm {
  i: number;
  j: number;
  k: number;
  coeff: Scalar;
}

export interface PolyJson {
  degree: number;
  terms: PolyTerm[];
}

export interface Step {
  op: StepOp;
  out: string;
  args: string[];
  poly?: PolyJson;
}

export type CheckKind = "concurrent" | "singular" | "proper";

export interface Check {
  kind: CheckKind;
  args: string[];
  name: string;
}

export interface Scene {
  freePoints: Map<string, Point3>;
  steps: Step[];
  checks: Check[];
}

// --- response types -----------------------------------------------------------

export interface RayJson {
  vertex: number;
  direction: [number, number, number];
  multiplicity: number;
}

export interface GraphJson {
  vertices: Point3[];
  bounded_edges: { v1: number; v2: number; multiplicity: number }[];
  rays: RayJson[];
}

export interface ElementJson {
  kind: "point" | "line" | "conic" | "curve" | "pencil" | "intersection";
  coords?: Point3;
  free?: boolean;
  coeffs?: Scalar[];
  coefficients?: Scalar[];
  graph?: GraphJson;
  proper?: boolean;
  shape?: string;
  realizable?: boolean | null;
  splits?: string[][];
  points?: { location: Point3; multiplicity: number }[];
  total?: number;
  error?: string;
}

export interface Diagnostic {
  step: number;
  op: StepOp;
  out: string;
  status: "ok" | "error" | "skipped";
  flags: string[];
  error?: string;
}

export interface CheckResult {
  name: string;
  kind: CheckKind;
  args: string[];
  result?: boolean;
  witness?: Scalar[];
  error?: string;
}

export interface EvaluatedScene {
  elements: Record<string, ElementJson>;
  diagnostics: Diagnostic[];
  checks: CheckResult[];
}

// --- strict parse / lossless serialize ------------------------------------------

export class SchemaError extends Error {}

const STEP_ARITY: Record<Exclude<StepOp, "curve">, number> = {
  join: 2,
  meet: 2,
  conic5: 5,
  pencil4: 4,
  intersect: 2,
};

function asRecord(value: unknown, what: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new SchemaError(`${what} must be an object`);
  }
  return value as Record<string, unknown>;
}

function parsePoint(value: unknown, what: string): Point3 {
  if (!Array.isArray(value) || value.length !== 3 || !value.every(isScalarString)) {
    throw new SchemaError(`${what} must be a triple of scalar strings`);
  }
  if (value.includes("inf")) {
    throw new SchemaError(`${what} must be finite`);
  }
  return [value[0], value[1], value[2]] as Point3;
}

export function parseScene(data: unknown): Scene {
  const root = asRecord(data, "scene");
  const freePoints = new Map<string, Point3>();
  const rawPoints = asRecord(root.free_points ?? {}, "free_points");
  for (const [name, coords] of Object.entries(rawPoints)) {
    freePoints.set(name, parsePoint(coords, `point ${name}`));
  }
  const defined = new Set(freePoints.keys());
  const steps: Step[] = [];
  const rawSteps = root.steps ?? [];
  if (!Array.isArray(rawSteps)) throw new SchemaError("steps must be an array");
  rawSteps.forEach((raw, idx) => {
    const step = asRecord(raw, `step ${idx}`);
    const op = step.op as StepOp;
    const out = step.out;
    if (typeof out !== "string" || !out) throw new SchemaError(`step ${idx}: bad out`);
    if (defined.has(out)) throw new SchemaError(`step ${idx}: ${out} already defined`);
    if (op === "curve") {
      const poly = asRecord(step.poly, `step ${idx} poly`);
      const terms = poly.terms;
      if (typeof poly.degree !== "number" || !Array.isArray(terms)) {
        throw new SchemaError(`step ${idx}: bad polynomial`);
      }
      const parsedTerms = terms.map((t, ti) => {
        const term = asRecord(t, `step ${idx} term ${ti}`);
        const { i, j, k, coeff } = term as Partial<PolyTerm>;
        if (
          typeof i !== "number" || typeof j !== "number" || typeof k !== "number" ||
          !isScalarString(coeff)
        ) {
          throw new SchemaError(`step ${idx}: bad term ${ti}`);
        }
        return { i, j, k, coeff };
      });
      steps.push({ op, out, args: [], poly: { degree: poly.degree, terms: parsedTerms } });
    } else if (op in STEP_ARITY) {
      const args = step.args;
      if (!Array.isArray(args) || !args.every((a) => typeof a === "string")) {
        throw new SchemaError(`step ${idx}: bad args`);
      }
      if (args.length !== STEP_ARITY[op as Exclude<StepOp, "curve">]) {
        throw new SchemaError(`step ${idx}: ${op} takes ${STEP_ARITY[op as Exclude<StepOp, "curve">]} args`);
      }
      steps.push({ op, out, args: args as string[] });
    } else {
      throw new SchemaError(`step ${idx}: unknown op ${String(op)}`);
    }
    defined.add(out);
  });
  const checks: Check[] = [];
  const rawChecks = root.checks ?? [];
  if (!Array.isArray(rawChecks)) throw new SchemaError("checks must be an array");
  rawChecks.forEach((raw, idx) => {
    const check = asRecord(raw, `check ${idx}`);
    const kind = check.kind;
    if (kind !== "concurrent" && kind !== "singular" && kind !== "proper") {
      throw new SchemaError(`check ${idx}: unknown kind`);
    }
    const args = check.args;
    if (!Array.isArray(args) || !args.every((a) => typeof a === "string")) {
      throw new SchemaError(`check ${idx}: bad args`);
    }
    const name = typeof check.name === "string" ? check.name : `check${idx}`;
    checks.push({ kind, args: args as string[], name });
  });
  return { freePoints, steps, checks };
}

export function sceneToJson(scene: Scene): Record<string, unknown> {
  const freePoints: Record<string, Point3> = {};
  for (const [name, p] of scene.freePoints) freePoints[name] = p;
  const steps = scene.steps.map((s) =>
    s.op === "curve"
      ? { op: s.op, out: s.out, poly: s.poly }
      : { op: s.op, args: s.args, out: s.out },
  );
  const out: Record<string, unknown> = { free_points: freePoints, steps };
  if (scene.checks.length > 0) {
    out.checks = scene.checks.map((c) => ({ kind: c.kind, args: c.args, name: c.name }));
  }
  return out;
}
