// Scene schema round-trip against the committed fixtures, plus validation
// and the rational snapping contract.

import { readdirSync, readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { parseScene, SchemaError, sceneToJson } from "../src/schema.js";
import { scalarToNumber, snapToRational, SNAP_DENOMINATOR } from "../src/rational.js";
import { conic5Demo, pappusScene } from "../src/scenes.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

describe("scene fixtures round-trip losslessly", () => {
  const files = readdirSync(FIXTURES).filter((f) => f.endsWith(".json")).sort();
  it("has the committed corpus", () => {
    expect(files.length).toBe(20);
  });
  for (const file of files) {
    it(`round-trips ${file}`, () => {
      const raw = JSON.parse(readFileSync(join(FIXTURES, file), "utf8"));
      const scene = parseScene(raw);
      const serialized = sceneToJson(scene);
      // normalize: absent checks key means empty checks
      const expected = { checks: undefined, ...raw };
      if (!expected.checks) delete expected.checks;
      if (!("free_points" in expected)) expected.free_points = {};
      if (!("steps" in expected)) expected.steps = [];
      expect(serialized).toEqual(expected);
      // a second parse of the serialization is identical again
      expect(sceneToJson(parseScene(serialized))).toEqual(serialized);
    });
  }
});

describe("validation", () => {
  it("rejects malformed scenes", () => {
    expect(() => parseScene({ free_points: { A: ["1", "2"] } })).toThrow(SchemaError);
    expect(() => parseScene({ free_points: {}, steps: [{ op: "warp", out: "x" }] }))
      .toThrow(SchemaError);
    expect(() =>
      parseScene({ free_points: {}, steps: [{ op: "join", args: ["a"], out: "x" }] }),
    ).toThrow(SchemaError);
    expect(() =>
      parseScene({
        free_points: { A: ["0", "0", "0"] },
        steps: [{ op: "join", args: ["A", "A"], out: "A" }],
      }),
    ).toThrow(SchemaError);
    expect(() => parseScene({ free_points: { A: ["inf", "0", "0"] } })).toThrow(SchemaError);
  });
});

describe("rational snapping", () => {
  it("keeps denominators bounded and stays close", () => {
    for (const x of [0, 1.2345678, -7.77, 3.999999, 1 / 3]) {
      const snapped = snapToRational(x);
      const slash = snapped.indexOf("/");
      const den = slash < 0 ? 1 : Number(snapped.slice(slash + 1));
      expect(den).toBeLessThanOrEqual(SNAP_DENOMINATOR);
      expect(Math.abs(scalarToNumber(snapped) - x)).toBeLessThanOrEqual(
        1 / (2 * SNAP_DENOMINATOR),
      );
    }
  });
});

describe("scene builders", () => {
  it("conic5 demo serializes to the service schema", () => {
    const json = sceneToJson(conic5Demo()) as { steps: { op: string }[] };
    expect(json.steps[0].op).toBe("conic5");
    expect(() => parseScene(json)).not.toThrow();
  });
  it("pappus scene has 12 steps and both conclusion checks", () => {
    const scene = pappusScene([
      ["0", "0", "0"],
      ["4", "1", "0"],
      ["-1", "5", "0"],
      ["7", "-3", "0"],
      ["-4", "-2", "0"],
    ]);
    expect(scene.steps.length).toBe(12);
    expect(scene.checks.map((c) => c.kind).sort()).toEqual(["concurrent", "singular"]);
    const json = sceneToJson(scene);
    expect(sceneToJson(parseScene(json))).toEqual(json);
  });
});
