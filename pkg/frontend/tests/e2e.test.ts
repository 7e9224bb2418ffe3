// End-to-end: the studio's exported Pappus scene gets the same singularity
// verdict from the CLI (`tropgeo evaluate`) and from the live HTTP service
// the studio talks to.  Requires the Python package installed (see the
// repository README); the kernel service is spawned on a scratch port.

import { execFileSync, spawn } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { pappusScene } from "../src/scenes.js";
import { sceneToJson } from "../src/schema.js";
import type { CheckResult } from "../src/schema.js";

const PYTHON = process.env.TROPGEO_PYTHON ?? "python3";
const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;

const scene = pappusScene([
  ["0", "0", "0"],
  ["4", "1", "0"],
  ["-1", "5", "0"],
  ["7", "-3", "0"],
  ["-4", "-2", "0"],
]);
const exported = JSON.stringify(sceneToJson(scene), null, 2);

function verdictOf(checks: CheckResult[]): boolean | undefined {
  return checks.find((c) => c.name === "conclusion_matrix")?.result;
}

describe("studio <-> kernel end-to-end", () => {
  let server: ReturnType<typeof spawn>;

  beforeAll(async () => {
    server = spawn(PYTHON, ["-m", "tropgeo.cli", "serve", "--port", String(PORT)], {
      stdio: "ignore",
    });
    for (let attempt = 0; attempt < 60; attempt++) {
      try {
        const res = await fetch(`${BASE}/api/health`);
        if (res.ok) return;
      } catch {
        // not up yet
      }
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
    throw new Error("scene service did not come up");
  }, 30000);

  afterAll(() => {
    server?.kill();
  });

  it("CLI and service agree on the exported scene's singularity verdict", async () => {
    const dir = mkdtempSync(join(tmpdir(), "tropgeo-"));
    const file = join(dir, "pappus-scene.json");
    writeFileSync(file, exported);

    const cliOut = JSON.parse(
      execFileSync(PYTHON, ["-m", "tropgeo.cli", "evaluate", "--scene", file], {
        encoding: "utf8",
      }),
    );
    const cliVerdict = verdictOf(cliOut.checks as CheckResult[]);

    const response = await fetch(`${BASE}/api/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: exported,
    });
    expect(response.ok).toBe(true);
    const serviceOut = await response.json();
    const serviceVerdict = verdictOf(serviceOut.checks as CheckResult[]);

    expect(typeof cliVerdict).toBe("boolean");
    expect(serviceVerdict).toBe(cliVerdict);
    expect(cliVerdict).toBe(true); // the constructive conclusion holds here

    // and the full element sets agree element-for-element
    expect(Object.keys(serviceOut.elements)).toEqual(Object.keys(cliOut.elements));
    expect(serviceOut.elements["a''"]).toEqual(cliOut.elements["a''"]);
  }, 30000);

  it("dragging a free point re-evaluates through the same wire format", async () => {
    // simulate a drag commit: move point 5 and POST the updated scene
    scene.freePoints.set("5", ["-4001/1000", "-2", "0"]);
    const response = await fetch(`${BASE}/api/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(sceneToJson(scene)),
    });
    expect(response.ok).toBe(true);
    const out = await response.json();
    expect(out.diagnostics.every((d: { status: string }) => d.status === "ok")).toBe(true);
    expect(typeof verdictOf(out.checks as CheckResult[])).toBe("boolean");
  }, 30000);
});
