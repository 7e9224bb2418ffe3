// Thin client for the scene-evaluation service.

import { EvaluatedScene, Scene, sceneToJson } from "./schema.js";

export async function evaluateScene(baseUrl: string, scene: Scene): Promise<EvaluatedScene> {
  const response = await fetch(`${baseUrl}/api/evaluate`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(sceneToJson(scene)),
  });
  if (!response.ok) {
    const body = await response.text();
    throw new Error(`evaluate failed (${response.status}): ${body}`);
  }
  return (await response.json()) as EvaluatedScene;
}

export async function healthy(baseUrl: string): Promise<boolean> {
  try {
    const response = await fetch(`${baseUrl}/api/health`);
    return response.ok;
  } catch {
    return false;
  }
}
