// Structural validation of incoming scenes.  A response that fails here is
// never painted; the previous frame stays on screen.

import type { Primitive, Scene } from "./types.js";

const KINDS = new Set(["circle", "line", "point", "ellipse", "arrowhead"]);

const REQUIRED_GEOMETRY: Record<string, string[]> = {
  circle: ["cx", "cy", "r"],
  line: ["x1", "y1", "x2", "y2"],
  point: ["x", "y"],
  ellipse: ["cx", "cy", "rx", "ry", "angle"],
  arrowhead: ["x", "y", "angle", "size"],
};

export class SchemaError extends Error {}

function fail(msg: string): never {
  throw new SchemaError(msg);
}

export function validateScene(data: unknown): Scene {
  if (typeof data !== "object" || data === null) fail("scene is not an object");
  const scene = data as { version?: unknown; primitives?: unknown };
  if (scene.version !== 1) fail(`unsupported scene version ${String(scene.version)}`);
  if (!Array.isArray(scene.primitives)) fail("primitives is not an array");
  scene.primitives.forEach((p, i) => validatePrimitive(p, i));
  return data as Scene;
}

function validatePrimitive(p: unknown, index: number): Primitive {
  if (typeof p !== "object" || p === null) fail(`primitive ${index} is not an object`);
  const prim = p as Record<string, unknown>;
  if (typeof prim.kind !== "string" || !KINDS.has(prim.kind)) {
    fail(`primitive ${index}: unknown kind ${String(prim.kind)}`);
  }
  if (
    !Array.isArray(prim.color) ||
    prim.color.length !== 3 ||
    !prim.color.every((c) => typeof c === "number" && c >= 0 && c <= 255)
  ) {
    fail(`primitive ${index}: bad color`);
  }
  if (typeof prim.width !== "number" || !(prim.width > 0)) fail(`primitive ${index}: bad width`);
  if (typeof prim.layer !== "number") fail(`primitive ${index}: bad layer`);
  if (typeof prim.label !== "string") fail(`primitive ${index}: bad label`);
  const geom = prim.geometry;
  if (typeof geom !== "object" || geom === null) fail(`primitive ${index}: missing geometry`);
  for (const key of REQUIRED_GEOMETRY[prim.kind as string]) {
    const v = (geom as Record<string, unknown>)[key];
    if (typeof v !== "number" || !Number.isFinite(v)) {
      fail(`primitive ${index}: geometry.${key} missing or not finite`);
    }
  }
  return p as Primitive;
}
