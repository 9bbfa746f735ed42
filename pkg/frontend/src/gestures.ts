// Pointer affordances: interior drag translates, rim drag scales,
// double-click reverses orientation, endpoint markers drag along the unit
// circle in the theta-line mode.  All hit-testing reads the scene the bridge
// sent; the UI owns no geometry of its own.

import type { Gesture, Primitive, Scene } from "./types.js";

export type HitTarget =
  | { kind: "cycle-interior" }
  | { kind: "cycle-rim" }
  | { kind: "endpoint"; which: 1 | 2 }
  | null;

interface CircleGeom {
  cx: number;
  cy: number;
  r: number;
}

function inputCircle(scene: Scene, handle: string): (Primitive & { geometry: CircleGeom }) | null {
  const label = handle === "partner" ? "input:partner" : "input:cycle";
  for (const p of scene.primitives) {
    if (p.kind === "circle" && p.label.startsWith(label)) {
      return p as Primitive & { geometry: CircleGeom };
    }
  }
  return null;
}

function endpointMarkers(scene: Scene): Primitive[] {
  return scene.primitives.filter(
    (p) => p.kind === "point" && /^input:endpoint:[12]$/.test(p.label)
  );
}

/**
 * Classify a pointer-down position (world coordinates).
 *
 * rimBand is the half-width of the rim grab zone in world units; endpoint
 * markers use the same radius.
 */
export function hitTest(
  scene: Scene,
  handle: string,
  wx: number,
  wy: number,
  rimBand: number
): HitTarget {
  for (const m of endpointMarkers(scene)) {
    const d = Math.hypot(wx - m.geometry.x, wy - m.geometry.y);
    if (d <= rimBand * 1.5) {
      const which = m.label.endsWith(":1") ? 1 : 2;
      return { kind: "endpoint", which };
    }
  }
  const circle = inputCircle(scene, handle);
  if (circle) {
    const d = Math.hypot(wx - circle.geometry.cx, wy - circle.geometry.cy);
    if (Math.abs(d - circle.geometry.r) <= rimBand) return { kind: "cycle-rim" };
    if (d < circle.geometry.r - rimBand) return { kind: "cycle-interior" };
  }
  return null;
}

/** Gesture for a drag step from one world point to another. */
export function dragGesture(
  target: HitTarget,
  scene: Scene,
  handle: string,
  fromX: number,
  fromY: number,
  toX: number,
  toY: number
): Gesture | null {
  if (!target) return null;
  if (target.kind === "cycle-interior") {
    const dx = toX - fromX;
    const dy = toY - fromY;
    if (dx === 0 && dy === 0) return null;
    return { kind: "translate", dx, dy };
  }
  if (target.kind === "cycle-rim") {
    const circle = inputCircle(scene, handle);
    if (!circle) return null;
    const before = Math.hypot(fromX - circle.geometry.cx, fromY - circle.geometry.cy);
    const after = Math.hypot(toX - circle.geometry.cx, toY - circle.geometry.cy);
    if (before <= 0 || after <= 0) return null;
    const factor = after / before;
    return factor === 1 ? null : { kind: "scale", factor };
  }
  // endpoint: rotate about the origin along the unit circle
  const a0 = Math.atan2(fromY, fromX);
  const a1 = Math.atan2(toY, toX);
  let dphi = a1 - a0;
  while (dphi > Math.PI) dphi -= 2 * Math.PI;
  while (dphi < -Math.PI) dphi += 2 * Math.PI;
  if (dphi === 0) return null;
  return { kind: "move_endpoint", which: target.which, dphi };
}

export function doubleClickGesture(target: HitTarget): Gesture | null {
  if (target && (target.kind === "cycle-interior" || target.kind === "cycle-rim")) {
    return { kind: "reverse_orientation" };
  }
  return null;
}
