// Painting a validated scene onto a 2D context.  The renderer draws
// primitives in layer order with colors taken verbatim from the scene and
// returns the canonical hash of exactly what it painted.

import type { Camera, Size } from "./camera.js";
import { worldToScreen } from "./camera.js";
import { hashScene } from "./hash.js";
import type { Primitive, Scene } from "./types.js";

// the subset of CanvasRenderingContext2D the renderer needs; tests supply a
// recording implementation
export interface Context2DLike {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  ellipse(
    x: number,
    y: number,
    rx: number,
    ry: number,
    rotation: number,
    a0: number,
    a1: number
  ): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  stroke(): void;
  fill(): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
}

const POINT_RADIUS = 0.025; // world units, matching the SVG emitter

function rgb(color: [number, number, number]): string {
  return `rgb(${color[0]},${color[1]},${color[2]})`;
}

function drawPrimitive(ctx: Context2DLike, cam: Camera, size: Size, p: Primitive): void {
  const g = p.geometry;
  const style = rgb(p.color);
  ctx.strokeStyle = style;
  ctx.fillStyle = style;
  ctx.lineWidth = Math.max(p.width * cam.scale, 1);
  ctx.beginPath();
  if (p.kind === "circle") {
    const [sx, sy] = worldToScreen(cam, size, g.cx, g.cy);
    ctx.arc(sx, sy, g.r * cam.scale, 0, 2 * Math.PI);
    ctx.stroke();
  } else if (p.kind === "line") {
    const [x1, y1] = worldToScreen(cam, size, g.x1, g.y1);
    const [x2, y2] = worldToScreen(cam, size, g.x2, g.y2);
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  } else if (p.kind === "point") {
    const [sx, sy] = worldToScreen(cam, size, g.x, g.y);
    ctx.arc(sx, sy, Math.max(POINT_RADIUS * cam.scale, 2), 0, 2 * Math.PI);
    ctx.fill();
  } else if (p.kind === "ellipse") {
    const [sx, sy] = worldToScreen(cam, size, g.cx, g.cy);
    // screen y is flipped, so the world rotation angle negates
    ctx.ellipse(sx, sy, g.rx * cam.scale, g.ry * cam.scale, -g.angle, 0, 2 * Math.PI);
    ctx.stroke();
  } else {
    // arrowhead: triangle with its anchor on the parent cycle
    const dx = Math.cos(g.angle);
    const dy = Math.sin(g.angle);
    const nx = -dy;
    const ny = dx;
    const s = g.size;
    const tip = worldToScreen(cam, size, g.x + 0.6 * s * dx, g.y + 0.6 * s * dy);
    const b1 = worldToScreen(cam, size, g.x - 0.4 * s * dx + 0.35 * s * nx, g.y - 0.4 * s * dy + 0.35 * s * ny);
    const b2 = worldToScreen(cam, size, g.x - 0.4 * s * dx - 0.35 * s * nx, g.y - 0.4 * s * dy - 0.35 * s * ny);
    ctx.moveTo(tip[0], tip[1]);
    ctx.lineTo(b1[0], b1[1]);
    ctx.lineTo(b2[0], b2[1]);
    ctx.closePath();
    ctx.fill();
  }
}

/**
 * Paint the scene and return the hash of what was painted.
 *
 * Primitives are drawn in layer order (stable within a layer), so the scene's
 * own ordering wins when layers tie.
 */
export function render(scene: Scene, cam: Camera, size: Size, ctx: Context2DLike): string {
  ctx.clearRect(0, 0, size.width, size.height);
  const ordered = scene.primitives
    .map((p, i) => [p, i] as const)
    .sort((a, b) => a[0].layer - b[0].layer || a[1] - b[1])
    .map(([p]) => p);
  for (const p of ordered) {
    drawPrimitive(ctx, cam, size, p);
  }
  return hashScene(scene);
}
