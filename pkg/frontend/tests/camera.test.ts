import { describe, expect, it } from "vitest";

import { defaultCamera, pan, screenToWorld, worldToScreen, zoomAt } from "../src/camera.js";

const size = { width: 800, height: 600 };

describe("camera", () => {
  it("round-trips world and screen coordinates", () => {
    const cam = defaultCamera(size);
    for (const [x, y] of [
      [0, 0],
      [1.2, -0.7],
      [-2.0, 2.0],
    ]) {
      const [sx, sy] = worldToScreen(cam, size, x, y);
      const [wx, wy] = screenToWorld(cam, size, sx, sy);
      expect(wx).toBeCloseTo(x, 10);
      expect(wy).toBeCloseTo(y, 10);
    }
  });

  it("keeps the aspect ratio 1:1 (single scale both axes)", () => {
    const cam = defaultCamera(size);
    const [x0] = worldToScreen(cam, size, 0, 0);
    const [x1] = worldToScreen(cam, size, 1, 0);
    const [, y0] = worldToScreen(cam, size, 0, 0);
    const [, y1] = worldToScreen(cam, size, 0, 1);
    expect(x1 - x0).toBeCloseTo(y0 - y1, 10); // y grows downward on screen
  });

  it("zooms about the cursor", () => {
    const cam = defaultCamera(size);
    const anchor: [number, number] = [250, 130];
    const before = screenToWorld(cam, size, ...anchor);
    const zoomed = zoomAt(cam, size, anchor[0], anchor[1], 1.5);
    const after = screenToWorld(zoomed, size, ...anchor);
    expect(after[0]).toBeCloseTo(before[0], 8);
    expect(after[1]).toBeCloseTo(before[1], 8);
    expect(zoomed.scale).toBeCloseTo(cam.scale * 1.5, 8);
  });

  it("pans in pixels", () => {
    const cam = defaultCamera(size);
    const moved = pan(cam, 120, -60);
    expect(moved.cx).toBeCloseTo(cam.cx - 120 / cam.scale, 10);
    expect(moved.cy).toBeCloseTo(cam.cy - 60 / cam.scale, 10);
  });
});
