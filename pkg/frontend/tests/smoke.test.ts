// End-to-end smoke against a live bridge: open a session, perform each
// gesture class, and check that every repaint's hash equals the hash of the
// scene the bridge sent (the client adds no geometry of its own).

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { defaultCamera } from "../src/camera.js";
import { BridgeClient } from "../src/client.js";
import { hashScene } from "../src/hash.js";
import { render, type Context2DLike } from "../src/renderer.js";
import { validateScene } from "../src/schema.js";
import type { OkResponse } from "../src/types.js";

const bridgeAvailable = spawnSync("cyclesight", ["--help"], { timeout: 20000 }).status === 0;

class CountingContext implements Context2DLike {
  ops = 0;
  strokeStyle = "";
  fillStyle = "";
  lineWidth = 0;
  clearRect(): void {}
  beginPath(): void {
    this.ops++;
  }
  arc(): void {}
  ellipse(): void {}
  moveTo(): void {}
  lineTo(): void {}
  closePath(): void {}
  stroke(): void {}
  fill(): void {}
}

describe.skipIf(!bridgeAvailable)("bridge smoke", () => {
  let proc: ChildProcess;
  let client: BridgeClient;

  beforeAll(async () => {
    proc = spawn("cyclesight", ["serve", "--port", "0"], { stdio: ["ignore", "pipe", "pipe"] });
    const port = await new Promise<number>((resolve, reject) => {
      const timer = setTimeout(() => reject(new Error("bridge did not start")), 20000);
      proc.stdout!.on("data", (chunk: Buffer) => {
        const m = /LISTENING (\d+)/.exec(chunk.toString());
        if (m) {
          clearTimeout(timer);
          resolve(Number(m[1]));
        }
      });
    });
    client = new BridgeClient(`http://127.0.0.1:${port}`);
    await client.open();
  }, 30000);

  afterAll(() => {
    proc?.kill();
  });

  const size = { width: 720, height: 720 };
  const camera = defaultCamera(size);

  function repaint(response: OkResponse): string {
    const scene = validateScene(response.scene);
    const ctx = new CountingContext();
    const frameHash = render(scene, camera, size, ctx);
    expect(ctx.ops).toBeGreaterThan(0);
    return frameHash;
  }

  it("init + translate + scale + reverse + endpoint drag, hashes matching", async () => {
    const first = await client.init([2, 0, 1, 1], 8);
    expect(first.ok).toBe(true);
    let r = first as OkResponse;
    expect(repaint(r)).toBe(hashScene(r.scene));
    expect(r.scene.primitives.some((p) => p.label === "base")).toBe(true);

    for (const gesture of [
      { kind: "translate", dx: 0.2, dy: -0.1 },
      { kind: "scale", factor: 1.4 },
      { kind: "reverse_orientation" },
    ] as const) {
      const resp = await client.gesture(gesture);
      expect(resp.ok, JSON.stringify(resp)).toBe(true);
      r = resp as OkResponse;
      expect(repaint(r)).toBe(hashScene(r.scene));
    }

    // switch to the negative-determinant figure and drag an endpoint
    const neg = await client.gesture({ kind: "set_matrix", entries: [1, 0, 0, -1] });
    expect(neg.ok).toBe(true);
    r = neg as OkResponse;
    expect(r.report.mode).toBe("theta_line");
    expect(repaint(r)).toBe(hashScene(r.scene));

    const dragged = await client.gesture({ kind: "move_endpoint", which: 1, dphi: 0.35 });
    expect(dragged.ok, JSON.stringify(dragged)).toBe(true);
    r = dragged as OkResponse;
    expect(repaint(r)).toBe(hashScene(r.scene));
    // theta is untouched by an endpoint move
    expect(r.report.theta_handle).toBeCloseTo(0.0, 9);
  }, 30000);

  it("rejected gestures leave the session state unchanged", async () => {
    const before = await client.get();
    const bad = await client.gesture({ kind: "scale", factor: 2.0 }); // theta-line mode
    expect(bad.ok).toBe(false);
    if (!bad.ok) expect(bad.code).toBe("invalid_gesture_for_mode");
    const after = await client.get();
    expect(hashScene((after as OkResponse).scene)).toBe(hashScene((before as OkResponse).scene));
  }, 30000);
});
