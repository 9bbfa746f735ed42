// Browser bootstrap: canvas, side panel, pointer wiring.

import { defaultCamera, pan, screenToWorld, zoomAt, type Camera, type Size } from "./camera.js";
import { BridgeClient } from "./client.js";
import { doubleClickGesture, dragGesture, hitTest, type HitTarget } from "./gestures.js";
import { GestureQueue } from "./queue.js";
import { render } from "./renderer.js";
import { SchemaError, validateScene } from "./schema.js";
import type { BridgeResponse, Report, Scene } from "./types.js";

const canvas = document.getElementById("view") as HTMLCanvasElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const reportBox = document.getElementById("report") as HTMLPreElement;
const matrixInput = document.getElementById("matrix") as HTMLInputElement;
const stepsInput = document.getElementById("steps") as HTMLInputElement;
const algoSelect = document.getElementById("algo") as HTMLSelectElement;
const convSelect = document.getElementById("conv") as HTMLSelectElement;
const shiftSelect = document.getElementById("shift") as HTMLSelectElement;
const thetaRow = document.getElementById("theta-row") as HTMLDivElement;
const thetaSlider = document.getElementById("theta") as HTMLInputElement;
const applyButton = document.getElementById("apply") as HTMLButtonElement;

const ctx = canvas.getContext("2d")!;
const size: Size = { width: canvas.width, height: canvas.height };

let camera: Camera = defaultCamera(size);
let scene: Scene | null = null;
let report: Report | null = null;
let frameHash = "";
let repaintQueued = false;

const client = new BridgeClient("");

function requestRepaint(): void {
  if (repaintQueued) return;
  repaintQueued = true;
  requestAnimationFrame(() => {
    repaintQueued = false;
    if (scene) frameHash = render(scene, camera, size, ctx);
  });
}

function showBanner(message: string | null): void {
  banner.textContent = message ?? "";
  banner.style.display = message ? "block" : "none";
}

function applyResponse(response: BridgeResponse): void {
  if (!response.ok) {
    showBanner(`${response.code}: ${response.message}`);
    return; // previous frame retained
  }
  try {
    scene = validateScene(response.scene);
  } catch (err) {
    if (err instanceof SchemaError) {
      showBanner(`bad scene from server: ${err.message}`);
      return;
    }
    throw err;
  }
  report = response.report;
  showBanner(null);
  renderReport();
  requestRepaint();
}

const queue = new GestureQueue(
  (g) => client.gesture(g),
  (response) => applyResponse(response)
);

function renderReport(): void {
  if (!report) return;
  const lines: string[] = [];
  lines.push(`mode       ${report.mode ?? "?"}`);
  lines.push(`jordan     ${report.jordan}`);
  const ev = report.eigenvalues
    .map(([re, im]) => `${(re ?? 0).toFixed(4)}${im ? (im > 0 ? "+" : "") + im.toFixed(4) + "i" : ""}`)
    .join(", ");
  lines.push(`eigen      ${ev}`);
  lines.push(`trace/det  ${report.trace} / ${report.det}`);
  lines.push(`cond       ${report.cond === null ? "inf (singular)" : report.cond}`);
  if (report.theta_oracle !== null) {
    lines.push(`theta      ${report.theta_oracle} (formula: ${report.theta_formula})`);
  }
  const flags = Object.entries(report.predicates)
    .filter(([, v]) => v)
    .map(([k]) => k)
    .join(", ");
  lines.push(`flags      ${flags || "none"}`);
  reportBox.textContent = lines.join("\n");
  const isTheta = report.mode === "theta_line";
  thetaRow.style.display = isTheta ? "flex" : "none";
  if (isTheta && typeof report.theta_handle === "number") {
    thetaSlider.value = String(report.theta_handle);
  }
}

// --- pointer handling ----------------------------------------------------

interface DragState {
  target: HitTarget;
  lastX: number; // world coordinates of the last point already sent
  lastY: number;
  panning: boolean;
  sx: number; // screen coords for panning
  sy: number;
}

let drag: DragState | null = null;

function rimBand(): number {
  return 10 / camera.scale; // ten pixels in world units
}

canvas.addEventListener("pointerdown", (e) => {
  canvas.setPointerCapture(e.pointerId);
  const [wx, wy] = screenToWorld(camera, size, e.offsetX, e.offsetY);
  if (e.button === 2 || e.shiftKey || !scene) {
    drag = { target: null, lastX: wx, lastY: wy, panning: true, sx: e.offsetX, sy: e.offsetY };
    return;
  }
  const target = hitTest(scene, report?.handle ?? "cycle", wx, wy, rimBand());
  drag = { target, lastX: wx, lastY: wy, panning: false, sx: e.offsetX, sy: e.offsetY };
});

canvas.addEventListener("pointermove", (e) => {
  if (!drag) return;
  if (drag.panning) {
    camera = pan(camera, e.offsetX - drag.sx, e.offsetY - drag.sy);
    drag.sx = e.offsetX;
    drag.sy = e.offsetY;
    requestRepaint();
    return;
  }
  if (!drag.target || !scene) return;
  const d = drag;
  queue.push(() => {
    if (!scene) return null;
    const [wx, wy] = screenToWorld(camera, size, e.offsetX, e.offsetY);
    const g = dragGesture(d.target, scene, report?.handle ?? "cycle", d.lastX, d.lastY, wx, wy);
    if (g) {
      d.lastX = wx;
      d.lastY = wy;
    }
    return g;
  });
});

canvas.addEventListener("pointerup", () => {
  drag = null;
});

canvas.addEventListener("dblclick", (e) => {
  if (!scene) return;
  const [wx, wy] = screenToWorld(camera, size, e.offsetX, e.offsetY);
  const g = doubleClickGesture(hitTest(scene, report?.handle ?? "cycle", wx, wy, rimBand()));
  if (g) queue.pushGesture(g);
});

canvas.addEventListener("wheel", (e) => {
  e.preventDefault();
  camera = zoomAt(camera, size, e.offsetX, e.offsetY, e.deltaY < 0 ? 1.1 : 1 / 1.1);
  requestRepaint();
});

canvas.addEventListener("contextmenu", (e) => e.preventDefault());

// --- panel -----------------------------------------------------------------

thetaSlider.addEventListener("input", () => {
  queue.pushGesture({ kind: "set_theta", theta: Number(thetaSlider.value) });
});

stepsInput.addEventListener("change", () => {
  queue.pushGesture({ kind: "set_steps", steps: Number(stepsInput.value) });
});

for (const select of [algoSelect, convSelect, shiftSelect]) {
  select.addEventListener("change", () => {
    queue.pushGesture({
      kind: "set_options",
      algo: algoSelect.value,
      conv: convSelect.value,
      shift: shiftSelect.value,
    });
  });
}

applyButton.addEventListener("click", () => {
  const parts = matrixInput.value.trim().split(/[\s,]+/).map(Number);
  if (parts.length !== 4 || parts.some((p) => !Number.isFinite(p))) {
    showBanner("matrix needs four numbers: a b c d");
    return;
  }
  queue.pushGesture({ kind: "set_matrix", entries: parts as [number, number, number, number] });
});

// --- boot --------------------------------------------------------------------

async function boot(): Promise<void> {
  try {
    await client.open();
    const first = await client.init([2, 0, 1, 1], Number(stepsInput.value) || 10);
    applyResponse(first);
  } catch (err) {
    showBanner(`cannot reach the bridge: ${String(err)}`);
  }
}

void boot();

export { frameHash }; // for debugging in the console
