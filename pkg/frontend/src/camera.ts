// World <-> screen mapping.  World is y-up and isotropic (circles stay
// circles); the camera only pans and zooms.

export interface Camera {
  cx: number; // world point at the canvas centre
  cy: number;
  scale: number; // pixels per world unit
}

export interface Size {
  width: number;
  height: number;
}

export function defaultCamera(size: Size, worldHalfExtent = 2.5): Camera {
  const scale = Math.min(size.width, size.height) / (2 * worldHalfExtent);
  return { cx: 0, cy: 0, scale };
}

export function worldToScreen(cam: Camera, size: Size, x: number, y: number): [number, number] {
  return [size.width / 2 + (x - cam.cx) * cam.scale, size.height / 2 - (y - cam.cy) * cam.scale];
}

export function screenToWorld(cam: Camera, size: Size, sx: number, sy: number): [number, number] {
  return [cam.cx + (sx - size.width / 2) / cam.scale, cam.cy - (sy - size.height / 2) / cam.scale];
}

export function pan(cam: Camera, dxPixels: number, dyPixels: number): Camera {
  return { cx: cam.cx - dxPixels / cam.scale, cy: cam.cy + dyPixels / cam.scale, scale: cam.scale };
}

/** Zoom by a factor keeping the world point under the cursor fixed. */
export function zoomAt(cam: Camera, size: Size, sx: number, sy: number, factor: number): Camera {
  const [wx, wy] = screenToWorld(cam, size, sx, sy);
  const scale = Math.min(Math.max(cam.scale * factor, 20), 20000);
  const eff = scale / cam.scale;
  // keep (wx, wy) under (sx, sy)
  const cx = wx - (sx - size.width / 2) / scale;
  const cy = wy + (sy - size.height / 2) / scale;
  void eff;
  return { cx, cy, scale };
}
