// Wire types for the bridge protocol (Scene JSON v1 plus reports).
// The UI never derives geometry itself; these are read-only views of what
// the server sends.

export type PrimitiveKind = "circle" | "line" | "point" | "ellipse" | "arrowhead";

export interface Primitive {
  kind: PrimitiveKind;
  geometry: Record<string, number>;
  color: [number, number, number];
  width: number;
  layer: number;
  label: string;
}

export interface Scene {
  version: 1;
  primitives: Primitive[];
}

export interface Report {
  jordan: string;
  trace: number | null;
  det: number | null;
  cond: number | null;
  eigenvalues: [number | null, number | null][];
  predicates: Record<string, boolean>;
  theta_oracle: number | null;
  theta_formula: number | null;
  mode?: string;
  handle?: string;
  steps?: number;
  theta_handle?: number;
  endpoint_angles?: number[];
  options?: { algo: string; conv: string; shift: string };
  trajectory?: Record<string, unknown>;
}

export interface OkResponse {
  ok: true;
  scene: Scene;
  report: Report;
}

export interface ErrResponse {
  ok: false;
  code: string;
  message: string;
}

export type BridgeResponse = OkResponse | ErrResponse;

export type Gesture =
  | { kind: "translate"; dx: number; dy: number }
  | { kind: "scale"; factor: number }
  | { kind: "reverse_orientation" }
  | { kind: "move_endpoint"; which: 1 | 2; dphi: number }
  | { kind: "set_theta"; theta: number }
  | { kind: "set_steps"; steps: number }
  | { kind: "set_matrix"; entries: [number, number, number, number] }
  | { kind: "set_options"; algo?: string; conv?: string; shift?: string };
