// Thin HTTP client for the bridge protocol.

import type { BridgeResponse, Gesture } from "./types.js";

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class BridgeClient {
  private sessionId: string | null = null;

  constructor(
    private readonly base: string,
    private readonly fetchImpl: FetchLike = (u, i) => fetch(u, i)
  ) {}

  private async post(path: string, payload: unknown): Promise<BridgeResponse> {
    const resp = await this.fetchImpl(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return (await resp.json()) as BridgeResponse;
  }

  async open(): Promise<string> {
    const r = (await this.post("/session", {})) as unknown as { ok: boolean; id: string };
    if (!r.ok) throw new Error("could not open a session");
    this.sessionId = r.id;
    return r.id;
  }

  private path(): string {
    if (this.sessionId === null) throw new Error("session not open");
    return `/session/${this.sessionId}/message`;
  }

  init(matrix: [number, number, number, number], steps: number, options?: {
    algo?: string;
    conv?: string;
    shift?: string;
  }): Promise<BridgeResponse> {
    return this.post(this.path(), { op: "init", matrix, steps, ...options });
  }

  gesture(g: Gesture): Promise<BridgeResponse> {
    return this.post(this.path(), { op: "gesture", gesture: g });
  }

  get(): Promise<BridgeResponse> {
    return this.post(this.path(), { op: "get" });
  }
}
