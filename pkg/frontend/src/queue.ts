// Request sequencing: at most one message in flight, the latest pending
// gesture wins, and responses that arrive out of order are dropped by
// sequence number.

import type { BridgeResponse, Gesture } from "./types.js";

export type Sender = (gesture: Gesture, seq: number) => Promise<BridgeResponse>;
export type Applier = (response: BridgeResponse, seq: number) => void;

export class GestureQueue {
  private seq = 0;
  private lastApplied = 0;
  private inflight = false;
  private pending: (() => Gesture | null) | null = null;

  constructor(
    private readonly send: Sender,
    private readonly apply: Applier
  ) {}

  /** Queue a gesture builder; it is evaluated when its turn comes. */
  push(build: () => Gesture | null): void {
    this.pending = build;
    void this.pump();
  }

  pushGesture(g: Gesture): void {
    this.push(() => g);
  }

  get busy(): boolean {
    return this.inflight;
  }

  private async pump(): Promise<void> {
    if (this.inflight || this.pending === null) return;
    const build = this.pending;
    this.pending = null;
    const gesture = build();
    if (gesture === null) {
      void this.pump();
      return;
    }
    const seq = ++this.seq;
    this.inflight = true;
    try {
      const response = await this.send(gesture, seq);
      if (seq > this.lastApplied) {
        this.lastApplied = seq;
        this.apply(response, seq);
      }
    } finally {
      this.inflight = false;
      void this.pump();
    }
  }
}
