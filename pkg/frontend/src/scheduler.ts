/**
 * Debounced, single-flight recompute loop.
 *
 * During a drag, updates are coalesced for `delayMs`; at most one
 * request is ever in flight, and when one completes the newest pending
 * payload (if any) goes out immediately.  `flush()` forces the final
 * position through with no delay, so the last frame is never lost.
 */
export class RecomputeScheduler<P> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private queued: P | null = null;

  constructor(
    private readonly send: (payload: P) => Promise<void>,
    private readonly delayMs = 50,
  ) {}

  update(payload: P): void {
    this.queued = payload;
    if (this.timer === null && !this.inFlight) {
      this.timer = setTimeout(() => {
        this.timer = null;
        void this.fire();
      }, this.delayMs);
    }
  }

  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    void this.fire();
  }

  get busy(): boolean {
    return this.inFlight;
  }

  private async fire(): Promise<void> {
    if (this.inFlight || this.queued === null) return;
    const payload = this.queued;
    this.queued = null;
    this.inFlight = true;
    try {
      await this.send(payload);
    } catch {
      // the send callback owns error reporting; a rejection must not
      // leak out of the timer context or wedge the loop
    } finally {
      this.inFlight = false;
      if (this.queued !== null) void this.fire();
    }
  }

  dispose(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.queued = null;
  }
}
