// The live what-if loop: debounced requests with latest-wins delivery.
//
// Slider drags fire many state changes; we wait for a quiet window before
// talking to the server, and if a newer request starts while an older one
// is in flight, the older response is dropped (and its request aborted)
// so the UI can never show a stale score.

export interface Scheduler {
  setTimeout(fn: () => void, ms: number): unknown;
  clearTimeout(handle: unknown): void;
}

export const DEBOUNCE_MS = 200;

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number = DEBOUNCE_MS,
  scheduler: Scheduler = globalThis
): (...args: A) => void {
  let handle: unknown = null;
  return (...args: A) => {
    if (handle !== null) scheduler.clearTimeout(handle);
    handle = scheduler.setTimeout(() => {
      handle = null;
      fn(...args);
    }, ms);
  };
}

export class LatestWins<T> {
  private sequence = 0;
  private controller: AbortController | null = null;

  /** Runs `work`; resolves null if a newer run superseded this one. */
  async run(work: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    const ticket = ++this.sequence;
    this.controller?.abort();
    this.controller = new AbortController();
    let result: T;
    try {
      result = await work(this.controller.signal);
    } catch (error) {
      if (ticket !== this.sequence) return null; // superseded; swallow
      throw error;
    }
    return ticket === this.sequence ? result : null;
  }
}
