/** Trailing debounce: the wrapped call runs once, `ms` after the last call. */
export function trailingDebounce(ms: number, fn: () => void): {
  (): void;
  cancel(): void;
  flush(): void;
} {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const debounced = () => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn();
    }, ms);
  };
  debounced.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  debounced.flush = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
      fn();
    }
  };
  return debounced;
}

/**
 * Keeps at most one request in flight: starting a new one aborts the
 * previous, and a superseded request resolves to undefined instead of
 * surfacing an abort error.
 */
export class LatestRequest {
  private controller: AbortController | null = null;
  private running = 0;

  get inFlight(): number {
    return this.running;
  }

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    this.running += 1;
    try {
      const result = await task(controller.signal);
      return controller.signal.aborted ? undefined : result;
    } catch (error) {
      if (controller.signal.aborted) return undefined;
      throw error;
    } finally {
      this.running -= 1;
      if (this.controller === controller) this.controller = null;
    }
  }
}
