import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { LatestRequest, trailingDebounce } from "../../src/debounce";

describe("trailingDebounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses rapid calls into one trailing call", () => {
    const calls: number[] = [];
    const debounced = trailingDebounce(250, () => calls.push(Date.now()));
    for (let i = 0; i < 10; i++) {
      debounced();
      vi.advanceTimersByTime(50);
    }
    expect(calls).toHaveLength(0);
    vi.advanceTimersByTime(250);
    expect(calls).toHaveLength(1);
  });

  it("cancel drops the pending call", () => {
    const fn = vi.fn();
    const debounced = trailingDebounce(250, fn);
    debounced();
    debounced.cancel();
    vi.advanceTimersByTime(1000);
    expect(fn).not.toHaveBeenCalled();
  });

  it("flush runs the pending call immediately, once", () => {
    const fn = vi.fn();
    const debounced = trailingDebounce(250, fn);
    debounced();
    debounced.flush();
    expect(fn).toHaveBeenCalledTimes(1);
    vi.advanceTimersByTime(1000);
    expect(fn).toHaveBeenCalledTimes(1);
  });
});

describe("LatestRequest", () => {
  it("aborts the previous request when a new one starts", async () => {
    const gate = new LatestRequest();
    const seenSignals: AbortSignal[] = [];

    const slow = gate.run(async (signal) => {
      seenSignals.push(signal);
      await new Promise((resolve) => setTimeout(resolve, 30));
      return "slow";
    });
    const fast = gate.run(async (signal) => {
      seenSignals.push(signal);
      return "fast";
    });

    expect(await fast).toBe("fast");
    expect(await slow).toBeUndefined(); // superseded
    expect(seenSignals[0].aborted).toBe(true);
    expect(seenSignals[1].aborted).toBe(false);
  });

  it("never reports more than one live request to the caller", async () => {
    const gate = new LatestRequest();
    const results = await Promise.all(
      Array.from({ length: 5 }, (_, i) =>
        gate.run(async () => {
          await new Promise((resolve) => setTimeout(resolve, 5));
          return i;
        }),
      ),
    );
    expect(results.filter((r) => r !== undefined)).toEqual([4]);
  });

  it("propagates real failures but swallows aborts", async () => {
    const gate = new LatestRequest();
    await expect(
      gate.run(async () => {
        throw new Error("boom");
      }),
    ).rejects.toThrow("boom");
  });
});
