import { describe, expect, it } from "vitest";

import { FingerTracker } from "../src/touchCapture.js";

describe("FingerTracker", () => {
  it("assigns fingers 1 and 2 by order of appearance", () => {
    const tracker = new FingerTracker();
    expect(tracker.assign(101)).toBe(1);
    expect(tracker.assign(202)).toBe(2);
    expect(tracker.lookup(101)).toBe(1);
    expect(tracker.lookup(202)).toBe(2);
  });

  it("ignores a third simultaneous contact", () => {
    const tracker = new FingerTracker();
    tracker.assign(1);
    tracker.assign(2);
    expect(tracker.assign(3)).toBeNull();
    expect(tracker.lookup(3)).toBeNull();
  });

  it("frees an id on release and reuses it", () => {
    const tracker = new FingerTracker();
    tracker.assign(10);
    tracker.assign(20);
    expect(tracker.release(10)).toBe(1);
    expect(tracker.assign(30)).toBe(1);
    expect(tracker.lookup(20)).toBe(2);
  });

  it("keeps the same finger for repeated events of one contact", () => {
    const tracker = new FingerTracker();
    expect(tracker.assign(5)).toBe(1);
    expect(tracker.assign(5)).toBe(1);
  });
});
