import { describe, expect, it } from "vitest";

import { LogWriter } from "../src/logWriter.js";
import { DEFAULT_LAYOUT, DEFAULT_PROFILE } from "../src/types.js";
import type { LogHeaderJson } from "../src/types.js";

function header(): LogHeaderJson {
  return {
    type: "header",
    device_profile: DEFAULT_PROFILE,
    layout: DEFAULT_LAYOUT,
    seed: 7,
    variant: "bubbles",
    task_id: "custom",
    initial_text: "One two.",
  };
}

describe("LogWriter", () => {
  it("serializes header first, then events, one JSON object per line", () => {
    const log = new LogWriter(header());
    log.push({ type: "touch", kind: "down", finger: 1, x: 1, y: 2, t: 10 });
    log.push({ type: "confirm", t: 20 });
    const lines = log.serialize().trimEnd().split("\n");
    expect(lines).toHaveLength(3);
    const head = JSON.parse(lines[0]);
    expect(head.type).toBe("header");
    expect(head.device_profile.mm_per_word).toBeCloseTo(1.75);
    expect(head.initial_text).toBe("One two.");
    expect(JSON.parse(lines[1])).toMatchObject({ type: "touch", finger: 1 });
    expect(JSON.parse(lines[2])).toMatchObject({ type: "confirm", t: 20 });
  });

  it("clamps timestamps so they never decrease", () => {
    const log = new LogWriter(header());
    log.push({ type: "touch", kind: "down", finger: 1, x: 0, y: 0, t: 100 });
    const fixed = log.push({ type: "touch", kind: "up", finger: 1, x: 0, y: 0, t: 50 });
    expect(fixed.t).toBe(100);
  });

  it("emits keys in sorted order for byte-stable logs", () => {
    const log = new LogWriter(header());
    log.push({ type: "touch", kind: "down", finger: 2, x: 3, y: 4, t: 1 });
    const line = log.serialize().trimEnd().split("\n")[1];
    expect(line).toBe('{"finger":2,"kind":"down","t":1,"type":"touch","x":3,"y":4}');
  });
});
