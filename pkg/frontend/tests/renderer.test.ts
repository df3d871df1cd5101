import { describe, expect, it } from "vitest";

import { COLORS, hitBubble, renderDisplay } from "../src/renderer.js";
import type { Surface } from "../src/renderer.js";
import type { DisplayModel } from "../src/types.js";

class FakeSurface implements Surface {
  fillStyle: string | CanvasGradient | CanvasPattern = "";
  strokeStyle: string | CanvasGradient | CanvasPattern = "";
  font = "";
  lineWidth = 0;
  calls: Array<[string, ...unknown[]]> = [];
  clearRect(...args: number[]) { this.calls.push(["clearRect", ...args]); }
  fillRect(...args: number[]) {
    this.calls.push(["fillRect", this.fillStyle, ...args]);
  }
  strokeRect(...args: number[]) { this.calls.push(["strokeRect", ...args]); }
  fillText(text: string, x: number, y: number) {
    this.calls.push(["fillText", text, x, y]);
  }
  beginPath() { this.calls.push(["beginPath"]); }
  moveTo(x: number, y: number) { this.calls.push(["moveTo", x, y]); }
  lineTo(x: number, y: number) { this.calls.push(["lineTo", x, y]); }
  stroke() { this.calls.push(["stroke"]); }
}

const OPTS = { width: 400, height: 300, lineHeight: 18, charWidth: 5 };

describe("renderDisplay", () => {
  it("paints plain-text models as text and cursor only", () => {
    const model: DisplayModel = {
      variant: "novis",
      elements: [
        { type: "text_run", x: 0, y: 0, text: "Hello there." },
        { type: "cursor", x: 60, y: 0 },
      ],
    };
    const ctx = new FakeSurface();
    renderDisplay(ctx, model, OPTS);
    const kinds = ctx.calls.map((c) => c[0]);
    expect(kinds).toContain("fillText");
    expect(kinds).toContain("stroke");
    expect(kinds.filter((k) => k === "fillRect")).toHaveLength(0);
  });

  it("paints bubbles with their role colors", () => {
    const model: DisplayModel = {
      variant: "bubbles",
      elements: [
        { type: "rounded_rect", bubble: 0, x: 10, y: 0, w: 30, h: 18,
          color: "generate_blue", blink_ms: 150 },
        { type: "rounded_rect", bubble: 1, x: 50, y: 0, w: 60, h: 18,
          color: "sentence_green", text: "done." },
      ],
    };
    const ctx = new FakeSurface();
    renderDisplay(ctx, model, OPTS);
    const rects = ctx.calls.filter((c) => c[0] === "fillRect");
    expect(rects[0][1]).toBe(COLORS.generate_blue);
    expect(rects[1][1]).toBe(COLORS.sentence_green);
    expect(ctx.calls.some((c) => c[0] === "fillText" && c[1] === "done.")).toBe(true);
  });

  it("paints a length bar", () => {
    const model: DisplayModel = {
      variant: "lines",
      elements: [{ type: "bar", x: 5, y: 0, length: 120, color: "generation_green" }],
    };
    const ctx = new FakeSurface();
    renderDisplay(ctx, model, OPTS);
    const bar = ctx.calls.find((c) => c[0] === "fillRect");
    expect(bar).toBeDefined();
    expect(bar![1]).toBe(COLORS.generation_green);
    expect(bar![4]).toBe(120); // width argument
  });
});

describe("hitBubble", () => {
  const model: DisplayModel = {
    variant: "bubbles",
    elements: [
      { type: "rounded_rect", bubble: 0, x: 0, y: 0, w: 40, h: 18,
        color: "generate_blue" }, // empty placeholder: no text
      { type: "rounded_rect", bubble: 1, x: 50, y: 0, w: 40, h: 18,
        color: "generate_blue", text: "word" },
      { type: "rounded_rect", bubble: 2, x: 100, y: 0, w: 80, h: 18,
        color: "sentence_green", text: "all done." },
    ],
  };

  it("finds word and sentence bubbles, skipping empty placeholders", () => {
    expect(hitBubble(model, 20, 9)).toBeNull();
    expect(hitBubble(model, 60, 9)).toMatchObject({ target: "word", bubbleIndex: 1 });
    expect(hitBubble(model, 140, 9)).toMatchObject({ target: "sentence", bubbleIndex: 2 });
    expect(hitBubble(model, 300, 9)).toBeNull();
  });
});
