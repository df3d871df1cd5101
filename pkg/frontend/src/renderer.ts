/** Canvas renderer for DisplayModels: element-for-element, no extra state. */

import type { DisplayElement, DisplayModel } from "./types.js";

export const COLORS: Record<string, string> = {
  generate_blue: "#aecbfa",
  sentence_green: "#a8dab5",
  remove_red: "#d93025",
  remove_red_transitional: "#f28b82",
  generation_green: "#34a853",
  removal_red: "#ea4335",
};

const TEXT_COLOR = "#202124";
const CURSOR_COLOR = "#d93025";

/** Minimal 2D surface; CanvasRenderingContext2D satisfies it, tests fake it. */
export interface Surface {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  font: string;
  lineWidth: number;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  fillText(text: string, x: number, y: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
}

export interface RenderOptions {
  width: number;
  height: number;
  lineHeight: number;
  charWidth: number;
  scale?: number;
}

export function renderDisplay(ctx: Surface, model: DisplayModel,
                              opts: RenderOptions): void {
  ctx.clearRect(0, 0, opts.width, opts.height);
  ctx.font = `${Math.round(opts.lineHeight * 0.7)}px monospace`;
  // rects behind text behind cursor, whatever order the model lists them in
  for (const el of model.elements) {
    if (el.type === "rounded_rect") drawRect(ctx, el, opts);
  }
  for (const el of model.elements) {
    if (el.type === "text_run") {
      ctx.fillStyle = TEXT_COLOR;
      ctx.fillText(el.text, el.x, el.y + opts.lineHeight * 0.75);
    } else if (el.type === "bar") {
      ctx.fillStyle = COLORS[el.color] ?? el.color;
      ctx.fillRect(el.x, el.y + opts.lineHeight - 4, el.length, 4);
    }
  }
  for (const el of model.elements) {
    if (el.type === "cursor") {
      ctx.strokeStyle = CURSOR_COLOR;
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.moveTo(el.x, el.y);
      ctx.lineTo(el.x, el.y + opts.lineHeight);
      ctx.stroke();
    }
  }
}

function drawRect(ctx: Surface,
                  el: Extract<DisplayElement, { type: "rounded_rect" }>,
                  opts: RenderOptions): void {
  ctx.fillStyle = COLORS[el.color] ?? el.color;
  ctx.fillRect(el.x, el.y, el.w, el.h);
  if (el.text) {
    ctx.fillStyle = TEXT_COLOR;
    ctx.fillText(el.text, el.x + 2, el.y + opts.lineHeight * 0.75);
  }
}

/** Hit-test a point against the model's filled bubbles (word/sentence). */
export function hitBubble(model: DisplayModel, x: number, y: number):
    { target: "word" | "sentence"; bubbleIndex: number; text: string } | null {
  for (const el of model.elements) {
    if (el.type !== "rounded_rect" || el.bubble === undefined || !el.text) {
      continue;
    }
    if (x >= el.x && x <= el.x + el.w && y >= el.y && y <= el.y + el.h) {
      const target = el.color === "sentence_green" ? "sentence" : "word";
      return { target, bubbleIndex: el.bubble, text: el.text };
    }
  }
  return null;
}
