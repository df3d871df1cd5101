/** DOM touch capture: browser touches to core touch events.
 *
 * Fingers get stable ids by order of appearance (first contact is 1, second
 * is 2); anything beyond two is dropped before it reaches the core, matching
 * the engine's two-finger protocol. Coordinates are in document space
 * relative to the editor surface. The id assignment is pure and lives in
 * FingerTracker so it can be tested without a DOM.
 */

import type { Clock, TouchEventMsg, TouchKind } from "./types.js";

export class FingerTracker {
  private ids = new Map<number, number>(); // platform identifier -> finger 1|2

  assign(identifier: number): number | null {
    const existing = this.ids.get(identifier);
    if (existing !== undefined) return existing;
    const used = new Set(this.ids.values());
    for (const finger of [1, 2]) {
      if (!used.has(finger)) {
        this.ids.set(identifier, finger);
        return finger;
      }
    }
    return null; // third finger: ignored
  }

  lookup(identifier: number): number | null {
    return this.ids.get(identifier) ?? null;
  }

  release(identifier: number): number | null {
    const finger = this.ids.get(identifier) ?? null;
    this.ids.delete(identifier);
    return finger;
  }
}

export type TouchSink = (ev: TouchEventMsg) => void;

export function attachTouchCapture(element: HTMLElement, clock: Clock,
                                   sink: TouchSink): () => void {
  const tracker = new FingerTracker();

  const toEvent = (kind: TouchKind, finger: number, touch: Touch): TouchEventMsg => {
    const rect = element.getBoundingClientRect();
    return {
      type: "touch",
      kind,
      finger,
      x: touch.clientX - rect.left,
      y: touch.clientY - rect.top,
      t: Math.round(clock.now()),
    };
  };

  const onStart = (ev: TouchEvent) => {
    ev.preventDefault();
    for (const touch of Array.from(ev.changedTouches)) {
      const finger = tracker.assign(touch.identifier);
      if (finger !== null) sink(toEvent("down", finger, touch));
    }
  };
  const onMove = (ev: TouchEvent) => {
    ev.preventDefault();
    for (const touch of Array.from(ev.changedTouches)) {
      const finger = tracker.lookup(touch.identifier);
      if (finger !== null) sink(toEvent("move", finger, touch));
    }
  };
  const onEnd = (ev: TouchEvent) => {
    for (const touch of Array.from(ev.changedTouches)) {
      const finger = tracker.release(touch.identifier);
      if (finger !== null) sink(toEvent("up", finger, touch));
    }
  };

  element.addEventListener("touchstart", onStart, { passive: false });
  element.addEventListener("touchmove", onMove, { passive: false });
  element.addEventListener("touchend", onEnd);
  element.addEventListener("touchcancel", onEnd);
  return () => {
    element.removeEventListener("touchstart", onStart);
    element.removeEventListener("touchmove", onMove);
    element.removeEventListener("touchend", onEnd);
    element.removeEventListener("touchcancel", onEnd);
  };
}

/** Dwell watcher for long presses on bubbles: fires once per contact after
 * the threshold if the finger stayed within the slop radius. */
export class LongPressWatcher {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private origin: { x: number; y: number } | null = null;
  private slopPx: number;
  private dwellMs: number;
  private fire: (x: number, y: number) => void;

  constructor(dwellMs: number, slopPx: number, fire: (x: number, y: number) => void) {
    this.dwellMs = dwellMs;
    this.slopPx = slopPx;
    this.fire = fire;
  }

  down(x: number, y: number): void {
    this.cancel();
    this.origin = { x, y };
    this.timer = setTimeout(() => {
      if (this.origin) this.fire(this.origin.x, this.origin.y);
      this.timer = null;
    }, this.dwellMs);
  }

  move(x: number, y: number): void {
    if (!this.origin) return;
    const dx = x - this.origin.x;
    const dy = y - this.origin.y;
    if (Math.hypot(dx, dy) >= this.slopPx) this.cancel();
  }

  cancel(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.origin = null;
  }
}
