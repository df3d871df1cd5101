/** End-to-end against the real core gateway: the editing flow records a
 * replayable log, and the chatbot round-trip lands the exact reply on the
 * clipboard. The recorded trace and displayed document are written to
 * fixtures/ for the core's headless-parity check. */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SessionBridge } from "../src/bridge.js";
import { ChatTranscript } from "../src/chatbot.js";
import { GatewayClient } from "../src/gatewayClient.js";
import type { TouchEventMsg, TouchKind } from "../src/types.js";
import { DEFAULT_PROFILE } from "../src/types.js";
import { UiSession } from "../src/uiSession.js";
import { startGateway, type GatewayHandle } from "./gateway.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "..", "fixtures");

// The open editing task: drop the off-topic sentence from the cooking text.
const TASK_TEXT =
  "Cooking at home can be a rewarding experience that allows you to " +
  "experiment with different ingredients and flavors. Automobiles have " +
  "become an essential part of modern life, providing convenience and " +
  "mobility. Many people find cooking to be a creative outlet that also " +
  "promotes healthier eating habits.";

const IRRELEVANT =
  "Automobiles have become an essential part of modern life, providing " +
  "convenience and mobility.";

const EXPECTED_TEXT =
  "Cooking at home can be a rewarding experience that allows you to " +
  "experiment with different ingredients and flavors. Many people find " +
  "cooking to be a creative outlet that also promotes healthier eating " +
  "habits.";

let gateway: GatewayHandle;

beforeAll(async () => {
  gateway = await startGateway(5);
});

afterAll(() => {
  gateway.stop();
});

class TestClock {
  t = 0;
  now(): number {
    this.t += 16;
    return this.t;
  }
}

function touchAt(session: UiSession, kind: TouchKind, finger: number,
                 x: number, y: number): Promise<void> {
  const ev: TouchEventMsg = { type: "touch", kind, finger, x, y, t: session.now() };
  return session.sendTouch(ev);
}

describe("gesture editor against the live core", () => {
  it("removes the irrelevant sentence and records a replayable trace", async () => {
    const session = new UiSession(
      new SessionBridge(gateway.url),
      new GatewayClient(gateway.url),
      new TestClock(),
      { taskId: "exp2-gesture-1-remove", initialText: TASK_TEXT,
        variant: "bubbles", seed: 21 },
    );
    await session.start();
    expect(session.documentText).toBe(TASK_TEXT);

    // Locate the tail of the irrelevant sentence in the rendered text runs;
    // monospace arithmetic gives the exact point to anchor on.
    const display = session.display!;
    const runs = display.elements.filter((e) => e.type === "text_run");
    const target = runs.find((r) => "text" in r && r.text.includes("mobility."));
    expect(target).toBeDefined();
    const run = target as { x: number; y: number; text: string };
    const idx = run.text.indexOf("mobility.");
    const x = run.x + (idx + 4) * 5; // mid-word, 5 px per character
    const y = run.y + 9;

    // Pinch exactly the sentence's word count, then lift and accept.
    const words = IRRELEVANT.split(" ").length;
    const pullPx = words * DEFAULT_PROFILE.mm_per_word * DEFAULT_PROFILE.px_per_mm;
    const sep = pullPx + 70;
    await touchAt(session, "down", 1, x, y);
    await touchAt(session, "down", 2, x, y + sep);
    for (let i = 1; i <= 6; i++) {
      await touchAt(session, "move", 2, x, y + sep - (pullPx * i) / 6);
    }
    await touchAt(session, "up", 1, x, y);
    await touchAt(session, "up", 2, x, y + sep - pullPx);
    expect(session.confirmWidgetVisible).toBe(true);

    await session.confirm();
    expect(session.documentText).toBe(EXPECTED_TEXT);
    expect(session.revision).toBe(1);

    mkdirSync(FIXTURES, { recursive: true });
    writeFileSync(join(FIXTURES, "ui-remove-irrelevant.log.jsonl"),
                  session.log.serialize());
    writeFileSync(
      join(FIXTURES, "ui-remove-irrelevant.expected.json"),
      JSON.stringify({ documentText: session.documentText,
                       revision: session.revision }, null, 2) + "\n",
    );
  });

  it("streams generated words into bubbles during a spread", async () => {
    const session = new UiSession(
      new SessionBridge(gateway.url),
      new GatewayClient(gateway.url),
      new TestClock(),
      { initialText: "A tiny seed text.", variant: "bubbles", seed: 3 },
    );
    await session.start();
    await touchAt(session, "down", 1, 10, 5);
    await touchAt(session, "down", 2, 10, 60);
    const pull = 4 * DEFAULT_PROFILE.mm_per_word * DEFAULT_PROFILE.px_per_mm;
    await touchAt(session, "move", 2, 10, 60 + pull);
    await session.settle(); // generation stream drains through the bridge
    const rects = session.display!.elements.filter(
      (e) => e.type === "rounded_rect");
    expect(rects.length).toBeGreaterThan(0);
    const withText = rects.filter((r) => "text" in r && r.text);
    expect(withText.length).toBeGreaterThan(0);
    await touchAt(session, "up", 1, 10, 5);
    await touchAt(session, "up", 2, 10, 60 + pull);
    await session.reject();
    expect(session.documentText).toBe("A tiny seed text.");
  });
});

describe("chatbot baseline round-trip", () => {
  it("streams a reply and Copy places the exact text on the clipboard", async () => {
    const transcript = new ChatTranscript(new GatewayClient(gateway.url));
    const reply = await transcript.send(
      "Remove the irrelevant sentence from this text: " + TASK_TEXT);
    expect(reply.content.length).toBeGreaterThan(0);
    expect(reply.streaming).toBe(false);

    const clipboard = {
      value: "",
      async writeText(text: string) { this.value = text; },
    };
    const copied = await transcript.copy(1, clipboard);
    expect(clipboard.value).toBe(reply.content);
    expect(copied).toBe(reply.content);
    // transcript alternates user/assistant and keeps client-side history
    expect(transcript.messages.map((m) => m.role)).toEqual(["user", "assistant"]);
    await transcript.send("Thanks, now extend it by one sentence.");
    expect(transcript.messages).toHaveLength(4);
  });
});
