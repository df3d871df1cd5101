/** Browser bootstrap: canvas editor, confirm widget, long-press popups,
 * chatbot baseline, log download. Configured via query parameters:
 *   ?gateway=http://host:port&variant=bubbles|lines|novis&task=exp1-extend
 */

import { SessionBridge } from "./bridge.js";
import { ChatTranscript } from "./chatbot.js";
import { GatewayClient } from "./gatewayClient.js";
import { hitBubble, renderDisplay } from "./renderer.js";
import { LongPressWatcher, attachTouchCapture } from "./touchCapture.js";
import type { DisplayModel } from "./types.js";
import { DEFAULT_LAYOUT, DEFAULT_PROFILE } from "./types.js";
import { UiSession } from "./uiSession.js";

const params = new URLSearchParams(location.search);
const gatewayUrl = params.get("gateway") ?? `${location.protocol}//${location.hostname}:8080`;
const variant = params.get("variant") ?? "bubbles";
const taskId = params.get("task") ?? "exp1-extend";

const clock = { now: () => performance.now() };
const gateway = new GatewayClient(gatewayUrl);
const bridge = new SessionBridge(gatewayUrl);

const canvas = document.getElementById("editor") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const confirmWidget = document.getElementById("confirm-widget")!;
const statusLine = document.getElementById("status")!;
const popup = document.getElementById("popup")!;
const editorView = document.getElementById("editor-view")!;
const chatView = document.getElementById("chat-view")!;

const session = new UiSession(bridge, gateway, clock, { taskId, variant }, {
  onDisplay: (model) => paint(model),
  onConfirmWidget: (visible) => {
    confirmWidget.classList.toggle("hidden", !visible);
  },
  onDocument: (_text, revision) => {
    statusLine.textContent = `revision ${revision} · ${variant} · ${taskId}`;
  },
  onError: (message) => {
    statusLine.textContent = `generation error: ${message}`;
  },
});

function paint(model: DisplayModel): void {
  renderDisplay(ctx, model, {
    width: canvas.width,
    height: canvas.height,
    lineHeight: DEFAULT_LAYOUT.line_height_px,
    charWidth: DEFAULT_LAYOUT.char_width_px,
  });
}

const longPress = new LongPressWatcher(
  DEFAULT_PROFILE.long_press_ms,
  DEFAULT_PROFILE.long_press_slop_mm * DEFAULT_PROFILE.px_per_mm,
  (x, y) => void showBubblePopup(x, y),
);

attachTouchCapture(canvas, clock, (ev) => {
  if (ev.kind === "down") longPress.down(ev.x, ev.y);
  else if (ev.kind === "move") longPress.move(ev.x, ev.y);
  else longPress.cancel();
  void session.sendTouch(ev);
});

async function showBubblePopup(x: number, y: number): Promise<void> {
  if (!session.display) return;
  const hit = hitBubble(session.display, x, y);
  if (!hit) return;
  popup.classList.remove("hidden");
  popup.style.left = `${x}px`;
  popup.style.top = `${y + 24}px`;
  popup.textContent = "…";
  if (hit.target === "word") {
    const words = await gateway.synonyms(hit.text.replace(/[.!?,]+$/, ""));
    popup.textContent = "";
    for (const word of words ?? []) {
      const chip = document.createElement("button");
      chip.className = "chip";
      chip.textContent = word;
      popup.appendChild(chip);
    }
    if (!words) popup.textContent = "no synonyms";
  } else {
    popup.textContent = "";
    for (const tone of ["neutral", "professional"]) {
      const row = document.createElement("div");
      row.className = "rewrite-row";
      row.textContent = `${tone}: …`;
      popup.appendChild(row);
      void gateway.rewrite(hit.text, { type: tone }).then((result) => {
        row.textContent = `${tone}: ${result}`;
      });
    }
    const custom = document.createElement("input");
    custom.placeholder = "Custom";
    const go = document.createElement("button");
    go.textContent = "Generate";
    go.onclick = () => {
      void gateway.rewrite(hit.text, { prompt: custom.value }).then((result) => {
        const row = document.createElement("div");
        row.className = "rewrite-row";
        row.textContent = `custom: ${result}`;
        popup.appendChild(row);
      });
    };
    popup.append(custom, go);
  }
}

document.addEventListener("pointerdown", (ev) => {
  if (!popup.contains(ev.target as Node)) popup.classList.add("hidden");
});

document.getElementById("btn-accept")!.addEventListener("click", () => {
  void session.confirm();
});
document.getElementById("btn-reject")!.addEventListener("click", () => {
  void session.reject();
});
document.getElementById("btn-download")!.addEventListener("click", () => {
  session.log.download(`${taskId}.log.jsonl`);
});

// -- chatbot baseline ---------------------------------------------------------

const transcriptEl = document.getElementById("transcript")!;
const chat = new ChatTranscript(gateway, () => renderTranscript());

function renderTranscript(): void {
  transcriptEl.textContent = "";
  chat.messages.forEach((message, i) => {
    const row = document.createElement("div");
    row.className = `msg ${message.role}`;
    row.textContent = message.content + (message.streaming ? " ▌" : "");
    if (message.role === "assistant" && !message.streaming) {
      const copy = document.createElement("button");
      copy.textContent = "Copy";
      copy.className = "copy";
      copy.onclick = () => void chat.copy(i, navigator.clipboard);
      row.appendChild(copy);
    }
    transcriptEl.appendChild(row);
  });
  transcriptEl.scrollTop = transcriptEl.scrollHeight;
}

const promptInput = document.getElementById("prompt") as HTMLInputElement;
document.getElementById("btn-send")!.addEventListener("click", () => {
  const prompt = promptInput.value.trim();
  if (!prompt) return;
  promptInput.value = "";
  void chat.send(prompt);
});

document.getElementById("btn-switch")!.addEventListener("click", () => {
  // Editor state persists across switches; only visibility changes.
  editorView.classList.toggle("hidden");
  chatView.classList.toggle("hidden");
});

void session.start();
