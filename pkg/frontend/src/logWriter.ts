/** Client-side event log: same JSON-lines format the replay tool consumes. */

import type { LogEvent, LogHeaderJson } from "./types.js";

function sortedJson(obj: Record<string, unknown>): string {
  const keys = Object.keys(obj).sort();
  const ordered: Record<string, unknown> = {};
  for (const k of keys) {
    if (obj[k] !== undefined) ordered[k] = obj[k];
  }
  return JSON.stringify(ordered);
}

export class LogWriter {
  private header: LogHeaderJson;
  private events: LogEvent[] = [];
  private lastT = 0;

  constructor(header: LogHeaderJson) {
    this.header = header;
  }

  /** Append one event, clamping the timestamp so it never decreases. */
  push<E extends LogEvent>(event: E): E {
    if (event.t < this.lastT) {
      event = { ...event, t: this.lastT };
    }
    this.lastT = event.t;
    this.events.push(event);
    return event;
  }

  count(): number {
    return this.events.length;
  }

  serialize(): string {
    const lines = [sortedJson(this.header as unknown as Record<string, unknown>)];
    for (const ev of this.events) {
      lines.push(sortedJson(ev as unknown as Record<string, unknown>));
    }
    return lines.join("\n") + "\n";
  }

  /** Browser download of the log as a .jsonl file. */
  download(filename = "session.log.jsonl"): void {
    const blob = new Blob([this.serialize()], { type: "application/jsonl" });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = filename;
    a.click();
    URL.revokeObjectURL(url);
  }
}
