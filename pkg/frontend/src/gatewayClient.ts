/** Gateway client: SSE token streams plus the synonym/rewrite helpers.
 * Works in the browser and under node 20 (both ship whatwg fetch). */

import type { StreamChunk } from "./types.js";

export interface StreamRequest {
  template: string;
  variables: Record<string, unknown>;
  requestId: number;
  maxSentences?: number;
}

export class GatewayClient {
  readonly baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  /** Stream completion chunks; abort the signal to cancel mid-stream. */
  async *stream(req: StreamRequest, signal?: AbortSignal): AsyncGenerator<StreamChunk> {
    const res = await fetch(`${this.baseUrl}/aiCompletionStream`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
      signal,
    });
    if (!res.ok || !res.body) {
      throw new Error(`stream failed (${res.status}): ${await res.text()}`);
    }
    const reader = res.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    try {
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        buffer += decoder.decode(value, { stream: true });
        let sep: number;
        while ((sep = buffer.indexOf("\n\n")) >= 0) {
          const frame = buffer.slice(0, sep);
          buffer = buffer.slice(sep + 2);
          for (const line of frame.split("\n")) {
            if (!line.startsWith("data:")) continue;
            const chunk = JSON.parse(line.slice(5)) as StreamChunk;
            yield chunk;
            if (chunk.done) return;
          }
        }
      }
    } finally {
      reader.releaseLock();
    }
  }

  async synonyms(word: string): Promise<string[] | null> {
    const res = await fetch(`${this.baseUrl}/synonyms`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ word }),
    });
    if (!res.ok) throw new Error(`synonyms failed: ${await res.text()}`);
    const data = await res.json();
    return data.noSynonym ? null : (data.synonyms as string[]);
  }

  async rewrite(sentence: string, opts: { type?: string; prompt?: string }): Promise<string> {
    const res = await fetch(`${this.baseUrl}/rewrite`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ sentence, ...opts }),
    });
    if (!res.ok) throw new Error(`rewrite failed: ${await res.text()}`);
    return (await res.json()).sentence as string;
  }

  async healthz(): Promise<{ status: string; mock: boolean }> {
    const res = await fetch(`${this.baseUrl}/healthz`);
    return await res.json();
  }
}
