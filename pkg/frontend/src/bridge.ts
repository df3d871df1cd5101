/** Engine handle: the embedded-core boundary, speaking serialized events
 * in and DisplayModels out over the gateway's session endpoints. */

import type {
  BridgeState,
  DeviceProfileJson,
  LayoutCfgJson,
  LogEvent,
} from "./types.js";

export interface SessionStartOptions {
  taskId?: string;
  initialText?: string;
  variant: string;
  seed: number;
  profile?: DeviceProfileJson;
  layout?: LayoutCfgJson;
}

export class SessionBridge {
  private baseUrl: string;
  private sessionId: string | null = null;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async start(options: SessionStartOptions): Promise<BridgeState> {
    const res = await fetch(`${this.baseUrl}/session/start`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(options),
    });
    if (!res.ok) throw new Error(`session start failed: ${await res.text()}`);
    const data = await res.json();
    this.sessionId = data.sessionId;
    return {
      commands: [],
      display: data.display,
      documentText: data.documentText,
      revision: 0,
    };
  }

  /** Forward one event to the core; returns commands and the fresh display. */
  async sendEvent(event: LogEvent): Promise<BridgeState> {
    if (!this.sessionId) throw new Error("bridge not started");
    const res = await fetch(`${this.baseUrl}/session/${this.sessionId}/event`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ event }),
    });
    if (!res.ok) throw new Error(`event rejected: ${await res.text()}`);
    return (await res.json()) as BridgeState;
  }

  async state(): Promise<BridgeState> {
    if (!this.sessionId) throw new Error("bridge not started");
    const res = await fetch(`${this.baseUrl}/session/${this.sessionId}/state`);
    if (!res.ok) throw new Error(`state failed: ${await res.text()}`);
    const data = await res.json();
    return { commands: [], ...data } as BridgeState;
  }
}
