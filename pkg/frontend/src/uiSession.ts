/** UI session: one editor surface bound to the embedded core.
 *
 * Every interaction flows through here in a single ordered stream: touches
 * go to the core and into the log; generation commands returned by the core
 * open a gateway stream whose chunks are timestamped, logged, and posted
 * back as events. The UI never edits document text itself; it only relays
 * events and paints whatever DisplayModel the core returns.
 */

import { SessionBridge } from "./bridge.js";
import { GatewayClient } from "./gatewayClient.js";
import { LogWriter } from "./logWriter.js";
import type {
  BridgeState,
  Clock,
  DisplayModel,
  EngineCommand,
  LogEvent,
  LogHeaderJson,
  TouchEventMsg,
} from "./types.js";
import { DEFAULT_LAYOUT, DEFAULT_PROFILE } from "./types.js";

export interface UiSessionOptions {
  taskId?: string;
  initialText?: string;
  variant?: string;
  seed?: number;
  maxSentencesPerRequest?: number;
}

export interface UiSessionEvents {
  onDisplay?(model: DisplayModel): void;
  onConfirmWidget?(visible: boolean): void;
  onDocument?(text: string, revision: number): void;
  onError?(message: string): void;
}

export class UiSession {
  readonly log: LogWriter;
  display: DisplayModel | null = null;
  documentText = "";
  revision = 0;
  confirmWidgetVisible = false;

  private bridge: SessionBridge;
  private gateway: GatewayClient;
  private clock: Clock;
  private hooks: UiSessionEvents;
  private options: UiSessionOptions;
  private pump: Promise<void> = Promise.resolve();
  private aborts = new Map<number, AbortController>();

  constructor(bridge: SessionBridge, gateway: GatewayClient, clock: Clock,
              options: UiSessionOptions = {}, hooks: UiSessionEvents = {}) {
    this.bridge = bridge;
    this.gateway = gateway;
    this.clock = clock;
    this.options = options;
    this.hooks = hooks;
    const header: LogHeaderJson = {
      type: "header",
      device_profile: DEFAULT_PROFILE,
      layout: DEFAULT_LAYOUT,
      seed: options.seed ?? 0,
      variant: options.variant ?? "bubbles",
      task_id: options.taskId ?? "custom",
    };
    if (options.initialText !== undefined) {
      header.initial_text = options.initialText;
    }
    this.log = new LogWriter(header);
  }

  async start(): Promise<void> {
    const state = await this.bridge.start({
      taskId: this.options.taskId,
      initialText: this.options.initialText,
      variant: this.options.variant ?? "bubbles",
      seed: this.options.seed ?? 0,
      profile: DEFAULT_PROFILE,
      layout: DEFAULT_LAYOUT,
    });
    this.applyState(state);
  }

  now(): number {
    return Math.round(this.clock.now());
  }

  async sendTouch(ev: TouchEventMsg): Promise<void> {
    const logged = this.log.push(ev);
    const state = await this.bridge.sendEvent(logged);
    this.applyState(state);
    this.handleCommands(state.commands);
    await this.settle();
  }

  async confirm(): Promise<void> {
    const ev = this.log.push({ type: "confirm", t: this.now() });
    const state = await this.bridge.sendEvent(ev);
    this.confirmWidgetVisible = false;
    this.hooks.onConfirmWidget?.(false);
    this.applyState(state);
    await this.settle();
  }

  async reject(): Promise<void> {
    this.cancelStreams();
    const ev = this.log.push({ type: "reject", t: this.now() });
    const state = await this.bridge.sendEvent(ev);
    this.confirmWidgetVisible = false;
    this.hooks.onConfirmWidget?.(false);
    this.applyState(state);
    await this.settle();
  }

  /** Wait until all in-flight generation pumps have drained. */
  async settle(): Promise<void> {
    let tail: Promise<void>;
    do {
      tail = this.pump;
      await tail;
    } while (tail !== this.pump);
  }

  private applyState(state: BridgeState): void {
    this.display = state.display;
    this.documentText = state.documentText;
    this.revision = state.revision ?? this.revision;
    this.hooks.onDisplay?.(state.display);
    this.hooks.onDocument?.(this.documentText, this.revision);
  }

  private handleCommands(commands: EngineCommand[]): void {
    for (const cmd of commands) {
      if (cmd.command === "show_confirm_widget") {
        this.confirmWidgetVisible = true;
        this.hooks.onConfirmWidget?.(true);
      } else if (cmd.command === "request_generation" &&
                 cmd.request_id !== undefined) {
        this.enqueuePump(cmd.request_id, cmd.context ?? "");
      }
    }
  }

  /** Streams run strictly one after another so chunk events stay ordered. */
  private enqueuePump(requestId: number, context: string): void {
    this.pump = this.pump.then(() => this.runStream(requestId, context));
  }

  private async runStream(requestId: number, context: string): Promise<void> {
    const controller = new AbortController();
    this.aborts.set(requestId, controller);
    try {
      const stream = this.gateway.stream({
        template: "extend",
        variables: { paragraph: context },
        requestId,
        maxSentences: this.options.maxSentencesPerRequest ?? 1,
      }, controller.signal);
      for await (const chunk of stream) {
        if (chunk.error) {
          this.hooks.onError?.(chunk.error);
        }
        const ev = this.log.push({
          type: "chunk",
          request_id: chunk.requestId,
          delta: chunk.delta,
          done: chunk.done,
          t: this.now(),
        } as LogEvent);
        const state = await this.bridge.sendEvent(ev);
        this.applyState(state);
        this.handleCommands(state.commands);
        if (controller.signal.aborted) break;
      }
    } catch (err) {
      if (!controller.signal.aborted) {
        this.hooks.onError?.(String(err));
      }
    } finally {
      this.aborts.delete(requestId);
    }
  }

  private cancelStreams(): void {
    for (const controller of this.aborts.values()) {
      controller.abort();
    }
    this.aborts.clear();
  }
}
