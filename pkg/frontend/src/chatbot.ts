/** Chatbot baseline: a plain transcript over the same gateway.
 *
 * The transcript lives entirely client-side; each send resends the
 * conversation so far as context. Copy hands the assistant text to the
 * clipboard unmodified.
 */

import { GatewayClient } from "./gatewayClient.js";

export interface ChatMessage {
  role: "user" | "assistant";
  content: string;
  streaming?: boolean;
}

export interface ClipboardLike {
  writeText(text: string): Promise<void>;
}

export class ChatTranscript {
  messages: ChatMessage[] = [];
  private gateway: GatewayClient;
  private nextRequestId: number;
  private onUpdate: () => void;

  constructor(gateway: GatewayClient, onUpdate: () => void = () => {},
              firstRequestId = 1_000_000) {
    this.gateway = gateway;
    this.onUpdate = onUpdate;
    this.nextRequestId = firstRequestId;
  }

  private contextPrompt(prompt: string): string {
    // Client-side memory: resend the transcript before the new prompt.
    const history = this.messages
      .map((m) => `${m.role === "user" ? "User" : "Assistant"}: ${m.content}`)
      .join("\n");
    return history ? `${history}\nUser: ${prompt}` : prompt;
  }

  async send(prompt: string): Promise<ChatMessage> {
    const context = this.contextPrompt(prompt);
    this.messages.push({ role: "user", content: prompt });
    const reply: ChatMessage = { role: "assistant", content: "", streaming: true };
    this.messages.push(reply);
    this.onUpdate();
    const stream = this.gateway.stream({
      template: "chat",
      variables: { prompt: context },
      requestId: this.nextRequestId++,
    });
    for await (const chunk of stream) {
      reply.content += chunk.delta;
      this.onUpdate();
    }
    reply.streaming = false;
    this.onUpdate();
    return reply;
  }

  async copy(index: number, clipboard: ClipboardLike): Promise<string> {
    const message = this.messages[index];
    if (!message || message.role !== "assistant") {
      throw new Error(`no assistant message at index ${index}`);
    }
    await clipboard.writeText(message.content);
    return message.content;
  }
}
