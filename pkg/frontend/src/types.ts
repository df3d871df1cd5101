/** Wire types shared with the core: events, commands, display model. */

export type TouchKind = "down" | "move" | "up";

export interface TouchEventMsg {
  type: "touch";
  kind: TouchKind;
  finger: number;
  x: number;
  y: number;
  t: number;
}

export interface ChunkEventMsg {
  type: "chunk";
  request_id: number;
  delta: string;
  done?: boolean;
  t: number;
}

export interface ConfirmEventMsg {
  type: "confirm";
  t: number;
}

export interface RejectEventMsg {
  type: "reject";
  t: number;
}

export interface TaskEventMsg {
  type: "task";
  marker: "start" | "end";
  task: string;
  t: number;
}

export type LogEvent =
  | TouchEventMsg
  | ChunkEventMsg
  | ConfirmEventMsg
  | RejectEventMsg
  | TaskEventMsg;

export interface DeviceProfileJson {
  px_per_mm: number;
  mm_per_word: number;
  long_press_ms: number;
  snap_max_duration_ms: number;
  snap_min_velocity_mm_s: number;
  long_press_slop_mm: number;
}

export interface LayoutCfgJson {
  char_width_px: number;
  line_height_px: number;
  page_width_px: number;
}

export const DEFAULT_PROFILE: DeviceProfileJson = {
  px_per_mm: 6.0,
  mm_per_word: 1.75,
  long_press_ms: 500,
  snap_max_duration_ms: 400.0,
  snap_min_velocity_mm_s: 25.0,
  long_press_slop_mm: 3.0,
};

export const DEFAULT_LAYOUT: LayoutCfgJson = {
  char_width_px: 5,
  line_height_px: 18,
  page_width_px: 400,
};

export interface LogHeaderJson {
  type: "header";
  device_profile: DeviceProfileJson;
  layout: LayoutCfgJson;
  seed: number;
  variant: string;
  task_id: string;
  initial_text?: string;
}

export interface EngineCommand {
  command: string;
  request_id?: number;
  context?: string;
  target_words?: number;
  [key: string]: unknown;
}

export interface TextRunElement {
  type: "text_run";
  x: number;
  y: number;
  text: string;
}

export interface RoundedRectElement {
  type: "rounded_rect";
  x: number;
  y: number;
  w: number;
  h: number;
  color: string;
  text?: string;
  bubble?: number;
  blink_ms?: number;
  word_index?: number;
}

export interface BarElement {
  type: "bar";
  x: number;
  y: number;
  length: number;
  color: string;
}

export interface CursorElement {
  type: "cursor";
  x: number;
  y: number;
}

export type DisplayElement =
  | TextRunElement
  | RoundedRectElement
  | BarElement
  | CursorElement;

export interface DisplayModel {
  variant: string;
  elements: DisplayElement[];
}

export interface BridgeState {
  commands: EngineCommand[];
  display: DisplayModel;
  documentText: string;
  revision: number;
}

export interface StreamChunk {
  requestId: number;
  delta: string;
  done: boolean;
  error?: string;
}

/** Monotonic millisecond clock; injectable so tests control time. */
export interface Clock {
  now(): number;
}
