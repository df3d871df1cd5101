"""Editor session: one document, one gesture engine, one bubble track.

Consumes the merged, timestamp-ordered event stream (touch events, token
chunks, confirm/reject) and routes engine commands into the bubble track.
This is the single-writer consumer both the replay harness and the service
bridge wrap; given the same events it produces the same documents, commands,
and display models everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from . import bubbles as bt
from .display import DisplayModel, render
from .engine import (
    DeviceProfile,
    EngineCommand,
    GestureSession,
    Phase,
    TouchEvent,
    confirm as engine_confirm,
    feed,
    reject as engine_reject,
)
from .textmodel import Document, LayoutCfg, LayoutMap, document_words, layout_monospace


@dataclass
class SessionConfig:
    layout: LayoutCfg = field(default_factory=LayoutCfg)
    profile: DeviceProfile = field(default_factory=DeviceProfile)
    variant: str = "bubbles"
    seed: int = 0


def build_extend_context(document: Document, track: bt.BubbleTrack) -> str:
    """Prompt context for a generation request: everything before the cursor
    plus whatever this gesture has already placed."""
    prefix = document.text[: track.cursor.offset]
    placed = track.placed_word_list()
    if placed:
        return prefix + " " + " ".join(placed)
    return prefix


class EditorSession:
    def __init__(self, document: Document, config: SessionConfig) -> None:
        self.config = config
        self.document = document
        self.layout: LayoutMap = layout_monospace(document, config.layout)
        self.gesture = GestureSession()
        self.track: Optional[bt.BubbleTrack] = None
        self.trace: list[dict] = []  # (t, command) log of every engine command
        self.events: list[dict] = []  # display events, for the UI/animations
        self._next_request_id = 1
        self._track_seq = 0

    # -- event entry points ---------------------------------------------------

    def process_touch(self, ev: TouchEvent) -> list[EngineCommand]:
        before_phase = self.gesture.phase
        self.gesture, commands = feed(self.gesture, ev, self.layout,
                                      self.config.profile)
        if (before_phase in (Phase.IDLE, Phase.ARMED)
                and self.gesture.phase == Phase.ACTIVE and self.track is None):
            self._open_track()
        out: list[EngineCommand] = []
        for cmd in commands:
            out.append(cmd)
            out.extend(self._route(cmd, ev.t))
        self._log(ev.t, out)
        return out

    def process_chunk(self, t: int, request_id: int, delta: str,
                      done: bool = False) -> list[EngineCommand]:
        if self.track is None:
            self.events.append({"event": "stale_chunk_dropped",
                                "request_id": request_id})
            return []
        self.track, commands, events = bt.ingest_chunk(self.track, request_id,
                                                       delta, done)
        self.events.extend(events)
        self._sync_request_counter()
        out = [self._with_context(c) for c in commands]
        self._sync_target_after_snap(events)
        self._log(t, out)
        return out

    def process_confirm(self, t: int) -> list[EngineCommand]:
        self.gesture, cmd = engine_confirm(self.gesture)
        out = [cmd]
        if self.track is not None:
            self.document, events = bt.commit(self.track, self.document)
            self.events.extend(events)
            self.layout = layout_monospace(self.document, self.config.layout)
            self.track = None
        self._log(t, out)
        return out

    def process_reject(self, t: int) -> list[EngineCommand]:
        self.gesture, cmd = engine_reject(self.gesture)
        out = [cmd]
        if self.track is not None:
            self.document, events = bt.revert(self.track, self.document)
            self.events.extend(events)
            self.track = None
        self._log(t, out)
        return out

    def display(self) -> DisplayModel:
        return render(self.track, self.document, self.layout,
                      self.config.variant)

    # -- internals ------------------------------------------------------------

    def _open_track(self) -> None:
        cursor = self.gesture.cursor
        assert cursor is not None
        words_before = sum(1 for _, end in document_words(self.document.text)
                           if end <= cursor.offset)
        self._track_seq += 1
        self.track = bt.new_track(
            cursor,
            seed=self.config.seed ^ (self._track_seq * 0x9E3779B9),
            words_before_cursor=words_before,
            first_request_id=self._next_request_id,
        )

    def _route(self, cmd: EngineCommand, t: int) -> list[EngineCommand]:
        if self.track is None:
            return []
        if cmd.command == EngineCommand.DISPLAY_UPDATE:
            target = cmd.payload.get("target_words")
            if target is None:
                return []
            self.track, commands, events = bt.set_target(self.track, target)
            self.events.extend(events)
            self._sync_request_counter()
            return [self._with_context(c) for c in commands]
        if cmd.command == EngineCommand.SNAP_TO_ONE_SENTENCE:
            self.track, commands, events = bt.snap_to_one_sentence(self.track)
            self.events.extend(events)
            self._sync_request_counter()
            self._sync_target_after_snap(events)
            return [self._with_context(c) for c in commands]
        return []

    def _with_context(self, cmd: EngineCommand) -> EngineCommand:
        """Generation requests carry their prompt context: the text before
        the cursor plus every word this gesture has placed so far."""
        if cmd.command != EngineCommand.REQUEST_GENERATION or self.track is None:
            return cmd
        context = build_extend_context(self.document, self.track)
        return EngineCommand(cmd.command, {**cmd.payload, "context": context})

    def _sync_request_counter(self) -> None:
        if self.track is not None:
            self._next_request_id = max(self._next_request_id,
                                        self.track.next_request_id)

    def _sync_target_after_snap(self, events: list[dict]) -> None:
        """After a snap completes the track holds one sentence regardless of
        finger distance; align the engine target so a resumed gesture grows
        from the real word count instead of retracting to the old one."""
        if self.track is None:
            return
        if any(e["event"] == "snap_completed" for e in events):
            self.gesture = replace(self.gesture,
                                   target_words=self.track.signed_units())

    def _log(self, t: int, commands: list[EngineCommand]) -> None:
        for cmd in commands:
            self.trace.append({"t": t, **cmd.to_json()})
