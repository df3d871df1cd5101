"""Append-only event logs and deterministic headless replay.

A log is JSON lines: one header object, then timestamped events (touch,
token chunk, confirm, reject, task marker) with non-decreasing ``t``.
Replaying a log reproduces the full session bit-for-bit: same documents,
same command trace, same display snapshots, on any platform.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .engine import DeviceProfile, TouchEvent
from .errors import LogParseError
from .fixtures import initial_text as fixture_text
from .session import EditorSession, SessionConfig
from .textmodel import Document, LayoutCfg

EVENT_TYPES = ("touch", "chunk", "confirm", "reject", "task")


@dataclass(frozen=True)
class LogHeader:
    profile: DeviceProfile
    layout: LayoutCfg
    seed: int
    variant: str
    task_id: str
    initial_text: Optional[str] = None

    def text(self) -> str:
        if self.initial_text is not None:
            return self.initial_text
        return fixture_text(self.task_id)

    def to_json(self) -> dict:
        out = {
            "type": "header",
            "device_profile": self.profile.to_json(),
            "layout": {
                "char_width_px": self.layout.char_width_px,
                "line_height_px": self.layout.line_height_px,
                "page_width_px": self.layout.page_width_px,
            },
            "seed": self.seed,
            "variant": self.variant,
            "task_id": self.task_id,
        }
        if self.initial_text is not None:
            out["initial_text"] = self.initial_text
        return out

    @staticmethod
    def from_json(d: dict) -> "LogHeader":
        return LogHeader(
            profile=DeviceProfile.from_json(d["device_profile"]),
            layout=LayoutCfg(**d["layout"]),
            seed=int(d["seed"]),
            variant=d["variant"],
            task_id=d["task_id"],
            initial_text=d.get("initial_text"),
        )


@dataclass
class EventLog:
    header: LogHeader
    events: list[dict] = field(default_factory=list)

    def dump(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(self.header.to_json(), sort_keys=True) + "\n")
            for ev in self.events:
                fh.write(json.dumps(ev, sort_keys=True) + "\n")

    def dumps(self) -> str:
        lines = [json.dumps(self.header.to_json(), sort_keys=True)]
        lines.extend(json.dumps(ev, sort_keys=True) for ev in self.events)
        return "\n".join(lines) + "\n"


def load_log(path: str | Path) -> EventLog:
    with open(path, encoding="utf-8") as fh:
        return parse_log(fh)


def parse_log(lines: Iterable[str]) -> EventLog:
    header: Optional[LogHeader] = None
    events: list[dict] = []
    last_t = None
    for line_no, raw in enumerate(lines, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise LogParseError(line_no, f"invalid JSON: {exc}") from None
        if header is None:
            if obj.get("type") != "header":
                raise LogParseError(line_no, "first line must be the header")
            try:
                header = LogHeader.from_json(obj)
            except (KeyError, TypeError, ValueError) as exc:
                raise LogParseError(line_no, f"bad header: {exc}") from None
            continue
        kind = obj.get("type")
        if kind not in EVENT_TYPES:
            raise LogParseError(line_no, f"unknown event type {kind!r}")
        if "t" not in obj:
            raise LogParseError(line_no, "event missing timestamp 't'")
        t = obj["t"]
        if last_t is not None and t < last_t:
            raise LogParseError(line_no, f"timestamp decreased: {t} < {last_t}")
        last_t = t
        events.append(obj)
    if header is None:
        raise LogParseError(0, "empty log: no header line")
    return EventLog(header=header, events=events)


@dataclass
class ReplayResult:
    final_document: Document
    command_trace: list[dict]
    snapshots: list[str]  # serialized DisplayModels, one per event
    display_events: list[dict]

    def snapshot_hash(self) -> str:
        h = hashlib.sha256()
        for snap in self.snapshots:
            h.update(snap.encode("utf-8"))
            h.update(b"\n")
        return h.hexdigest()


def replay(log: EventLog, *, snapshot_dir: Optional[str | Path] = None,
           profile_override: Optional[DeviceProfile] = None) -> ReplayResult:
    """Run a log through a fresh session and capture everything observable."""
    header = log.header
    config = SessionConfig(
        layout=header.layout,
        profile=profile_override or header.profile,
        variant=header.variant,
        seed=header.seed,
    )
    session = EditorSession(Document.from_text(header.text()), config)

    snapshots: list[str] = []
    for i, ev in enumerate(log.events):
        kind = ev["type"]
        t = ev["t"]
        if kind == "touch":
            session.process_touch(TouchEvent(kind=ev["kind"], finger=ev["finger"],
                                             x=ev["x"], y=ev["y"], t=t))
        elif kind == "chunk":
            session.process_chunk(t, ev["request_id"], ev.get("delta", ""),
                                  ev.get("done", False))
        elif kind == "confirm":
            session.process_confirm(t)
        elif kind == "reject":
            session.process_reject(t)
        # task markers advance no state; they delimit metrics windows
        snap = session.display().serialize()
        snapshots.append(snap)
        if snapshot_dir is not None:
            path = Path(snapshot_dir) / f"snapshot-{i:05d}.json"
            path.write_text(snap, encoding="utf-8")

    return ReplayResult(
        final_document=session.document,
        command_trace=session.trace,
        snapshots=snapshots,
        display_events=session.events,
    )
