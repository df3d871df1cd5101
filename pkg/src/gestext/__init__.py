"""gestext: gesture-controlled streaming text generation.

A headless engine that turns two-finger spread/pinch gestures into
length-controlled LLM text edits, the word-bubble feedback loop driving
three display variants, a streaming gateway with a deterministic mock
provider, and a replay/metrics pipeline over recorded interaction logs.
"""

from .bubbles import BubbleTrack, new_track
from .display import DisplayModel, render
from .engine import DeviceProfile, EngineCommand, GestureSession, TouchEvent, feed
from .errors import (
    GestextError,
    LogParseError,
    NoTextError,
    OutOfRangeError,
    ProtocolError,
)
from .replay import EventLog, LogHeader, load_log, replay
from .session import EditorSession, SessionConfig
from .textmodel import (
    CursorPos,
    Document,
    LayoutCfg,
    LayoutMap,
    SentenceSpan,
    cursor_for_sentence,
    layout_monospace,
    nearest_sentence,
    segment_sentences,
)

__version__ = "0.1.0"

__all__ = [
    "BubbleTrack",
    "CursorPos",
    "DeviceProfile",
    "DisplayModel",
    "Document",
    "EditorSession",
    "EngineCommand",
    "EventLog",
    "GestextError",
    "GestureSession",
    "LayoutCfg",
    "LayoutMap",
    "LogHeader",
    "LogParseError",
    "NoTextError",
    "OutOfRangeError",
    "ProtocolError",
    "SentenceSpan",
    "SessionConfig",
    "TouchEvent",
    "cursor_for_sentence",
    "feed",
    "layout_monospace",
    "load_log",
    "nearest_sentence",
    "new_track",
    "render",
    "replay",
    "segment_sentences",
]
