"""Two-finger gesture state machine.

Consumes a totally ordered touch-event stream and drives a session through
Idle -> Armed -> Active -> Confirming. Finger spread maps linearly to a
signed word target (millimetres per word); the sub-word remainder is carried
in a residual so the cumulative target always equals the single-shot
conversion of the summed distance, however small the individual moves.

The engine never touches the document: edits happen only when the session
owner applies a Commit command, so rejecting a gesture is a no-op by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence

from .errors import ProtocolError
from .textmodel import CursorPos, LayoutMap, cursor_from_layout, nearest_sentence

# Guards the floor() against float noise so that a spread of exactly
# n * mm_per_word yields exactly n words for any px_per_mm.
_QUANTIZE_EPS = 1e-9


class Phase(Enum):
    IDLE = "idle"
    ARMED = "armed"
    ACTIVE = "active"
    CONFIRMING = "confirming"


class GestureKind(Enum):
    UNDETERMINED = "undetermined"
    SPREAD = "spread"
    PINCH = "pinch"


@dataclass(frozen=True)
class TouchEvent:
    kind: str  # "down" | "move" | "up"
    finger: int
    x: float
    y: float
    t: int  # ms, monotonic

    def to_json(self) -> dict:
        return {"type": "touch", "kind": self.kind, "finger": self.finger,
                "x": self.x, "y": self.y, "t": self.t}


@dataclass(frozen=True)
class DeviceProfile:
    px_per_mm: float = 6.0
    mm_per_word: float = 1.75
    long_press_ms: int = 500
    snap_max_duration_ms: float = 400.0
    snap_min_velocity_mm_s: float = 25.0
    long_press_slop_mm: float = 3.0

    def __post_init__(self) -> None:
        for name in ("px_per_mm", "mm_per_word", "long_press_ms",
                     "snap_max_duration_ms", "snap_min_velocity_mm_s",
                     "long_press_slop_mm"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")

    def to_json(self) -> dict:
        return {
            "px_per_mm": self.px_per_mm,
            "mm_per_word": self.mm_per_word,
            "long_press_ms": self.long_press_ms,
            "snap_max_duration_ms": self.snap_max_duration_ms,
            "snap_min_velocity_mm_s": self.snap_min_velocity_mm_s,
            "long_press_slop_mm": self.long_press_slop_mm,
        }

    @staticmethod
    def from_json(d: dict) -> "DeviceProfile":
        return DeviceProfile(**d)


@dataclass(frozen=True)
class EngineCommand:
    command: str
    payload: dict = field(default_factory=dict)

    SHOW_CONFIRM_WIDGET = "show_confirm_widget"
    SNAP_TO_ONE_SENTENCE = "snap_to_one_sentence"
    REQUEST_GENERATION = "request_generation"
    COMMIT = "commit"
    REVERT = "revert"
    DISPLAY_UPDATE = "display_update"

    def to_json(self) -> dict:
        return {"command": self.command, **self.payload}


@dataclass(frozen=True)
class GestureSession:
    phase: Phase = Phase.IDLE
    kind: GestureKind = GestureKind.UNDETERMINED
    anchor: int = -1
    cursor: Optional[CursorPos] = None
    base_distance: float = 0.0
    current_distance: float = 0.0
    cumulative_delta_px: float = 0.0
    target_words: int = 0
    residual: float = 0.0
    subgesture_count: int = 0
    started_at: int = 0
    last_lift_at: int = 0
    last_event_t: int = 0
    fingers: tuple[tuple[int, float, float], ...] = ()  # (finger, x, y)

    def finger_point(self, finger: int) -> Optional[tuple[float, float]]:
        for f, x, y in self.fingers:
            if f == finger:
                return (x, y)
        return None


def _with_finger(fingers, finger, x, y):
    rest = tuple(f for f in fingers if f[0] != finger)
    return tuple(sorted(rest + ((finger, x, y),)))


def _without_finger(fingers, finger):
    return tuple(f for f in fingers if f[0] != finger)


def _pair_distance(fingers) -> float:
    (_, x1, y1), (_, x2, y2) = fingers
    return math.hypot(x1 - x2, y1 - y2)


def distance_to_words(delta_px: float, profile: DeviceProfile,
                      residual: float) -> tuple[int, float]:
    """Convert a distance change into whole words plus a carried remainder.

    words = floor(delta_in_words + residual); the new residual is the
    fractional part, always in [0, 1). Because floor and fractional part
    compose exactly, any split of a movement into micro-moves emits the same
    word total as converting the summed distance in one call.
    """
    delta_words = delta_px / profile.px_per_mm / profile.mm_per_word
    total = delta_words + residual
    words = math.floor(total + _QUANTIZE_EPS)
    return words, total - words


def feed(session: GestureSession, ev: TouchEvent, layout: LayoutMap,
         profile: DeviceProfile) -> tuple[GestureSession, list[EngineCommand]]:
    """Advance the state machine by one touch event.

    Returns the next session plus any commands for the session owner.
    Raises ProtocolError for per-finger ordering violations (move or up
    without a preceding down, double down); fingers other than 1 and 2 are
    ignored entirely.
    """
    if ev.t < session.last_event_t:
        raise ProtocolError(
            f"timestamp went backwards: {ev.t} < {session.last_event_t}")
    if ev.finger not in (1, 2):
        return replace(session, last_event_t=ev.t), []

    down = session.finger_point(ev.finger) is not None
    if ev.kind == "down" and down:
        raise ProtocolError(f"finger {ev.finger} already down")
    if ev.kind in ("move", "up") and not down:
        raise ProtocolError(f"{ev.kind} for finger {ev.finger} without down")

    if session.phase == Phase.IDLE:
        return _feed_idle(session, ev, layout)
    if session.phase == Phase.ARMED:
        return _feed_armed(session, ev, layout)
    if session.phase == Phase.ACTIVE:
        return _feed_active(session, ev, profile)
    return _feed_confirming(session, ev)


def _feed_idle(session, ev, layout):
    if ev.kind != "down":
        raise ProtocolError(f"{ev.kind} while idle")
    if not layout.word_boxes:
        # Touch on empty chrome: nothing to anchor, stay idle.
        return replace(session, last_event_t=ev.t), []
    anchor = nearest_sentence(layout, (ev.x, ev.y))
    return (
        GestureSession(
            phase=Phase.ARMED,
            anchor=anchor,
            started_at=ev.t,
            last_event_t=ev.t,
            fingers=((ev.finger, ev.x, ev.y),),
        ),
        [],
    )


def _feed_armed(session, ev, layout):
    fingers = session.fingers
    if ev.kind == "down":
        fingers = _with_finger(fingers, ev.finger, ev.x, ev.y)
        dist = _pair_distance(fingers)
        return (
            replace(
                session,
                phase=Phase.ACTIVE,
                fingers=fingers,
                cursor=cursor_from_layout(layout, session.anchor),
                base_distance=dist,
                current_distance=dist,
                subgesture_count=session.subgesture_count + 1,
                last_event_t=ev.t,
            ),
            [EngineCommand(EngineCommand.DISPLAY_UPDATE,
                           {"target_words": session.target_words})],
        )
    if ev.kind == "move":
        return replace(session, fingers=_with_finger(fingers, ev.finger, ev.x, ev.y),
                       last_event_t=ev.t), []
    # up: the gesture never started
    return GestureSession(last_event_t=ev.t), []


def _feed_active(session, ev, profile):
    if ev.kind == "down":
        # Both fingers are already down; any further touch is ignored.
        return replace(session, last_event_t=ev.t), []
    if ev.kind == "move":
        fingers = _with_finger(session.fingers, ev.finger, ev.x, ev.y)
        dist = _pair_distance(fingers)
        delta = dist - session.current_distance
        words, residual = distance_to_words(delta, profile, session.residual)
        cumulative = session.cumulative_delta_px + delta
        if cumulative > 0:
            kind = GestureKind.SPREAD
        elif cumulative < 0:
            kind = GestureKind.PINCH
        else:
            kind = GestureKind.UNDETERMINED
        target = session.target_words + words
        commands = []
        if words != 0:
            commands.append(EngineCommand(EngineCommand.DISPLAY_UPDATE,
                                          {"target_words": target}))
        return (
            replace(session, fingers=fingers, current_distance=dist,
                    cumulative_delta_px=cumulative, target_words=target,
                    residual=residual, kind=kind, last_event_t=ev.t),
            commands,
        )
    # any up ends the gesture
    next_session = replace(
        session,
        phase=Phase.CONFIRMING,
        fingers=_without_finger(session.fingers, ev.finger),
        last_lift_at=ev.t,
        last_event_t=ev.t,
    )
    commands = [EngineCommand(EngineCommand.SHOW_CONFIRM_WIDGET, {})]
    if detect_sentence_snap(next_session, profile):
        commands.append(EngineCommand(EngineCommand.SNAP_TO_ONE_SENTENCE, {}))
    return next_session, commands


def _feed_confirming(session, ev):
    fingers = session.fingers
    if ev.kind == "down":
        fingers = _with_finger(fingers, ev.finger, ev.x, ev.y)
        if len(fingers) == 2:
            # Resume: cursor reappears, target and anchor are kept.
            dist = _pair_distance(fingers)
            return (
                replace(session, phase=Phase.ACTIVE, fingers=fingers,
                        base_distance=dist, current_distance=dist,
                        subgesture_count=session.subgesture_count + 1,
                        last_event_t=ev.t),
                [EngineCommand(EngineCommand.DISPLAY_UPDATE,
                               {"target_words": session.target_words,
                                "resumed": True})],
            )
        return replace(session, fingers=fingers, last_event_t=ev.t), []
    if ev.kind == "move":
        return replace(session, fingers=_with_finger(fingers, ev.finger, ev.x, ev.y),
                       last_event_t=ev.t), []
    return replace(session, fingers=_without_finger(fingers, ev.finger),
                   last_event_t=ev.t), []


def detect_sentence_snap(session: GestureSession, profile: DeviceProfile) -> bool:
    """A spread short enough and fast enough to mean "one full sentence".

    Evaluated when the gesture ends (Active -> Confirming): total duration at
    most ``snap_max_duration_ms`` and mean spread velocity at least
    ``snap_min_velocity_mm_s``. Pinches never snap.
    """
    if session.kind != GestureKind.SPREAD:
        return False
    duration_ms = session.last_lift_at - session.started_at
    if duration_ms > profile.snap_max_duration_ms:
        return False
    spread_mm = session.cumulative_delta_px / profile.px_per_mm
    if duration_ms <= 0:
        return spread_mm > 0
    velocity = spread_mm / (duration_ms / 1000.0)
    return velocity >= profile.snap_min_velocity_mm_s


@dataclass(frozen=True)
class BubbleHit:
    """Result of hit-testing a point against the rendered bubbles."""

    target: str  # "word" | "sentence"
    bubble_index: int


@dataclass(frozen=True)
class LongPress:
    target: str  # "word" | "sentence"
    bubble_index: int


def detect_long_press(history: Sequence[TouchEvent], hit: Optional[BubbleHit],
                      profile: DeviceProfile) -> Optional[LongPress]:
    """Long press on a bubble: one finger, dwell past the threshold, drift
    under the slop, and the initial touch actually on a word or sentence
    bubble. ``history`` is the event run of a single contact (down first)."""
    if hit is None or not history:
        return None
    if any(e.finger != history[0].finger for e in history):
        return None
    first = history[0]
    if first.kind != "down":
        return None
    if history[-1].t - first.t < profile.long_press_ms:
        return None
    slop_px = profile.long_press_slop_mm * profile.px_per_mm
    for e in history:
        if math.hypot(e.x - first.x, e.y - first.y) >= slop_px:
            return None
    if hit.target not in ("word", "sentence"):
        return None
    return LongPress(target=hit.target, bubble_index=hit.bubble_index)


class LongPressTracker:
    """Per-contact dedupe wrapper: fires at most once per finger contact."""

    def __init__(self, profile: DeviceProfile) -> None:
        self._profile = profile
        self._history: list[TouchEvent] = []
        self._fired = False

    def feed(self, ev: TouchEvent, hit: Optional[BubbleHit]) -> Optional[LongPress]:
        if ev.kind == "down":
            self._history = [ev]
            self._fired = False
        elif self._history:
            self._history.append(ev)
            if ev.kind == "up":
                history, self._history = self._history, []
                if not self._fired:
                    result = detect_long_press(history, hit, self._profile)
                    self._fired = result is not None
                    return result
                return None
        if self._history and not self._fired:
            result = detect_long_press(self._history, hit, self._profile)
            if result is not None:
                self._fired = True
                return result
        return None


def confirm(session: GestureSession) -> tuple[GestureSession, EngineCommand]:
    """Accept the pending change. Only legal while Confirming."""
    if session.phase != Phase.CONFIRMING:
        raise ProtocolError(f"confirm while {session.phase.value}")
    return GestureSession(last_event_t=session.last_event_t), EngineCommand(
        EngineCommand.COMMIT, {"target_words": session.target_words})


def reject(session: GestureSession) -> tuple[GestureSession, EngineCommand]:
    """Discard the pending change. Only legal while Confirming."""
    if session.phase != Phase.CONFIRMING:
        raise ProtocolError(f"reject while {session.phase.value}")
    return GestureSession(last_event_t=session.last_event_t), EngineCommand(
        EngineCommand.REVERT, {})
