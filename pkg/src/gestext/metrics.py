"""Interaction metrics straight off the event log.

Deliberately independent of the gesture engine: gesture boundaries,
distances, and subgesture counts are re-derived from the raw events here, so
a disagreement between this scan and a replay is a bug, not a tautology.

Trace normalization follows the confirmed outcome: the distance that maps to
the word count the user finally accepted defines 1.0, and any sample beyond
it is an overshoot. Rejected or zero-word gestures carry no overshoot flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .engine import DeviceProfile

_EPS = 1e-9
DEFAULT_TRACE_STEPS = 100


@dataclass
class GestureRecord:
    task_id: str
    gesture_index: int
    kind: str  # "spread" | "pinch" | "none"
    outcome: str  # "confirmed" | "rejected" | "open"
    execution_time_s: float
    subgesture_count: int
    distance_px: float
    distance_mm: float
    confirmed_words: Optional[int]
    trace: tuple[float, ...]
    overshoot: Optional[bool]


@dataclass
class TaskMetrics:
    task_id: str
    completion_time_s: Optional[float]
    gestures: list[GestureRecord] = field(default_factory=list)


class _GestureScan:
    """Accumulates one gesture session: from first touch to confirm/reject."""

    def __init__(self, profile: DeviceProfile) -> None:
        self.profile = profile
        self.fingers: dict[int, tuple[float, float]] = {}
        self.subgestures = 0
        self.active_since: Optional[int] = None
        self.active_ms = 0
        self.last_pair_dist: Optional[float] = None
        self.cum_px = 0.0
        self.samples: list[tuple[int, float]] = []
        self.started_at: Optional[int] = None

    def touch(self, ev: dict) -> None:
        kind, finger, t = ev["kind"], ev["finger"], ev["t"]
        if finger not in (1, 2):
            return
        if self.started_at is None and kind == "down":
            self.started_at = t
        if kind == "down":
            self.fingers[finger] = (ev["x"], ev["y"])
            if len(self.fingers) == 2:
                self.subgestures += 1
                self.active_since = t
                self.last_pair_dist = self._dist()
                self.samples.append((t, self.cum_px))
        elif kind == "move" and finger in self.fingers:
            self.fingers[finger] = (ev["x"], ev["y"])
            if len(self.fingers) == 2 and self.last_pair_dist is not None:
                d = self._dist()
                self.cum_px += d - self.last_pair_dist
                self.last_pair_dist = d
                self.samples.append((t, self.cum_px))
        elif kind == "up":
            self.fingers.pop(finger, None)
            if self.active_since is not None and len(self.fingers) < 2:
                self.active_ms += t - self.active_since
                self.active_since = None
                self.last_pair_dist = None

    def _dist(self) -> float:
        (x1, y1), (x2, y2) = self.fingers.values()
        return math.hypot(x1 - x2, y1 - y2)

    def finish(self, task_id: str, index: int, outcome: str,
               trace_steps: int) -> GestureRecord:
        mm_per_word = self.profile.mm_per_word
        px_per_mm = self.profile.px_per_mm
        distance_mm = self.cum_px / px_per_mm
        words = math.floor(distance_mm / mm_per_word + _EPS)
        kind = "spread" if self.cum_px > 0 else ("pinch" if self.cum_px < 0 else "none")

        confirmed = words if outcome == "confirmed" else None
        overshoot: Optional[bool] = None
        trace: tuple[float, ...] = ()
        if confirmed is not None and confirmed != 0 and self.samples:
            target_px = confirmed * mm_per_word * px_per_mm
            norm = [c / target_px for _, c in self.samples]
            overshoot = any(v > 1.0 + _EPS for v in norm)
            trace = _resample([t for t, _ in self.samples], norm, trace_steps)
        return GestureRecord(
            task_id=task_id,
            gesture_index=index,
            kind=kind,
            outcome=outcome,
            execution_time_s=self.active_ms / 1000.0,
            subgesture_count=self.subgestures,
            distance_px=self.cum_px,
            distance_mm=distance_mm,
            confirmed_words=confirmed,
            trace=trace,
            overshoot=overshoot,
        )


def _resample(times: list[int], values: list[float], steps: int) -> tuple[float, ...]:
    """Linear interpolation onto ``steps`` points over normalized time; the
    endpoints reproduce the first and last samples exactly."""
    if not times:
        return ()
    if times[-1] == times[0] or len(times) == 1:
        return tuple([values[-1]] * steps)
    t0, t1 = times[0], times[-1]
    norm_t = [(t - t0) / (t1 - t0) for t in times]
    grid = np.linspace(0.0, 1.0, steps)
    return tuple(float(v) for v in np.interp(grid, norm_t, values))


def compute_metrics(header_profile: DeviceProfile, events: list[dict],
                    task_id: str = "", *,
                    trace_steps: int = DEFAULT_TRACE_STEPS) -> list[TaskMetrics]:
    """Per-task metrics from raw events. Tasks are delimited by task markers;
    events outside any marker fall into an implicit task named by the log."""
    tasks: list[TaskMetrics] = []
    current: Optional[TaskMetrics] = None
    task_start: Optional[int] = None
    last_confirm_t: Optional[int] = None
    scan: Optional[_GestureScan] = None
    implicit: Optional[TaskMetrics] = None

    def ensure_task(t: int) -> TaskMetrics:
        nonlocal current, task_start, implicit
        if current is not None:
            return current
        if implicit is None:
            implicit = TaskMetrics(task_id=task_id or "log", completion_time_s=None)
            tasks.append(implicit)
            current = implicit
            task_start = t
        else:
            current = implicit
        return current

    for ev in events:
        kind = ev["type"]
        t = ev["t"]
        if kind == "task":
            if ev.get("marker") == "start":
                current = TaskMetrics(task_id=ev.get("task", task_id),
                                      completion_time_s=None)
                tasks.append(current)
                task_start = t
                last_confirm_t = None
            else:
                if current is not None and last_confirm_t is not None:
                    current.completion_time_s = (last_confirm_t - task_start) / 1000.0
                current = None
        elif kind == "touch":
            task = ensure_task(t)
            if scan is None:
                scan = _GestureScan(header_profile)
            scan.touch(ev)
        elif kind in ("confirm", "reject"):
            task = ensure_task(t)
            last_confirm_t = t if kind == "confirm" else last_confirm_t
            if scan is not None:
                outcome = "confirmed" if kind == "confirm" else "rejected"
                task.gestures.append(
                    scan.finish(task.task_id, len(task.gestures), outcome,
                                trace_steps))
                scan = None
        # chunks carry no gesture information

    # close an implicit task left open at the log's end
    if current is not None and last_confirm_t is not None and task_start is not None:
        current.completion_time_s = (last_confirm_t - task_start) / 1000.0
    if scan is not None and scan.started_at is not None:
        task = ensure_task(scan.started_at)
        task.gestures.append(
            scan.finish(task.task_id, len(task.gestures), "open", trace_steps))
    return tasks
