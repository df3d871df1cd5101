"""Report emission: one row per (task, gesture) plus an aggregate block."""

from __future__ import annotations

import csv
import json
import statistics
from pathlib import Path
from typing import Optional

from .metrics import TaskMetrics

COLUMNS = [
    "task_id", "gesture_index", "kind", "outcome", "completion_time_s",
    "execution_time_s", "subgesture_count", "distance_px", "distance_mm",
    "confirmed_words", "overshoot",
]

# Aggregated per gesture row; completion time aggregates per task instead.
_GESTURE_NUMERIC = ["execution_time_s", "subgesture_count", "distance_px",
                    "distance_mm"]
AGGREGATE_LABEL = "__aggregate__"


def report_rows(tasks: list[TaskMetrics]) -> list[dict]:
    rows = []
    for task in tasks:
        for g in task.gestures:
            rows.append({
                "task_id": task.task_id,
                "gesture_index": g.gesture_index,
                "kind": g.kind,
                "outcome": g.outcome,
                "completion_time_s": task.completion_time_s,
                "execution_time_s": g.execution_time_s,
                "subgesture_count": g.subgesture_count,
                "distance_px": g.distance_px,
                "distance_mm": g.distance_mm,
                "confirmed_words": g.confirmed_words,
                "overshoot": g.overshoot,
            })
    return rows


def _stats(values: list[float]) -> dict[str, Optional[float]]:
    if not values:
        return {"mean": None, "sd": None, "median": None}
    return {
        "mean": statistics.fmean(values),
        "sd": statistics.stdev(values) if len(values) > 1 else 0.0,
        "median": statistics.median(values),
    }


def aggregate(tasks: list[TaskMetrics]) -> dict[str, dict[str, Optional[float]]]:
    rows = report_rows(tasks)
    out: dict[str, dict[str, Optional[float]]] = {"mean": {}, "sd": {}, "median": {}}
    for col in _GESTURE_NUMERIC:
        stats = _stats([float(r[col]) for r in rows if r[col] is not None])
        for stat, value in stats.items():
            out[stat][col] = value
    completion = [t.completion_time_s for t in tasks
                  if t.completion_time_s is not None]
    for stat, value in _stats([float(c) for c in completion]).items():
        out[stat]["completion_time_s"] = value
    return out


def emit_report(tasks: list[TaskMetrics], out_path: str | Path,
                fmt: str = "csv") -> Path:
    out_path = Path(out_path)
    rows = report_rows(tasks)
    agg = aggregate(tasks)
    if fmt == "json":
        payload = {"rows": rows, "aggregate": agg}
        out_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")
        return out_path
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(COLUMNS)
        for r in rows:
            writer.writerow([_cell(r[c]) for c in COLUMNS])
        for stat in ("mean", "sd", "median"):
            row = {c: "" for c in COLUMNS}
            row["task_id"] = AGGREGATE_LABEL
            row["kind"] = stat
            for col, value in agg[stat].items():
                row[col] = _cell(value)
            writer.writerow([row[c] for c in COLUMNS])
    return out_path


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)
