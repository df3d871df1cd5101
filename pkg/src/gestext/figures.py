"""Figure rendering for the metrics CLI.

Kept out of the metrics module itself (which stays pure data); the CLI calls
in here when asked to render figures next to the delimited report.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .metrics import TaskMetrics

_KIND_COLORS = {"spread": "tab:blue", "pinch": "tab:red", "none": "tab:gray"}


def trace_figure(tasks: list[TaskMetrics], out_path: str | Path) -> Path:
    """Normalized finger-distance traces; the dashed line at 1.0 is the
    distance matching the confirmed word count, so anything above it was an
    overshoot."""
    out_path = Path(out_path)
    fig, ax = plt.subplots(figsize=(7, 4))
    plotted = 0
    for task in tasks:
        for g in task.gestures:
            if not g.trace:
                continue
            x = np.linspace(0.0, 1.0, len(g.trace))
            ax.plot(x, g.trace, alpha=0.6, lw=1.2,
                    color=_KIND_COLORS.get(g.kind, "tab:gray"),
                    label=f"{task.task_id}#{g.gesture_index}")
            plotted += 1
    ax.axhline(1.0, color="red", ls="--", lw=1.0)
    ax.set_xlabel("normalized time")
    ax.set_ylabel("normalized distance")
    ax.set_title("gesture distance vs. confirmed target")
    if 0 < plotted <= 12:
        ax.legend(fontsize=7, loc="lower right")
    fig.tight_layout()
    fig.savefig(out_path, dpi=140)
    plt.close(fig)
    return out_path


def times_figure(tasks: list[TaskMetrics], out_path: str | Path) -> Path:
    """Completion time per task plus per-gesture execution times."""
    out_path = Path(out_path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    names = [t.task_id for t in tasks]
    completion = [t.completion_time_s or 0.0 for t in tasks]
    ax1.bar(range(len(names)), completion, color="tab:blue")
    ax1.set_xticks(range(len(names)))
    ax1.set_xticklabels(names, rotation=30, ha="right", fontsize=7)
    ax1.set_ylabel("completion time [s]")
    ax1.set_title("task completion")

    exec_times = [g.execution_time_s for t in tasks for g in t.gestures]
    colors = [_KIND_COLORS.get(g.kind, "tab:gray")
              for t in tasks for g in t.gestures]
    ax2.bar(range(len(exec_times)), exec_times, color=colors)
    ax2.set_ylabel("gesture execution time [s]")
    ax2.set_xlabel("gesture")
    ax2.set_title("per-gesture execution")
    fig.tight_layout()
    fig.savefig(out_path, dpi=140)
    plt.close(fig)
    return out_path


def render_figures(tasks: list[TaskMetrics], out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return [
        trace_figure(tasks, out_dir / "traces.png"),
        times_figure(tasks, out_dir / "times.png"),
    ]
