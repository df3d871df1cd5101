"""Command line interface: replay logs, compute metrics, serve the gateway."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import DeviceProfile
from .metrics import DEFAULT_TRACE_STEPS, compute_metrics
from .replay import load_log, replay
from .report import emit_report


def _load_profile(path: str | None) -> DeviceProfile | None:
    if path is None:
        return None
    return DeviceProfile.from_json(json.loads(Path(path).read_text()))


def cmd_replay(args: argparse.Namespace) -> int:
    log = load_log(args.log)
    if args.snapshots:
        Path(args.snapshots).mkdir(parents=True, exist_ok=True)
    result = replay(log, snapshot_dir=args.snapshots,
                    profile_override=_load_profile(args.profile))
    print(f"events:    {len(log.events)}")
    print(f"commands:  {len(result.command_trace)}")
    print(f"revision:  {result.final_document.revision}")
    print(f"snapshot:  {result.snapshot_hash()}")
    print("--- final text ---")
    print(result.final_document.text)
    if args.trace_out:
        with open(args.trace_out, "w", encoding="utf-8") as fh:
            for cmd in result.command_trace:
                fh.write(json.dumps(cmd, sort_keys=True) + "\n")
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    profile_override = _load_profile(args.profile)
    tasks = []
    for log_path in args.logs:
        log = load_log(log_path)
        profile = profile_override or log.header.profile
        tasks.extend(compute_metrics(profile, log.events,
                                     task_id=log.header.task_id,
                                     trace_steps=args.trace_steps))
    out = emit_report(tasks, args.out, fmt=args.format)
    print(f"wrote {out}")
    if args.figures:
        from .figures import render_figures

        for path in render_figures(tasks, args.figures):
            print(f"wrote {path}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .gateway.latency import LatencyModel
    from .gateway.service import create_app

    latency = LatencyModel(enabled=not args.no_latency)
    app = create_app(mock=not args.live, seed=args.seed,
                     latency=latency if not args.live else None)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="gestext",
        description="Gesture-driven streaming text generation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay an event log headlessly")
    p_replay.add_argument("log")
    p_replay.add_argument("--snapshots", help="directory for display snapshots")
    p_replay.add_argument("--trace-out", help="write the command trace (JSON lines)")
    p_replay.add_argument("--profile", help="device profile JSON overriding the header")
    p_replay.set_defaults(func=cmd_replay)

    p_metrics = sub.add_parser("metrics", help="compute interaction metrics")
    p_metrics.add_argument("logs", nargs="+")
    p_metrics.add_argument("--out", required=True, help="report file path")
    p_metrics.add_argument("--format", choices=("csv", "json"), default="csv")
    p_metrics.add_argument("--profile", help="device profile JSON overriding headers")
    p_metrics.add_argument("--trace-steps", type=int, default=DEFAULT_TRACE_STEPS)
    p_metrics.add_argument("--figures", help="directory for rendered figures")
    p_metrics.set_defaults(func=cmd_metrics)

    p_serve = sub.add_parser("serve", help="run the generation gateway")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--live", action="store_true",
                         help="use the configured provider instead of the mock")
    p_serve.add_argument("--seed", type=int, default=0)
    p_serve.add_argument("--no-latency", action="store_true",
                         help="disable modelled latency in mock mode")
    p_serve.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
