"""Shared pytest hooks: per-criterion summary for the acceptance suite."""

from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    entries: list[tuple[str, str]] = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"),
                          ("error", "FAIL")):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call" and status == "passed":
                continue
            entries.append((nodeid.split("::")[-1], label))
    if not entries:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, label in sorted(set(entries)):
        terminalreporter.write_line(f"{label}  {name}")
