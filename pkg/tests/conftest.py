"""Shared reporting for the acceptance tests.

Each acceptance criterion records a pass/fail verdict here; the summary
hook prints them in one block at the end of the run so the outcome of
every criterion is visible on a single line each.
"""
from __future__ import annotations

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)
