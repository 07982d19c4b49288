"""Shared pytest plumbing: the always-visible acceptance checklist.

test_acceptance.py records one line per criterion here; the terminal
summary hook prints them after the run, past any capture settings.
"""

from __future__ import annotations

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance checklist")
        for line in acceptance_lines:
            terminalreporter.line(line)
