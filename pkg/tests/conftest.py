"""Pytest wiring: replay acceptance verdict lines after the run."""

from __future__ import annotations

ACCEPTANCE_LOG: list[str] = []


def record_verdict(criterion: str, passed: bool, detail: str) -> bool:
    """Log one acceptance verdict; returns ``passed`` for the caller's assert."""
    line = f"[{criterion}] {'PASS' if passed else 'FAIL'} {detail}"
    ACCEPTANCE_LOG.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LOG:
        terminalreporter.write_line(line)
