"""Shared record of acceptance-criterion verdicts.

Pytest captures stdout at the file-descriptor level, so the acceptance
tests append their one-line verdicts here and conftest.py replays them in
the terminal summary, where they survive capture and end up in any teed
log of the run.
"""

LINES = []


def announce(num, ok, desc):
    LINES.append(f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {num} failed: {desc}"
