"""Shared pytest wiring.

The acceptance tests register one line per criterion; the hook below
reprints them after the normal test output so every criterion's status is
visible in a plain ``pytest -v`` run without ``-s``.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
