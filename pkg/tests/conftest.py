"""Shared pytest wiring: collects acceptance pass/fail lines and prints them
in the terminal summary so they are visible in any capture mode."""

ACCEPTANCE_LINES: list[tuple[int, str]] = []


def record_acceptance(number: int, name: str, ok: bool) -> None:
    ACCEPTANCE_LINES.append(
        (number, f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}")
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.line(line)
