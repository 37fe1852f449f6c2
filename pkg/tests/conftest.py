import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report(capsys):
    """Record and echo one PASS/FAIL line for an acceptance criterion."""

    def report(number, ok, detail, elapsed, budget):
        ok = bool(ok) and elapsed < budget
        line = (f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail} "
                f"({elapsed:.2f}s / limit {budget:g}s)")
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
