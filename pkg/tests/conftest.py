import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance summary lines, printed after the run whatever the verbosity
_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def _report(criterion: str, ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
