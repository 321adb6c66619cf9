import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def record_criterion():
    def _record(result):
        _LINES[result.number] = result.line()

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
