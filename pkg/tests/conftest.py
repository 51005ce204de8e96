import sys
from pathlib import Path

import pytest

# make tests/oracles.py importable regardless of rootdir settings
sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def acceptance_record():
    def record(number, line):
        _ACCEPTANCE[number] = line

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
