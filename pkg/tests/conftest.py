import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from carlitz_cdu.field import make_field  # noqa: E402

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def gf16():
    """GF(2^4) modulo X^4+X+1; ``g = 0b0010`` is a root of the modulus."""
    return make_field(4, 0b10011)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
