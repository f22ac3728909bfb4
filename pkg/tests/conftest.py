import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

LAMBDAS = [Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(-5)]


@pytest.fixture(params=LAMBDAS, ids=lambda q: f"lam={q}")
def lam(request):
    return request.param


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance():
    """Call with (criterion, passed, detail); the line is echoed in the summary."""
    def record(name: str, passed: bool, detail: str = ""):
        _ACCEPTANCE.append((name, bool(passed), detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
