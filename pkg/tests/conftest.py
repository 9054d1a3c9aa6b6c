import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA: dict[str, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20261018, help="seed for randomized instances")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion for the end-of-run summary."""

    def record(name: str, ok: bool, detail: str = ""):
        CRITERIA[name] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda s: (len(s.split()[0]), s)):
        ok, detail = CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
