import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from facemagic.grid import Dims
from facemagic.search import SearchConfig, enumerate_all

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def enumeration(m: int, n: int, pruning: str = "lemma", workers: int = 1):
    return enumerate_all(SearchConfig(Dims(m, n), pruning=pruning, worker_count=workers))


@pytest.fixture(scope="session")
def enum_report():
    return enumeration


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
