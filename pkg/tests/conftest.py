import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus  # noqa: E402
from ehrhart_delta.geometry import normalize_full_dimensional  # noqa: E402
from ehrhart_delta.report import analyze_polytope  # noqa: E402


class Entry:
    def __init__(self, name, P):
        self.name = name
        self.P = P
        self.Q, _ = normalize_full_dimensional(P)
        self.report = analyze_polytope(P)

    @property
    def profile(self):
        return self.report.profile


@pytest.fixture(scope="session")
def corpus_entries():
    return [Entry(name, P) for name, P in corpus()]


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict():
    """Print and record one PASS/FAIL line, then assert it."""

    def record(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
