from __future__ import annotations

import pytest

RESULTS = pytest.StashKey[dict]()


class AcceptanceLog:
    def __init__(self, store: dict) -> None:
        self.store = store

    def record(self, number: int, title: str, passed: bool, detail: str) -> None:
        line = f"criterion {number} {'PASS' if passed else 'FAIL'}: {title} ({detail})"
        self.store[number] = line
        print(line)


@pytest.fixture
def acceptance(request) -> AcceptanceLog:
    return AcceptanceLog(request.config.stash.setdefault(RESULTS, {}))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
