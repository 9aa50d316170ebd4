import time
from contextlib import contextmanager
from dataclasses import dataclass

import pytest

_RESULTS: list = []


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float | None
    note: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        limit = "no limit" if self.limit is None else f"limit {self.limit:g} s"
        text = f"[{verdict}] criterion {self.number}: {self.title} | tolerance exact | " \
               f"{self.seconds:.2f} s ({limit})"
        return text + (f" | {self.note}" if self.note else "")


@pytest.fixture
def criterion(capsys):
    """Context manager that times one acceptance criterion and prints its verdict line."""

    @contextmanager
    def run(number, title, limit=None):
        notes: list[str] = []
        start = time.perf_counter()
        passed = False
        try:
            yield notes
            passed = True
        finally:
            seconds = time.perf_counter() - start
            over = limit is not None and seconds > limit
            if over:
                notes.append("over the runtime limit")
            result = CriterionResult(number, title, passed and not over, seconds, limit,
                                     "; ".join(notes))
            _RESULTS.append(result)
            with capsys.disabled():
                print("\n" + result.line())
        assert not over, f"criterion {number} took {seconds:.1f} s, limit {limit} s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(_RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(r.line())
