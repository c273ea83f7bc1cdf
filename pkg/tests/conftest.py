import time
from dataclasses import dataclass, field

import pytest

# criterion number -> outcome line, filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


@dataclass
class Criterion:
    number: int
    title: str
    limit_s: float
    tol: float
    worst: float = 0.0
    seconds: float = 0.0
    notes: list = field(default_factory=list)
    _t0: float = 0.0

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds += time.perf_counter() - self._t0
        return False

    def err(self, e: float, tol: float | None = None):
        # normalize to a fraction of the tolerance so mixed sub-checks share one scale
        t = self.tol if tol is None else tol
        self.worst = max(self.worst, e / t if t > 0 else (0.0 if e == 0 else float("inf")))

    @property
    def passed(self) -> bool:
        return self.worst <= 1.0 and self.seconds < self.limit_s

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" ({'; '.join(self.notes)})" if self.notes else ""
        return (f"criterion {self.number:2d} {tag}  {self.title}: worst err/tol {self.worst:.3g}, "
                f"{self.seconds:.2f}s of {self.limit_s:g}s{extra}")


@pytest.fixture
def criterion(request):
    made = []

    def make(number, title, limit_s, tol):
        c = Criterion(number, title, limit_s, tol)
        made.append(c)
        return c

    yield make
    for c in made:
        ACCEPTANCE[c.number] = c.line()
        print(c.line())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
