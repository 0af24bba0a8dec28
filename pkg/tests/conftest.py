import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Time a block, print one pass/fail line and fail if the time limit is exceeded."""

    @contextmanager
    def run(number: int, title: str, limit: float = None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = limit is None or elapsed < limit
            status = "PASS" if ok and within else "FAIL"
            bound = f" < {limit:g} s" if limit is not None else ""
            line = f"criterion {number:2d} {status}: {title} ({elapsed:.2f} s{bound})"
            print(line)
            request.config.stash[_LINES].append(line)
        assert within, f"criterion {number} took {elapsed:.2f} s, limit {limit} s"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
