import contextlib
import time

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_RESULTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_RESULTS] = {}


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion's outcome for the terminal summary."""
    results = request.config.stash[_RESULTS]

    @contextlib.contextmanager
    def run(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            results[number] = (title, False, time.perf_counter() - start)
            print(f"criterion {number:>2} FAIL  {title}")
            raise
        results[number] = (title, True, time.perf_counter() - start)
        print(f"criterion {number:>2} PASS  {title}")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok, elapsed = results[number]
        terminalreporter.write_line(
            f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s)")
