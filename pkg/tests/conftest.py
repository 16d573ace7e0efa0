import time
from contextlib import contextmanager

import pytest

_LINES = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run the long reproduction runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long run; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Time a block, then record and print a PASS/FAIL line for it."""

    @contextmanager
    def run(label, title, limit=None):
        start = time.perf_counter()
        why = None
        try:
            yield
        except AssertionError as exc:
            why = (str(exc).splitlines() or ["assertion failed"])[0]
            raise
        finally:
            took = time.perf_counter() - start
            if why is None and limit is not None and took >= limit:
                why = f"took {took:.2f}s, limit {limit}s"
            line = f"{'FAIL' if why else 'PASS'}  criterion {label:<7} {title} ({took:.2f}s)"
            if why:
                line += f"  -- {why}"
            _LINES.append(line)
            print(line)
        assert limit is None or took < limit, f"took {took:.2f}s, limit {limit}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
