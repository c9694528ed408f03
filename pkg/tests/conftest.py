import os
import random

import pytest

SEED = int(os.environ.get("DP7_SEED", "20161007"))

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    log = request.config.stash[_ACCEPTANCE]

    def record(number, description, passed):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {description}"
        log.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
