import random

import pytest

from quiverlocus.sampling import DEFAULT_SEED


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            if rep.when == "setup" and outcome == "passed":
                continue
            name = nodeid.split("::")[-1]
            number = int(name.split("_")[2])
            lines.append((number, f"criterion {number:2d}  {'PASS' if outcome == 'passed' else 'FAIL'}  {name}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
