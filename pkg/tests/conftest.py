import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hermicode import build_code, field_for_q  # noqa: E402

#: Filled by test_acceptance.py: criterion number -> (passed, summary line).
CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def gf():
    return {q: field_for_q(q) for q in (2, 3, 4)}


@pytest.fixture(scope="session")
def codes(gf):
    cache = {}

    def get(q, m):
        if (q, m) not in cache:
            cache[q, m] = build_code(gf[q], m)
        return cache[q, m]

    return get


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, line = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {line}")
