import functools

import pytest

from mixedcage.construction import build_H

TABLE_Q = (7, 8, 9, 11, 13, 16, 17, 19)

# (criterion, ok, detail) lines collected by the acceptance tests
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@functools.lru_cache(maxsize=None)
def cached_H(q, rules="corrected", force=False):
    return build_H(q, force=force, rules=rules)


@pytest.fixture
def report_line():
    def record(name, ok, detail=""):
        ACCEPTANCE_LINES.append((name, bool(ok), detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
