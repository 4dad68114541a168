"""Shared fixtures: the acceptance gate and its end-of-run summary."""

from __future__ import annotations

from contextlib import contextmanager

import pytest

_acceptance: dict[int, bool] = {}


@pytest.fixture
def acceptance_gate():
    """Record and announce one acceptance criterion per `with` block."""

    @contextmanager
    def gate(number: int):
        try:
            yield
        except BaseException:
            _acceptance[number] = False
            print(f"ACCEPTANCE {number}: FAIL")
            raise
        _acceptance[number] = True
        print(f"ACCEPTANCE {number}: PASS")

    return gate


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status = "PASS" if _acceptance[number] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}: {status}")
