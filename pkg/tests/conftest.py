from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest

from hvswitch.enumeration import SearchSpace, enumerate_spirals
from hvswitch.io import parse_spiral, read_text

GOLDEN = Path(__file__).parent / "golden"

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def spirals(m: int, half: int, windows_only: bool = False):
    return tuple(enumerate_spirals(SearchSpace(m, half), windows_only=windows_only))


def golden_spiral(name: str):
    return parse_spiral(read_text(GOLDEN / f"{name}.json"))


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
