from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import strategies as st

from dellac.core import enumerate_pistols, enumerate_tableaux, make_pistol, make_tableau

T1_COLS = (1, 2, 3, 2, 4, 3, 5, 7, 6, 4, 1, 7, 5, 6)
F1 = (2, 6, 4, 8, 12, 6, 8, 10, 14, 12, 12, 14, 14, 14)
FIG10_COLS = (1, 2, 2, 3, 5, 4, 4, 5, 7, 3, 1, 7, 6, 6)


@lru_cache(maxsize=None)
def tableaux(n: int):
    return enumerate_tableaux(n)


@lru_cache(maxsize=None)
def pistols(n: int):
    return enumerate_pistols(n)


def tableau_st(max_n: int = 5):
    return st.integers(1, max_n).flatmap(lambda n: st.sampled_from(tableaux(n)))


def pistol_st(max_n: int = 5):
    return st.integers(1, max_n).flatmap(lambda n: st.sampled_from(pistols(n)))


@pytest.fixture
def T1():
    return make_tableau(7, T1_COLS)


@pytest.fixture
def f1():
    return make_pistol(7, F1)


@pytest.fixture
def fig10():
    return make_tableau(7, FIG10_COLS)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
