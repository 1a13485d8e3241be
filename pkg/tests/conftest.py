import sys
from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, settings

from hcmaj.exact import Mat
from hcmaj.operators import OperatorRep

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
small_ints = st.integers(-2, 2).map(Fraction)


@st.composite
def matrices(draw, n=None, rows=None, cols=None, elements=rationals):
    if n is not None:
        rows = cols = n
    rows = draw(st.integers(1, 4)) if rows is None else rows
    cols = draw(st.integers(1, 4)) if cols is None else cols
    data = draw(st.lists(st.lists(elements, min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return Mat(tuple(tuple(r) for r in data), cols)


@st.composite
def operators(draw, n=None, elements=small_ints):
    n = draw(st.integers(1, 3)) if n is None else n
    return OperatorRep(n, draw(matrices(rows=n * n, cols=n * n, elements=elements)))


# -- acceptance summary -----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    def log(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
