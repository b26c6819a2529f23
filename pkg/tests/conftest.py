import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from heis_deform.heis import HeisPoint, LieVector  # noqa: E402
from heis_deform.homs import HeisHom  # noqa: E402

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=8)
small_ints = st.integers(min_value=-6, max_value=6)
points = st.builds(HeisPoint, rationals, rationals, rationals)
vectors = st.builds(LieVector, rationals, rationals, rationals)
homs = st.builds(lambda a, b: HeisHom(a, b), points, points)
words = st.tuples(small_ints, small_ints, small_ints)

_ACCEPTANCE = []


@pytest.fixture
def acceptance_record():
    def record(number, title, passed, detail=""):
        _ACCEPTANCE.append((number, title, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {number}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def frac(*xs):
    return tuple(Fraction(x) for x in xs)
