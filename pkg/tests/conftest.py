import sys
from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

from secsing import mindex  # noqa: E402
from secsing.gpoly import GradedForm  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def forms(draw, max_nvars=4, max_degree=6, min_degree=1, coeffs=small_ints, density=0.4):
    nvars = draw(st.integers(1, max_nvars))
    deg = draw(st.integers(min_degree, max_degree))
    basis = mindex.enumerate_basis(nvars, deg)
    picks = draw(st.lists(st.sampled_from(basis), max_size=max(1, int(len(basis) * density) + 1)))
    cs = {m: Fraction(draw(coeffs)) for m in picks}
    return GradedForm(nvars, deg, cs)


@st.composite
def points(draw, nvars, height=4):
    x = draw(st.lists(st.integers(-height, height), min_size=nvars, max_size=nvars))
    if not any(x):
        x[draw(st.integers(0, nvars - 1))] = 1
    return tuple(x)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(str(k).split()[0]), str(k))):
        terminalreporter.write_line(RESULTS[key])
