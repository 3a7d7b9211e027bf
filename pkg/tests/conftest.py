import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from miura_forcing import GridSize, random_coloring

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def sizes(lo=1, hi=5):
    return st.builds(GridSize, st.integers(lo, hi), st.integers(lo, hi))


@st.composite
def colorings(draw, lo=1, hi=5):
    size = draw(sizes(lo, hi))
    return random_coloring(size, draw(st.integers(0, 2**32 - 1)))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
