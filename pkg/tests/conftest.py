import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from biquasile import fixtures
from biquasile.errors import BiquasileError
from biquasile.morse import diagram_from_word

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


def plat_word(rng: random.Random, circles: int, crossings: int, marked: int) -> str:
    """Cups, a random middle section of crossings and marked vertices, caps."""
    width = 2 * circles
    body = [f"x{rng.randrange(width - 1)}{rng.choice('+-')}" for _ in range(crossings)]
    for _ in range(marked):
        body.insert(rng.randrange(len(body) + 1), f"m{rng.randrange(width - 1)}{rng.choice(['', '*'])}")
    return " ".join([f"cup{2 * j}" for j in range(circles)] + body
                    + [f"cap{2 * j}" for j in reversed(range(circles))])


@st.composite
def morse_words(draw, max_circles=2, max_crossings=4, max_marked=2):
    """Morse words whose strands can be oriented (marked vertices antiparallel)."""
    seed = draw(st.integers(0, 2**32 - 1))
    circles = draw(st.integers(1, max_circles))
    crossings = draw(st.integers(0, max_crossings))
    marked = draw(st.integers(0, max_marked))
    rng = random.Random(seed)
    for _ in range(50):
        w = plat_word(rng, circles, crossings, marked)
        try:
            diagram_from_word(w)
        except BiquasileError:
            continue
        return w
    return "cup0 cap0"


@pytest.fixture(scope="session")
def X1():
    return fixtures.algebra("X1")


@pytest.fixture(scope="session")
def X2():
    return fixtures.algebra("X2")


@pytest.fixture(scope="session")
def X3():
    return fixtures.algebra("X3")


@pytest.fixture(scope="session")
def order3():
    from biquasile.algebra import enumerate_biquasiles
    return list(enumerate_biquasiles(3))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
