import pytest
from hypothesis import settings
from hypothesis import strategies as st

from assoc_mersenne.bitstring import Family
from assoc_mersenne.families import enumerate_family

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

M = Family.CIRCULAR_RUN_CONSTRAINED
R = Family.RUN_CONSTRAINED


def words(min_size=0, max_size=16):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


@st.composite
def equal_length_words(draw, k=2, min_size=1, max_size=16):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.text(alphabet="01", min_size=n, max_size=n)) for _ in range(k))


@st.composite
def m_vertices(draw, min_n=3, max_n=14):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(enumerate_family(M, n).members))


@pytest.fixture
def M_family():
    return M


@pytest.fixture
def R_family():
    return R


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
