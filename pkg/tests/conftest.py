import pytest

from conelab import Ideal, parse
from conelab.cli import corpus_path


def load_corpus(name):
    return parse(corpus_path(name).read_text())


@pytest.fixture(scope="session")
def lines3():
    """Three lines in 3-space with one thickened: xy = z(z - x) = 0."""
    return load_corpus("ex51.cone")


@pytest.fixture(scope="session")
def lines_family():
    return load_corpus("ex52.cone")


@pytest.fixture(scope="session")
def planar_family():
    return load_corpus("ex53.cone")


@pytest.fixture(scope="session")
def hypersurfaces():
    return load_corpus("hypersurfaces.cone")


def ideal(script, name):
    return Ideal(script.ring, script.ideals[name])


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
