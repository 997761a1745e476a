import pytest

from bctk import build_graph

ACCEPTANCE_LINES = []


@pytest.fixture
def triangle():
    return build_graph(3, [{0, 1}, {0, 2}, {1, 2}])


@pytest.fixture
def loop_graph():
    return build_graph(1, [{0}])


@pytest.fixture
def parallel_pair():
    return build_graph(2, [{0, 1}, {0, 1}])


@pytest.fixture
def single_edge():
    return build_graph(2, [{0, 1}])


@pytest.fixture
def path3():
    return build_graph(3, [{0, 1}, {1, 2}])


@pytest.fixture
def four_cycle():
    return build_graph(4, [{0, 1}, {1, 2}, {2, 3}, {0, 3}])


@pytest.fixture
def k4():
    # lexicographic edge order
    return build_graph(4, [{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
