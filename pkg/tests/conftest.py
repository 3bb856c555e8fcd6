import pytest
from hypothesis import settings

from critgraph.corpus import load_fixtures
from critgraph.graph import Graph

# one CPU and long background runs make wall-clock deadlines meaningless
settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fx():
    return load_fixtures()


def diamond() -> Graph:
    # 0, 1 universal; 2, 3 nonadjacent
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def wheel(rim: int) -> Graph:
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(rim, i) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


# acceptance bookkeeping: one line per criterion in the terminal summary
ACCEPTANCE: dict[int, tuple[str, bool, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, ok, secs = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name}  ({secs:.1f}s)")
