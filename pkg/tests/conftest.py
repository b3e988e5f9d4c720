import pytest

from partialgraphs.graph import build_graph, rotation_from_coords

ACCEPTANCE_LINES: list[str] = []


def drawn_graph(coords, edges, name="g", face_tags=None):
    """Build a graph whose rotation is read off a straight-line drawing."""
    vertices = list(coords)
    rot = rotation_from_coords(vertices, edges, coords)
    return build_graph(vertices, edges, rot, coords, face_tags, name=name)


@pytest.fixture
def triangle():
    return drawn_graph({"x": (0, 0), "y": (1, 0), "z": (0, 1)},
                       [("x", "y"), ("y", "z"), ("z", "x")], name="triangle")


@pytest.fixture
def path3():
    return drawn_graph({"x": (0, 0), "y": (1, 0), "z": (2, 0)},
                       [("x", "y"), ("y", "z")], name="path")


@pytest.fixture
def figure_eight():
    coords = {"v": (0, 0), "a1": (-2, 1), "a2": (-2, -1), "b1": (2, 1), "b2": (2, -1)}
    edges = [("v", "a1"), ("a1", "a2"), ("a2", "v"), ("v", "b1"), ("b1", "b2"), ("b2", "v")]
    return drawn_graph(coords, edges, name="eight")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
