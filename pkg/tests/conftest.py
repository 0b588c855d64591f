import pytest

from coverlab import add_whiskers, graph


@pytest.fixture
def pendant_triangle_square():
    """Seven-vertex graph: pendant edge, two stacked squares with a diagonal.

    Vertex decomposable; its deterministic shedding order is (x2, x4, x6) and
    the derived bipartite subgraph is the 7-edge caterpillar used as a golden.
    """
    return graph(
        ["x1", "x2", "x3", "x4", "x5", "x6", "x7"],
        [
            ("x1", "x2"),
            ("x2", "x3"),
            ("x2", "x4"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("x4", "x7"),
            ("x5", "x6"),
            ("x6", "x7"),
        ],
    )


@pytest.fixture
def diamond():
    return graph(
        ["x1", "x2", "y1", "y2"],
        [("x1", "x2"), ("x1", "y1"), ("x2", "y1"), ("x1", "y2"), ("x2", "y2")],
    )


@pytest.fixture
def diamond_tail():
    """Triangle glued to a diamond plus a path of length two hanging off."""
    return graph(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        [
            ("x1", "x2"),
            ("x1", "x3"),
            ("x2", "x3"),
            ("x2", "x4"),
            ("x3", "x4"),
            ("x1", "x5"),
            ("x5", "x6"),
        ],
    )


@pytest.fixture
def whiskered_diamond_tail(diamond_tail):
    """diamond_tail with a whisker at x6: vertex decomposable, cover ideal
    componentwise linear, second symbolic power not."""
    return add_whiskers(diamond_tail, [5])


@pytest.fixture
def chordal_eight():
    """Eight-vertex chordal graph whose deterministic i-order side has three
    vertices; removing N[x2] leaves a diamond on x5..x8."""
    return graph(
        ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"],
        [
            ("x1", "x2"),
            ("x2", "x3"),
            ("x2", "x4"),
            ("x3", "x4"),
            ("x3", "x5"),
            ("x4", "x5"),
            ("x3", "x6"),
            ("x4", "x6"),
            ("x5", "x6"),
            ("x5", "x7"),
            ("x6", "x7"),
            ("x7", "x8"),
            ("x6", "x8"),
        ],
    )


@pytest.fixture
def bipartite_seven():
    """Bipartite graph on parts {x1,x2,x3} / {y1..y4} with a hand-checked
    shedding order (y1, x3, x2)."""
    return graph(
        ["x1", "x2", "x3", "y1", "y2", "y3", "y4"],
        [
            ("x1", "y1"),
            ("x2", "y1"),
            ("x2", "y2"),
            ("x2", "y3"),
            ("x3", "y2"),
            ("x3", "y3"),
            ("x3", "y4"),
        ],
    )
