import random
from itertools import combinations

import pytest

from partialgraphs import oracles
from partialgraphs.conjugate import (
    adjacency_matrix,
    chromatic_number,
    proper_coloring,
    restricted_line_graph,
)
from partialgraphs.graph import GraphError, build_graph, rotation_from_coords
from partialgraphs.minimal import EdgeRole, OPEN_COORDS, OPEN_EDGES, closed_minimal, open_minimal

from .conftest import drawn_graph


@pytest.fixture(scope="module")
def cg():
    return restricted_line_graph(open_minimal(), {"q", "m"})


def test_sizes(cg):
    assert len(cg.nodes) == 7
    assert len(cg.links) == 13
    assert cg.names == ("qm", "mn", "nq", "qt", "qp", "mc", "md")


def test_degrees_by_role(cg):
    assert sorted(cg.degrees(), reverse=True) == [6, 4, 4, 3, 3, 3, 3]
    for node, deg in zip(cg.nodes, cg.degrees()):
        assert deg == {EdgeRole.MAIN: 6, EdgeRole.MIDDLE: 4, EdgeRole.LAST: 3}[node.role]


def test_link_kinds(cg):
    # 3 inside the middle face, 2 inside last faces, 8 between the two kinds
    kinds = {"MM": 0, "LL": 0, "ML": 0}
    for a, b in cg.link_names():
        ra, rb = cg.node(a).role, cg.node(b).role
        mid = {EdgeRole.MAIN, EdgeRole.MIDDLE}
        key = "MM" if ra in mid and rb in mid else "LL" if ra not in mid and rb not in mid else "ML"
        kinds[key] += 1
    assert kinds == {"MM": 3, "LL": 2, "ML": 8}


def test_single_edge():
    g = drawn_graph({"x": (0, 0), "y": (1, 0)}, [("x", "y")])
    cg = restricted_line_graph(g, {"x", "y"})
    assert len(cg.nodes) == 1 and cg.links == ()
    assert chromatic_number(cg) == 1


def test_empty_designation_is_an_error():
    g = drawn_graph({"x": (0, 0), "y": (1, 0), "z": (5, 5)}, [("x", "y"), ("y", "z")])
    with pytest.raises(GraphError):
        restricted_line_graph(g, set())
    with pytest.raises(GraphError):
        restricted_line_graph(g, {"w"})


@pytest.mark.parametrize("make", [closed_minimal, open_minimal])
def test_full_line_graph_matches_oracle(make):
    g = make()
    cg = restricted_line_graph(g, set(g.vertices))
    pairs = [(e.u, e.v) for e in g.edges]
    got = {frozenset((cg.nodes[i].edge.id, cg.nodes[j].edge.id)) for i, j in cg.links}
    assert got == oracles.line_graph_links(pairs)


def test_matrix(cg):
    m = adjacency_matrix(cg)
    assert m.to_text() == (
        "0111111\n"
        "0010011\n"
        "0001100\n"
        "0000100\n"
        "0000000\n"
        "0000001\n"
        "0000000\n"
    )
    assert m.row_sums() == (6, 3, 2, 1, 0, 1, 0)
    assert m.ones == 13
    assert [sum(r) for r in m.symmetric()] == list(cg.degrees())
    assert all(m.rows[i][j] == 0 for i in range(7) for j in range(i + 1))


def test_matrix_independent_of_edge_insertion_order(cg):
    reference = adjacency_matrix(cg).to_text()
    rng = random.Random(7)
    for _ in range(5):
        edges = list(OPEN_EDGES)
        rng.shuffle(edges)
        edges = [e if rng.random() < 0.5 else e[::-1] for e in edges]
        vertices = list(OPEN_COORDS)
        rng.shuffle(vertices)
        rot = rotation_from_coords(vertices, edges, OPEN_COORDS)
        g = build_graph(vertices, edges, rot, OPEN_COORDS)
        assert adjacency_matrix(restricted_line_graph(g, {"m", "q"})).to_text() == reference


def test_matrix_needs_canonical_order():
    with pytest.raises(GraphError):
        adjacency_matrix(restricted_line_graph(closed_minimal(), {"a"}))


def test_two_k4s(cg):
    quads = [set(q) for q in combinations(cg.names, 4)
             if all(cg.adjacent(a, b) for a, b in combinations(q, 2))]
    assert sorted(map(sorted, quads)) == sorted(
        [sorted(["qm", "nq", "qt", "qp"]), sorted(["qm", "mn", "mc", "md"])])


def test_chromatic_number(cg):
    assert chromatic_number(cg) == 4
    assert chromatic_number(cg) == oracles.chromatic_number(len(cg.nodes), cg.links)
    assert proper_coloring(cg, 3) is None
    witness = {"qm": 1, "nq": 2, "mn": 3, "qt": 3, "qp": 4, "mc": 2, "md": 4}
    assert all(witness[a] != witness[b] for a, b in cg.link_names())


def test_triangle_chromatic(triangle):
    cg = restricted_line_graph(triangle, {"x", "y", "z"})
    assert chromatic_number(cg) == 3
