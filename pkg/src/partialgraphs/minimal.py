"""The two minimal partial graphs with fixed names, drawings and face tags.

Closed minimal graph: a triangle a, c, e whose sides are subdivided at
b, d, f, with the central triangle b, d, f added. Its three corner
triangles are the first-subset faces and the central one the second-subset
face.

Open minimal graph: three triangles in a strip. The middle triangle
q, m, n shares the cut vertex q with the last triangle q, t, p and the cut
vertex m with the last triangle m, c, d.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .graph import EmbeddedGraph, FaceTag, GraphError, build_graph, cut_vertices

CLOSED_VERTICES = ("a", "b", "c", "d", "e", "f")
CLOSED_EDGES = (
    ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a"),
    ("b", "d"), ("d", "f"), ("f", "b"),
)
CLOSED_COORDS = {
    "a": (0, 0), "b": (2, 0), "c": (4, 0),
    "d": (3, 2), "e": (2, 4), "f": (1, 2),
}
CLOSED_ROTATION = {
    "a": (0, 5),
    "b": (1, 6, 8, 0),
    "c": (2, 1),
    "d": (3, 7, 6, 2),
    "e": (4, 3),
    "f": (7, 4, 5, 8),
}
CLOSED_FACE_TAGS = {
    frozenset("afb"): FaceTag.FIRST,
    frozenset("bcd"): FaceTag.FIRST,
    frozenset("def"): FaceTag.FIRST,
    frozenset("bdf"): FaceTag.SECOND,
}

OPEN_VERTICES = ("q", "m", "n", "t", "p", "c", "d")
OPEN_EDGES = (
    ("q", "m"), ("q", "n"), ("m", "n"),
    ("q", "t"), ("q", "p"), ("t", "p"),
    ("m", "c"), ("m", "d"), ("c", "d"),
)
OPEN_COORDS = {
    "q": (0, 0), "m": (4, 0), "n": (2, 2),
    "t": (-3, 1), "p": (-3, -1), "c": (7, 1), "d": (7, -1),
}
OPEN_ROTATION = {
    "q": (0, 1, 3, 4),
    "m": (6, 2, 0, 7),
    "n": (1, 2),
    "t": (5, 3),
    "p": (4, 5),
    "c": (6, 8),
    "d": (8, 7),
}


@lru_cache(maxsize=None)
def closed_minimal() -> EmbeddedGraph:
    return build_graph(CLOSED_VERTICES, CLOSED_EDGES, CLOSED_ROTATION,
                       CLOSED_COORDS, CLOSED_FACE_TAGS, name="closed_minimal")


@lru_cache(maxsize=None)
def open_minimal() -> EmbeddedGraph:
    return build_graph(OPEN_VERTICES, OPEN_EDGES, OPEN_ROTATION, OPEN_COORDS,
                       name="open_minimal")


class EdgeRole(str, enum.Enum):
    MAIN = "MAIN"
    MIDDLE = "MIDDLE"
    LAST = "LAST"


def edge_roles(g: EmbeddedGraph) -> dict[int, EdgeRole]:
    """Roles of the cut-point-incident edges of an open minimal graph.

    The main edge joins the two cut vertices, the middle edges close the
    bounded face on the main edge, and every other edge at a cut vertex
    belongs to a last face. Edges away from the cut vertices get no role.
    """
    cuts = cut_vertices(g)
    if len(cuts) != 2:
        raise GraphError(f"expected two cut vertices, found {sorted(cuts)}")
    q, m = sorted(cuts, key=g.index)
    if not g.has_edge(q, m):
        raise GraphError("cut vertices are not adjacent")
    main = g.edge_between(q, m)
    middle = [f for f in g.faces
              if f.tag is not FaceTag.OUTER and main.id in {d.edge for d in f.darts}]
    if len(middle) != 1:
        raise GraphError("main edge must border exactly one bounded face")
    roles = {main.id: EdgeRole.MAIN}
    for d in middle[0].darts:
        roles.setdefault(d.edge, EdgeRole.MIDDLE)
    for x in (q, m):
        for e in g.incident(x):
            roles.setdefault(e.id, EdgeRole.LAST)
    return roles
