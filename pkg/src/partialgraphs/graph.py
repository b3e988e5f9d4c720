"""Embedded simple graphs: rotation systems, face tracing and cut vertices.

A graph is embedded by listing, for every vertex, its incident edges in
counterclockwise order. Faces are traced purely from that rotation system;
coordinates are carried along for orientation signs and exports only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

Number = int | Fraction


class GraphError(ValueError):
    """Raised when graph input is inconsistent."""


class FaceTag(str, enum.Enum):
    FIRST = "FIRST"
    SECOND = "SECOND"
    OUTER = "OUTER"


class Edge(NamedTuple):
    id: int
    u: str
    v: str

    @property
    def name(self) -> str:
        return self.u + self.v

    @property
    def endpoints(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"{x!r} is not an endpoint of edge {self.name}")


class DirectedEdge(NamedTuple):
    """One side of an edge, traversed from ``tail`` to ``head``."""

    edge: int
    tail: str
    head: str

    @property
    def name(self) -> str:
        return self.tail + self.head

    def reversed(self) -> DirectedEdge:
        return DirectedEdge(self.edge, self.head, self.tail)

    def __str__(self) -> str:
        return f"{self.tail}>{self.head}"


@dataclass(frozen=True)
class Face:
    darts: tuple[DirectedEdge, ...]
    tag: FaceTag

    @property
    def cycle(self) -> tuple[str, ...]:
        """Vertex sequence of the boundary walk (tails of the darts)."""
        return tuple(d.tail for d in self.darts)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.cycle)

    def __len__(self) -> int:
        return len(self.darts)


def polygon_area2(points: Sequence[tuple[Number, Number]]) -> Number:
    """Twice the signed shoelace area of a closed polygon (positive = CCW)."""
    total: Number = 0
    for i, (x0, y0) in enumerate(points):
        x1, y1 = points[(i + 1) % len(points)]
        total += x0 * y1 - x1 * y0
    return total


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    """Undirected simple graph with a rotation system and tagged faces.

    Build instances with :func:`build_graph`; the constructor does not
    validate anything.
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    rotation: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[Number, Number], ...]
    faces: tuple[Face, ...] = ()

    @cached_property
    def _vindex(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _by_pair(self) -> dict[frozenset[str], Edge]:
        return {e.endpoints: e for e in self.edges}

    def __contains__(self, v: object) -> bool:
        return v in self._vindex

    def index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def coord(self, v: str) -> tuple[Number, Number]:
        return self.coords[self.index(v)]

    def rotation_of(self, v: str) -> tuple[int, ...]:
        return self.rotation[self.index(v)]

    def incident(self, v: str) -> tuple[Edge, ...]:
        return tuple(self.edges[i] for i in self.rotation_of(v))

    def degree(self, v: str) -> int:
        return len(self.rotation_of(v))

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(e.other(v) for e in self.incident(v))

    def edge_between(self, u: str, v: str) -> Edge:
        try:
            return self._by_pair[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge between {u!r} and {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._by_pair

    def arc(self, tail: str, head: str) -> DirectedEdge:
        """The directed side ``tail -> head`` of an existing edge."""
        return DirectedEdge(self.edge_between(tail, head).id, tail, head)

    def faces_tagged(self, tag: FaceTag) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.tag is tag)

    @property
    def outer_face(self) -> Face:
        return self.faces_tagged(FaceTag.OUTER)[0]

    def face_area2(self, face: Face) -> Number:
        return polygon_area2([self.coord(v) for v in face.cycle])

    def is_connected(self) -> bool:
        return _is_connected(self.vertices, [(e.u, e.v) for e in self.edges])

    def __repr__(self) -> str:
        return (
            f"EmbeddedGraph({self.name!r}, V={len(self.vertices)}, "
            f"E={len(self.edges)}, F={len(self.faces)})"
        )


def _is_connected(vertices: Sequence[str], pairs: Iterable[tuple[str, str]],
                  removed: str | None = None) -> bool:
    adj: dict[str, list[str]] = {v: [] for v in vertices if v != removed}
    for u, v in pairs:
        if removed in (u, v):
            continue
        adj[u].append(v)
        adj[v].append(u)
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def rotation_from_coords(
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str]],
    coords: Mapping[str, tuple[Number, Number]],
) -> dict[str, list[int]]:
    """Counterclockwise rotation system read off a straight-line drawing.

    Convenience for building test graphs; the canonical graphs spell out
    their rotations explicitly.
    """
    rot: dict[str, list[int]] = {v: [] for v in vertices}
    for i, (u, v) in enumerate(edges):
        rot[u].append(i)
        rot[v].append(i)
    for x, ids in rot.items():
        x0, y0 = coords[x]

        def angle(i: int, x=x, x0=x0, y0=y0) -> float:
            u, v = edges[i]
            x1, y1 = coords[v if u == x else u]
            return math.atan2(float(y1 - y0), float(x1 - x0)) % (2 * math.pi)

        ids.sort(key=angle)
    return rot


def build_graph(
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str]],
    rotation: Mapping[str, Sequence[int]],
    coords: Mapping[str, tuple[Number, Number]],
    face_tags: Mapping[frozenset[str], FaceTag | str] | Sequence[FaceTag | str] | None = None,
    name: str = "graph",
) -> EmbeddedGraph:
    """Validate input, trace faces and return an immutable graph.

    ``rotation`` maps each vertex to its incident edge ids in
    counterclockwise order. ``face_tags`` assigns tags to faces, either
    keyed by vertex set or as a list in trace order. Untagged faces default to FIRST, except that when
    no face is explicitly tagged OUTER, the face with the most negative
    signed area (the one traced clockwise around everything) becomes OUTER.
    """
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise GraphError("duplicate vertex names")
    vset = set(vertices)

    edge_objs = []
    seen_pairs: set[frozenset[str]] = set()
    for i, (u, v) in enumerate(edges):
        if u not in vset or v not in vset:
            raise GraphError(f"edge {u}{v} uses an unknown vertex")
        if u == v:
            raise GraphError(f"loop at {u!r}")
        pair = frozenset((u, v))
        if pair in seen_pairs:
            raise GraphError(f"duplicate edge {u}{v}")
        seen_pairs.add(pair)
        edge_objs.append(Edge(i, u, v))

    if set(rotation) != vset:
        raise GraphError("rotation must list every vertex exactly once")
    rot = []
    for x in vertices:
        ids = tuple(rotation[x])
        for i in ids:
            if not 0 <= i < len(edge_objs):
                raise GraphError(f"rotation at {x!r} mentions unknown edge {i}")
        expected = sorted(e.id for e in edge_objs if x in e.endpoints)
        if sorted(ids) != expected:
            raise GraphError(f"rotation at {x!r} does not match its incident edges")
        rot.append(ids)

    if set(coords) != vset:
        raise GraphError("coordinates must be given for every vertex")
    xy = tuple((coords[v][0], coords[v][1]) for v in vertices)

    g = EmbeddedGraph(name, vertices, tuple(edge_objs), tuple(rot), xy)
    if not g.is_connected():
        raise GraphError("graph must be connected")

    walks = _trace_walks(g)
    if len(vertices) - len(edge_objs) + len(walks) != 2:
        raise GraphError(
            f"Euler formula violated: V={len(vertices)}, E={len(edge_objs)}, "
            f"F={len(walks)}; rotation system is not planar"
        )

    resolved: list[FaceTag | None] = []
    if isinstance(face_tags, Mapping):
        for w in walks:
            t = face_tags.get(frozenset(d.tail for d in w))
            resolved.append(FaceTag(t) if t is not None else None)
    elif face_tags:
        if len(face_tags) != len(walks):
            raise GraphError(f"{len(face_tags)} face tags for {len(walks)} faces")
        resolved = [FaceTag(t) for t in face_tags]
    else:
        resolved = [None] * len(walks)
    if FaceTag.OUTER not in resolved:
        areas = [polygon_area2([g.coord(d.tail) for d in w]) for w in walks]
        k = min(range(len(walks)), key=lambda i: areas[i])
        if resolved[k] is not None:
            raise GraphError("no face is tagged OUTER")
        resolved[k] = FaceTag.OUTER
    if resolved.count(FaceTag.OUTER) != 1:
        raise GraphError("exactly one face must be tagged OUTER")
    faces = tuple(Face(w, t or FaceTag.FIRST) for w, t in zip(walks, resolved))
    object.__setattr__(g, "faces", faces)
    return g


def trace_faces(g: EmbeddedGraph) -> list[Face]:
    """Faces of a built graph, re-traced from its rotation system."""
    return [Face(w, f.tag) for w, f in zip(_trace_walks(g), g.faces)]


def _trace_walks(g: EmbeddedGraph) -> list[tuple[DirectedEdge, ...]]:
    """Boundary walks of all faces, in deterministic order.

    Darts are visited by edge id, the ``u -> v`` side before ``v -> u``;
    each unused dart starts a new face. Arriving at ``x`` along edge ``e``,
    the walk leaves along the edge preceding ``e`` in ``x``'s
    counterclockwise rotation, so bounded faces come out counterclockwise
    and the outer face clockwise.
    """
    used: set[tuple[int, str]] = set()
    walks = []
    for e in g.edges:
        for start in (DirectedEdge(e.id, e.u, e.v), DirectedEdge(e.id, e.v, e.u)):
            if (start.edge, start.tail) in used:
                continue
            walk = []
            dart = start
            while (dart.edge, dart.tail) not in used:
                used.add((dart.edge, dart.tail))
                walk.append(dart)
                rot = g.rotation_of(dart.head)
                nxt = g.edges[rot[(rot.index(dart.edge) - 1) % len(rot)]]
                dart = DirectedEdge(nxt.id, dart.head, nxt.other(dart.head))
            if dart != start:
                raise GraphError("face walk did not close; rotation is inconsistent")
            walks.append(tuple(walk))
    return walks


def articulation_points(vertices: Sequence[str],
                        pairs: Iterable[tuple[str, str]]) -> set[str]:
    """Cut vertices of an undirected graph (Hopcroft-Tarjan low-link)."""
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    cut: set[str] = set()

    for root in vertices:
        if root in disc:
            continue
        disc[root] = low[root] = len(disc)
        root_children = 0
        # iterative DFS: (vertex, parent, neighbour iterator)
        stack = [(root, None, iter(adj[root]))]
        while stack:
            x, parent, it = stack[-1]
            for y in it:
                if y not in disc:
                    disc[y] = low[y] = len(disc)
                    stack.append((y, x, iter(adj[y])))
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if parent is None:
                    continue
                low[parent] = min(low[parent], low[x])
                if parent == root:
                    root_children += 1
                elif low[x] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def cut_vertices(g: EmbeddedGraph) -> frozenset[str]:
    return frozenset(articulation_points(g.vertices, [(e.u, e.v) for e in g.edges]))
