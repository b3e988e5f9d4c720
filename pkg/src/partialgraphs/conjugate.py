"""Conjugate (restricted line) graph over the cut-point-incident edges."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Edge, EmbeddedGraph, GraphError
from .minimal import EdgeRole, edge_roles
from .variants import CANONICAL_EDGES


@dataclass(frozen=True)
class ConjugateNode:
    edge: Edge
    name: str
    role: EdgeRole | None = None

    @property
    def endpoints(self) -> frozenset[str]:
        return self.edge.endpoints


@dataclass(frozen=True)
class ConjugateGraph:
    nodes: tuple[ConjugateNode, ...]
    links: tuple[tuple[int, int], ...]
    canonical: bool = False

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n.name for n in self.nodes)

    def node(self, name: str) -> ConjugateNode:
        for n in self.nodes:
            if n.name == name or n.endpoints == frozenset(name):
                return n
        raise KeyError(name)

    def degree(self, name: str) -> int:
        i = self.nodes.index(self.node(name))
        return sum(i in link for link in self.links)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(n.name) for n in self.nodes)

    def adjacent(self, a: str, b: str) -> bool:
        i = self.nodes.index(self.node(a))
        j = self.nodes.index(self.node(b))
        return (min(i, j), max(i, j)) in self.links

    def link_names(self) -> list[tuple[str, str]]:
        return [(self.nodes[i].name, self.nodes[j].name) for i, j in self.links]


def restricted_line_graph(g: EmbeddedGraph, anchors: Iterable[str]) -> ConjugateGraph:
    """Line graph of the edges of ``g`` that touch ``anchors``.

    Nodes come in the fixed order qm, mn, nq, qt, qp, mc, md when the
    designated edges are exactly those of the open minimal graph at its
    cut points; otherwise in edge-id order.
    """
    anchors = set(anchors)
    unknown = anchors - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown anchor vertices {sorted(unknown)}")
    chosen = [e for e in g.edges if e.endpoints & anchors]
    if not chosen:
        raise GraphError("no edge touches the anchor vertices")
    try:
        roles = edge_roles(g)
    except GraphError:
        roles = {}

    by_pair = {e.endpoints: e for e in chosen}
    canonical = set(by_pair) == {frozenset(n) for n in CANONICAL_EDGES}
    if canonical:
        nodes = [ConjugateNode(by_pair[frozenset(n)], n, roles.get(by_pair[frozenset(n)].id))
                 for n in CANONICAL_EDGES]
    else:
        nodes = [ConjugateNode(e, e.name, roles.get(e.id)) for e in chosen]
    links = tuple((i, j) for i, j in combinations(range(len(nodes)), 2)
                  if nodes[i].endpoints & nodes[j].endpoints)
    return ConjugateGraph(tuple(nodes), links, canonical)


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Strictly upper-triangular 0/1 adjacency in node order."""

    order: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def ones(self) -> int:
        return sum(map(sum, self.rows))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def symmetric(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.rows)
        return tuple(tuple(self.rows[min(i, j)][max(i, j)] for j in range(n))
                     for i in range(n))

    def to_text(self) -> str:
        return "".join("".join(map(str, r)) + "\n" for r in self.rows)


def adjacency_matrix(cg: ConjugateGraph) -> AdjacencyMatrix:
    if not cg.canonical:
        raise GraphError("adjacency matrix needs the canonical node order")
    n = len(cg.nodes)
    links = set(cg.links)
    rows = tuple(tuple(int((i, j) in links) for j in range(n)) for i in range(n))
    return AdjacencyMatrix(cg.names, rows)


def _colorable(n: int, adj: Sequence[set[int]], k: int) -> list[int] | None:
    colors = [0] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        used = {colors[j] for j in adj[i] if j < i}
        for c in range(1, k + 1):
            if c not in used:
                colors[i] = c
                if assign(i + 1):
                    return True
        colors[i] = 0
        return False

    return colors if assign(0) else None


def proper_coloring(cg: ConjugateGraph, k: int) -> dict[str, int] | None:
    """A proper coloring with colors 1..k, or None when none exists."""
    n = len(cg.nodes)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in cg.links:
        adj[i].add(j)
        adj[j].add(i)
    colors = _colorable(n, adj, k)
    return None if colors is None else dict(zip(cg.names, colors))


def chromatic_number(cg: ConjugateGraph) -> int:
    for k in range(1, len(cg.nodes) + 1):
        if proper_coloring(cg, k) is not None:
            return k
    return 0
