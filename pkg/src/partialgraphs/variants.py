"""The nine exit/entry variants of the open minimal graph.

With the main edge directed from cut vertex ``a`` to cut vertex ``b``, a
variant picks one more exit from ``a`` and one more entry into ``b``. The
other two edges at ``a`` then point into ``a`` and the other two at ``b``
point out of ``b``, which fixes all seven cut-point-incident edges. The
edges tp and cd touch no cut vertex and stay free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .euler import Pin, enumerate_balanced_orientations, parse_pin
from .graph import DirectedEdge, EmbeddedGraph, GraphError
from .minimal import EdgeRole, edge_roles

# Canonical exit/entry order for main edge q>m; variant k is
# (EXIT_ORDER[(k-1)//3], ENTRY_ORDER[(k-1)%3]).
EXIT_ORDER = ("p", "t", "n")
ENTRY_ORDER = ("d", "c", "n")
# left-right reflection of the drawing
MIRROR = {"q": "m", "m": "q", "n": "n", "t": "c", "c": "t", "p": "d", "d": "p"}
# node order of the cut-point-incident edges
CANONICAL_EDGES = ("qm", "mn", "nq", "qt", "qp", "mc", "md")


@dataclass(frozen=True)
class OpenVariant:
    graph: EmbeddedGraph = field(repr=False, compare=False)
    index: int
    main: DirectedEdge
    second_exit: DirectedEdge
    second_entry: DirectedEdge
    induced: tuple[DirectedEdge, ...]

    def arc(self, u: str, v: str) -> DirectedEdge:
        for a in self.induced:
            if {a.tail, a.head} == {u, v}:
                return a
        raise KeyError(f"{u}{v} is not directed by variant {self.index}")

    @property
    def label(self) -> str:
        return f"{self.index}: {self.second_exit}, {self.second_entry}"


@dataclass(frozen=True)
class DistanceOnePair:
    """A last-face edge into the main edge's tail and one out of its head."""

    in_at_tail: DirectedEdge
    out_at_head: DirectedEdge

    def __str__(self) -> str:
        return f"{self.in_at_tail.name}={self.out_at_head.name}"


def _canonical_induced(arcs: list[DirectedEdge]) -> tuple[DirectedEdge, ...]:
    by_pair = {frozenset((a.tail, a.head)): a for a in arcs}
    return tuple(by_pair[frozenset(name)] for name in CANONICAL_EDGES)


def enumerate_open_variants(g: EmbeddedGraph, main: Pin = ("q", "m")) -> list[OpenVariant]:
    """All 3 x 3 exit/entry choices around the main edge, in canonical order.

    For main edge m>q the vertex names are mirrored (q<->m, t<->c, p<->d).
    """
    roles = edge_roles(g)
    main_arc = parse_pin(g, main)
    if roles.get(main_arc.edge) is not EdgeRole.MAIN:
        raise GraphError(f"{main_arc} is not the edge joining the cut points")
    a, b = main_arc.tail, main_arc.head
    rename = (lambda x: x) if a == "q" else MIRROR.__getitem__
    out = []
    for k, (x, y) in enumerate(product(EXIT_ORDER, ENTRY_ORDER), 1):
        exit_ = g.arc(a, rename(x))
        entry = g.arc(rename(y), b)
        arcs = [main_arc, exit_, entry]
        for e in g.incident(a):
            if e.id not in (main_arc.edge, exit_.edge):
                arcs.append(g.arc(e.other(a), a))
        for e in g.incident(b):
            if e.id not in (main_arc.edge, entry.edge):
                arcs.append(g.arc(b, e.other(b)))
        out.append(OpenVariant(g, k, main_arc, exit_, entry, _canonical_induced(arcs)))
    return out


def distance_one_pairs(v: OpenVariant) -> list[DistanceOnePair]:
    """Last-face edges entering the main edge's tail times those leaving its head.

    Each such pair sits one link apart on any circuit through the main
    edge: in along the first, across the main edge, out along the second.
    """
    roles = edge_roles(v.graph)
    a, b = v.main.tail, v.main.head
    ins = [x for x in v.induced if x.head == a and roles[x.edge] is EdgeRole.LAST]
    outs = [x for x in v.induced if x.tail == b and roles[x.edge] is EdgeRole.LAST]
    order = {name: i for i, name in enumerate("tpcd")}
    if a != "q":
        order = {MIRROR[k]: i for k, i in order.items()}
    ins.sort(key=lambda x: order[x.tail])
    outs.sort(key=lambda x: order[x.head])
    return [DistanceOnePair(i, o) for i in ins for o in outs]


def feasible_balanced(v: OpenVariant) -> bool:
    """Whether the variant extends to a balanced orientation of the whole graph."""
    return bool(enumerate_balanced_orientations(v.graph, v.induced))
