"""Proper 3-labelings of the open minimal graph and the induced edge signings.

A labeling gives each vertex one of 1, 2, 3 with adjacent vertices
distinct. A directed edge ``u -> v`` is then signed with the ordered pair
``(label(u), label(v))``. The signings of interest fix the cut points to 1
and 2 and require the two last-face edges one link apart around the main
edge to carry equal pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .conjugate import ConjugateGraph
from .graph import DirectedEdge, EmbeddedGraph, GraphError
from .minimal import EdgeRole, edge_roles, open_minimal
from .variants import DistanceOnePair, OpenVariant, distance_one_pairs, enumerate_open_variants

LABELS = (1, 2, 3)
LABEL_COLORS = {1: "red", 2: "green", 3: "blue"}
Pair = tuple[int, int]


class SigningError(GraphError):
    """The constraint system has no (or no unique) solution."""


def proper_labelings(g: EmbeddedGraph,
                     pins: Mapping[str, int] | None = None) -> list[dict[str, int]]:
    """All proper labelings with values 1..3 that extend ``pins``.

    Free vertices are filled in graph order, smallest label first.
    """
    pins = dict(pins or {})
    for v, x in pins.items():
        if v not in g:
            raise GraphError(f"unknown vertex {v!r}")
        if x not in LABELS:
            raise GraphError(f"label {x!r} for {v!r} is not one of {LABELS}")
    for e in g.edges:
        if e.u in pins and e.v in pins and pins[e.u] == pins[e.v]:
            raise GraphError(f"pins give both ends of {e.name} label {pins[e.u]}")

    free = [v for v in g.vertices if v not in pins]
    lab = dict(pins)
    out = []

    def fill(i: int) -> None:
        if i == len(free):
            out.append({v: lab[v] for v in g.vertices})
            return
        v = free[i]
        taken = {lab[w] for w in g.neighbors(v) if w in lab}
        for x in LABELS:
            if x not in taken:
                lab[v] = x
                fill(i + 1)
                del lab[v]

    fill(0)
    return out


@dataclass(frozen=True)
class Signing:
    """Ordered label pairs on directed edges, plus the labeling behind them."""

    arcs: tuple[DirectedEdge, ...]
    pairs: tuple[Pair, ...]
    labeling: tuple[tuple[str, int], ...] = ()
    graph: EmbeddedGraph | None = field(default=None, repr=False, compare=False)

    def as_dict(self) -> dict[str, Pair]:
        return {a.name: p for a, p in zip(self.arcs, self.pairs)}

    def pair(self, u: str, v: str) -> Pair:
        """Pair on the edge between ``u`` and ``v``, whichever way it runs."""
        for a, p in zip(self.arcs, self.pairs):
            if {a.tail, a.head} == {u, v}:
                return p
        raise KeyError(f"{u}{v} is not signed")

    def arc(self, u: str, v: str) -> DirectedEdge:
        for a in self.arcs:
            if {a.tail, a.head} == {u, v}:
                return a
        raise KeyError(f"{u}{v} is not signed")

    @property
    def gamma(self) -> Pair:
        """Pair on the main edge."""
        return self.pairs[0]

    @property
    def beta(self) -> Pair:
        """Pair on the middle edge at m."""
        return self.pair("m", "n")

    @property
    def kappa(self) -> Pair:
        """Pair on the middle edge at q."""
        return self.pair("n", "q")

    def labels(self) -> dict[str, int]:
        return dict(self.labeling)

    def __str__(self) -> str:
        return "; ".join(f"{a.name}={p[0]}{p[1]}" for a, p in zip(self.arcs, self.pairs))


def sign_arcs(arcs: tuple[DirectedEdge, ...], labeling: Mapping[str, int],
              graph: EmbeddedGraph | None = None) -> Signing:
    pairs = tuple((labeling[a.tail], labeling[a.head]) for a in arcs)
    return Signing(arcs, pairs, tuple(labeling.items()), graph)


def _third(a: int, b: int) -> int:
    (c,) = set(LABELS) - {a, b}
    return c


def derive_signing(v: OpenVariant, pair: DistanceOnePair,
                   pins: Mapping[str, int] | None = None) -> Signing:
    """Solve the equal-pair constraint for one variant and distance-one pair.

    With main edge ``a -> b``, pair ``x -> a`` / ``b -> y`` is signed equally
    exactly when label(x) = label(b) and label(y) = label(a). Every other
    vertex is then forced: the third middle-face vertex and the partners of
    x and y in their last faces each take the one label their triangle
    leaves free.
    """
    g = v.graph
    if pair not in distance_one_pairs(v):
        raise GraphError(f"{pair} is not a distance-one pair of variant {v.index}")
    pins = dict(pins or {"q": 1, "m": 2})
    a, b = v.main.tail, v.main.head
    if a not in pins or b not in pins:
        raise GraphError("both cut points must be pinned")
    if pins[a] == pins[b]:
        raise SigningError("cut points carry equal labels")

    roles = edge_roles(g)
    middle = {x for e in g.edges if roles.get(e.id) is EdgeRole.MIDDLE for x in e.endpoints}
    (n,) = middle - {a, b}
    x = pair.in_at_tail.tail
    y = pair.out_at_head.head
    (x2,) = set(g.neighbors(x)) - {a}
    (y2,) = set(g.neighbors(y)) - {b}

    derived = {
        a: pins[a],
        b: pins[b],
        n: _third(pins[a], pins[b]),
        x: pins[b],
        y: pins[a],
    }
    derived[x2] = _third(pins[a], derived[x])
    derived[y2] = _third(pins[b], derived[y])
    for vert, lab in pins.items():
        if derived.get(vert, lab) != lab:
            raise SigningError(f"pin {vert}={lab} contradicts the forced label {derived[vert]}")
    if set(derived) != set(g.vertices):
        raise SigningError("constraints leave vertices unlabeled")
    labeling = {u: derived[u] for u in g.vertices}
    if any(labeling[e.u] == labeling[e.v] for e in g.edges):
        raise SigningError(f"forced labeling {labeling} is not proper")
    return sign_arcs(v.induced, labeling, g)


class SigningEntry(NamedTuple):
    label: str
    variant: OpenVariant
    pair: DistanceOnePair
    signing: Signing


def all_signings(g: EmbeddedGraph | None = None) -> list[SigningEntry]:
    """Every (variant, distance-one pair) derivation, numbered 1, 2, 3.1, 3.2, ..."""
    g = g or open_minimal()
    out = []
    for v in enumerate_open_variants(g):
        pairs = distance_one_pairs(v)
        for k, p in enumerate(pairs, 1):
            label = str(v.index) if len(pairs) == 1 else f"{v.index}.{k}"
            out.append(SigningEntry(label, v, p, derive_signing(v, p)))
    return out


def check_proper_on_conjugate(s: Signing, cg: ConjugateGraph) -> bool:
    """True when no link of ``cg`` joins two nodes carrying the same pair."""
    pairs = {}
    for node in cg.nodes:
        u, v = node.edge.u, node.edge.v
        try:
            pairs[node.name] = s.pair(u, v)
        except KeyError:
            raise GraphError(f"signing does not cover node {node.name}") from None
    return all(pairs[x] != pairs[y] for x, y in cg.link_names())


@dataclass(frozen=True)
class FreeEdgeResolution:
    """Both directions of each edge away from the cut points, with their pairs."""

    options: tuple[tuple[str, tuple[tuple[DirectedEdge, Pair], tuple[DirectedEdge, Pair]]], ...]

    def as_dict(self) -> dict[str, dict[str, Pair]]:
        return {name: {a.name: p for a, p in both} for name, both in self.options}

    def __str__(self) -> str:
        return "; ".join(" or ".join(f"{a.name}={p[0]}{p[1]}" for a, p in both)
                         for _, both in self.options)


def free_edge_resolutions(s: Signing,
                          labeling: Mapping[str, int] | None = None) -> FreeEdgeResolution:
    g = s.graph or open_minimal()
    lab = dict(labeling) if labeling is not None else s.labels()
    for a, p in zip(s.arcs, s.pairs):
        if (lab[a.tail], lab[a.head]) != p:
            raise GraphError(f"labeling does not produce the pair on {a.name}")
    roles = edge_roles(g)
    options = []
    for e in g.edges:
        if e.id in roles:
            continue
        both = tuple((d, (lab[d.tail], lab[d.head]))
                     for d in (DirectedEdge(e.id, e.u, e.v), DirectedEdge(e.id, e.v, e.u)))
        options.append((e.name, both))
    return FreeEdgeResolution(tuple(options))
