"""Balanced orientations, Euler circuits and face-bypass signs."""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .graph import DirectedEdge, EmbeddedGraph, Face, FaceTag, GraphError, polygon_area2

Pin = DirectedEdge | tuple[str, str] | str


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``graph``; ``arcs[i]`` orients edge ``i``."""

    graph: EmbeddedGraph
    arcs: tuple[DirectedEdge, ...]

    @classmethod
    def from_arcs(cls, g: EmbeddedGraph, pairs: Iterable[Pin]) -> Orientation:
        """Orientation from one direction per edge, given in any order."""
        fixed = _normalise_pins(g, pairs)
        if len(fixed) != len(g.edges):
            missing = [e.name for e in g.edges if e.id not in fixed]
            raise GraphError(f"no direction given for {missing}")
        return cls(g, tuple(fixed[i] for i in range(len(g.edges))))

    @property
    def bits(self) -> tuple[int, ...]:
        """0 where the edge runs as listed (u -> v), 1 where reversed."""
        return tuple(int(a.tail != e.u) for a, e in zip(self.arcs, self.graph.edges))

    def arc(self, u: str, v: str) -> DirectedEdge:
        return self.arcs[self.graph.edge_between(u, v).id]

    def has(self, tail: str, head: str) -> bool:
        return self.arc(tail, head).tail == tail

    def imbalance(self) -> dict[str, int]:
        """out-degree minus in-degree per vertex."""
        d = {v: 0 for v in self.graph.vertices}
        for a in self.arcs:
            d[a.tail] += 1
            d[a.head] -= 1
        return d

    def is_balanced(self) -> bool:
        return not any(self.imbalance().values())

    def reversed(self) -> Orientation:
        return Orientation(self.graph, tuple(a.reversed() for a in self.arcs))

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.arcs)


def parse_pin(g: EmbeddedGraph, pin: Pin) -> DirectedEdge:
    """Accept a DirectedEdge, a ``(tail, head)`` pair or a string.

    Strings are ``"f>a"`` (tail > head) or ``"fa>f"`` (edge > tail).
    """
    if isinstance(pin, DirectedEdge):
        arc = g.arc(pin.tail, pin.head)
        if arc.edge != pin.edge:
            raise GraphError(f"pin {pin} has the wrong edge id")
        return arc
    if isinstance(pin, str):
        left, sep, right = pin.partition(">")
        if not sep or not left or not right:
            raise GraphError(f"cannot parse pin {pin!r}")
        if left in g:
            return g.arc(left, right)
        for k in range(1, len(left)):
            u, v = left[:k], left[k:]
            if u in g and v in g and g.has_edge(u, v):
                if right not in (u, v):
                    raise GraphError(f"pin {pin!r}: {right!r} is not an endpoint")
                return g.arc(right, v if right == u else u)
        raise GraphError(f"pin {pin!r} names no edge")
    tail, head = pin
    return g.arc(tail, head)


def _normalise_pins(g: EmbeddedGraph, pins: Iterable[Pin]) -> dict[int, DirectedEdge]:
    fixed: dict[int, DirectedEdge] = {}
    for p in pins:
        arc = parse_pin(g, p)
        prev = fixed.get(arc.edge)
        if prev is not None and prev != arc:
            raise GraphError(f"contradictory pins on edge {g.edges[arc.edge].name}")
        fixed[arc.edge] = arc
    return fixed


def enumerate_balanced_orientations(g: EmbeddedGraph,
                                    pins: Iterable[Pin] = ()) -> list[Orientation]:
    """All orientations extending ``pins`` with in-degree = out-degree everywhere.

    Results are in lexicographic order of the direction bits by edge id
    (bit 0, the listed direction, first).
    """
    fixed = _normalise_pins(g, pins)
    edges = g.edges
    balance = {v: 0 for v in g.vertices}
    remaining = {v: g.degree(v) for v in g.vertices}
    chosen: list[DirectedEdge] = []
    out: list[Orientation] = []

    def feasible(x: str) -> bool:
        return abs(balance[x]) <= remaining[x] and (balance[x] + remaining[x]) % 2 == 0

    def place(i: int) -> None:
        if i == len(edges):
            out.append(Orientation(g, tuple(chosen)))
            return
        e = edges[i]
        options = (DirectedEdge(i, e.u, e.v), DirectedEdge(i, e.v, e.u))
        for arc in options:
            if i in fixed and fixed[i] != arc:
                continue
            balance[arc.tail] += 1
            balance[arc.head] -= 1
            remaining[e.u] -= 1
            remaining[e.v] -= 1
            if feasible(e.u) and feasible(e.v):
                chosen.append(arc)
                place(i + 1)
                chosen.pop()
            balance[arc.tail] -= 1
            balance[arc.head] += 1
            remaining[e.u] += 1
            remaining[e.v] += 1

    place(0)
    return out


SECOND_EXITS_FROM_F = (("f", "b"), ("f", "d"), ("f", "e"))
SECOND_ENTRIES_INTO_B = (("f", "b"), ("d", "b"), ("c", "b"))


def classify_exit_entry(g: EmbeddedGraph) -> dict[tuple[int, int], bool]:
    """Feasibility table for the closed minimal graph with f>a, a>b fixed.

    Key ``(i, j)`` (1-based) picks the second exit from f out of
    fb, fd, fe and the second entry into b out of fb, db, cb; the value is
    True when some balanced orientation contains both choices.
    """
    table = {}
    for i, exit_ in enumerate(SECOND_EXITS_FROM_F, 1):
        for j, entry in enumerate(SECOND_ENTRIES_INTO_B, 1):
            pins = [("f", "a"), ("a", "b"), exit_, entry]
            table[i, j] = bool(enumerate_balanced_orientations(g, pins))
    return table


def _check_balanced(arcs: Sequence[tuple[str, str]]) -> None:
    deg: Counter[str] = Counter()
    for t, h in arcs:
        deg[t] += 1
        deg[h] -= 1
    bad = sorted(v for v, d in deg.items() if d)
    if bad:
        raise GraphError(f"orientation is not balanced at {bad}")


def hierholzer(arcs: Sequence[tuple[str, str]], start: str) -> list[int]:
    """Euler circuit of a balanced digraph as a list of arc indices.

    Always leaves a vertex along its lowest-index unused arc.
    """
    _check_balanced(arcs)
    if not arcs:
        return []
    out: dict[str, list[int]] = defaultdict(list)
    for i, (t, _) in enumerate(arcs):
        out[t].append(i)
    if start not in out:
        raise GraphError(f"start vertex {start!r} has no outgoing arc")
    for v in out:
        out[v].reverse()  # pop() from the end yields the lowest index
    stack: list[tuple[str, int | None]] = [(start, None)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        if out[v]:
            i = out[v].pop()
            stack.append((arcs[i][1], i))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    if len(circuit) != len(arcs):
        raise GraphError("arcs do not form a single connected component")
    return circuit


def euler_circuit(o: Orientation, start: str) -> tuple[DirectedEdge, ...]:
    arcs = [(a.tail, a.head) for a in o.arcs]
    return tuple(o.arcs[i] for i in hierholzer(arcs, start))


def _det(matrix: list[list[int]]) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def count_eulerian_circuits(arcs: Sequence[tuple[str, str]]) -> int:
    """Number of Euler circuits up to rotation, by the BEST theorem.

    ec = t_w * prod_v (outdeg(v) - 1)!, where t_w counts arborescences
    oriented towards an arbitrary root w (a Laplacian cofactor).
    Parallel arcs are allowed and treated as distinguishable.
    """
    _check_balanced(arcs)
    if not arcs:
        raise GraphError("no arcs")
    verts = sorted({v for a in arcs for v in a})
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    lap = [[0] * n for _ in range(n)]
    outdeg = [0] * n
    for t, h in arcs:
        i, j = idx[t], idx[h]
        outdeg[i] += 1
        if i != j:
            lap[i][i] += 1
            lap[i][j] -= 1
    minor = [row[1:] for row in lap[1:]]
    trees = _det(minor)
    result = trees
    for d in outdeg:
        result *= factorial(d - 1)
    return result


def count_euler_circuits(o: Orientation) -> int:
    return count_eulerian_circuits([(a.tail, a.head) for a in o.arcs])


class FaceStatus(str, enum.Enum):
    CCW = "+"
    CW = "-"
    ACYCLIC = "0"


@dataclass(frozen=True)
class FaceProfile:
    """Bypass status of each face, aligned with ``graph.faces``."""

    faces: tuple[Face, ...]
    status: tuple[FaceStatus, ...]

    def cyclic(self) -> tuple[Face, ...]:
        return tuple(f for f, s in zip(self.faces, self.status)
                     if s is not FaceStatus.ACYCLIC)

    def cyclic_tags(self) -> Counter[FaceTag]:
        return Counter(f.tag for f in self.cyclic())

    def signs(self) -> Counter[FaceStatus]:
        return Counter(s for s in self.status if s is not FaceStatus.ACYCLIC)

    def __str__(self) -> str:
        return " ".join(f"{''.join(f.cycle)}:{s.value}"
                        for f, s in zip(self.faces, self.status))


def face_cycle_profile(o: Orientation) -> FaceProfile:
    """Classify every face as a coherently directed CCW/CW cycle or acyclic.

    The sign is that of the shoelace area of the face walk taken in the
    direction the orientation runs around it.
    """
    g = o.graph
    status = []
    for face in g.faces:
        along = [o.arcs[d.edge] == d for d in face.darts]
        if all(along):
            walk = face.cycle
        elif not any(along):
            walk = tuple(reversed([d.head for d in face.darts]))
        else:
            status.append(FaceStatus.ACYCLIC)
            continue
        area = polygon_area2([g.coord(v) for v in walk])
        status.append(FaceStatus.CCW if area > 0 else FaceStatus.CW)
    return FaceProfile(g.faces, tuple(status))
