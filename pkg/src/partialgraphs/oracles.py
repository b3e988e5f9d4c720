"""Brute-force reference computations.

Each routine enumerates the whole state space with no pruning and shares
no code with the fast path it is used to check.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .graph import EmbeddedGraph, _is_connected


def balanced_orientations(g: EmbeddedGraph,
                          pins: Iterable[tuple[str, str]] = ()) -> list[tuple[tuple[str, str], ...]]:
    """Filter all 2^E orientations by pins and in/out balance."""
    pins = [tuple(p) for p in pins]
    found = []
    for bits in product((0, 1), repeat=len(g.edges)):
        arcs = tuple((e.u, e.v) if b == 0 else (e.v, e.u) for e, b in zip(g.edges, bits))
        if any(p not in arcs for p in pins):
            continue
        if all(sum(t == v for t, _ in arcs) == sum(h == v for _, h in arcs)
               for v in g.vertices):
            found.append(arcs)
    return found


def closed_trails(arcs: Sequence[tuple[str, str]]) -> list[tuple[int, ...]]:
    """Every Euler circuit that starts with arc 0, as arc-index sequences.

    Fixing the first arc picks one representative per rotation class.
    """
    if not arcs:
        return []
    n = len(arcs)
    found = []

    def walk(path: list[int], used: set[int]) -> None:
        if len(path) == n:
            if arcs[path[-1]][1] == arcs[path[0]][0]:
                found.append(tuple(path))
            return
        here = arcs[path[-1]][1]
        for i in range(n):
            if i not in used and arcs[i][0] == here:
                used.add(i)
                path.append(i)
                walk(path, used)
                path.pop()
                used.remove(i)

    walk([0], {0})
    return found


def labelings(g: EmbeddedGraph, pins: Mapping[str, int]) -> list[dict[str, int]]:
    free = [v for v in g.vertices if v not in pins]
    found = []
    for vals in product((1, 2, 3), repeat=len(free)):
        lab = {**pins, **dict(zip(free, vals))}
        if all(lab[e.u] != lab[e.v] for e in g.edges):
            found.append({v: lab[v] for v in g.vertices})
    return found


def cut_vertices(g: EmbeddedGraph) -> set[str]:
    pairs = [(e.u, e.v) for e in g.edges]
    return {v for v in g.vertices if not _is_connected(g.vertices, pairs, removed=v)}


def line_graph_links(edges: Sequence[tuple[str, str]]) -> set[frozenset[int]]:
    return {frozenset((i, j)) for i, j in combinations(range(len(edges)), 2)
            if set(edges[i]) & set(edges[j])}


def chromatic_number(n: int, links: Iterable[tuple[int, int]]) -> int:
    links = list(links)
    for k in range(1, n + 1):
        for colors in product(range(k), repeat=n):
            if all(colors[i] != colors[j] for i, j in links):
                return k
    return 0


def is_euler_circuit(walk: Sequence[tuple[str, str]], edge_ids: Sequence[int],
                     n_edges: int) -> bool:
    """Consecutive arcs chain head to tail, the walk closes, and every edge is used once."""
    if sorted(edge_ids) != list(range(n_edges)):
        return False
    return all(walk[i][1] == walk[(i + 1) % len(walk)][0] for i in range(len(walk)))
