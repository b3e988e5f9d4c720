"""Claim-by-claim verification report."""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any

from . import oracles
from .conjugate import adjacency_matrix, chromatic_number, restricted_line_graph
from .euler import (
    classify_exit_entry,
    count_euler_circuits,
    enumerate_balanced_orientations,
    euler_circuit,
    face_cycle_profile,
)
from .graph import FaceTag
from .minimal import closed_minimal, open_minimal
from .signing import all_signings, check_proper_on_conjugate, proper_labelings
from .variants import enumerate_open_variants, feasible_balanced

STATED, DERIVED = "STATED", "DERIVED"

VARIANT_2_TABLE = {"qm": (1, 2), "qp": (1, 3), "tq": (2, 1), "nq": (3, 1),
                   "mn": (2, 3), "cm": (3, 2), "md": (2, 1)}


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    source: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected: Any, computed: Any, source: str) -> None:
        self.checks.append(Check(name, expected, computed, source))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{**asdict(c), "passed": c.passed} for c in self.checks],
        }

    def render(self, color: bool = False) -> str:
        def verdict(ok: bool) -> str:
            word = "PASS" if ok else "FAIL"
            if color:
                return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"
            return word

        width = max(len(c.name) for c in self.checks)
        lines = [f"{'check':<{width}}  {'source':<7}  {'expected':<24}  {'computed':<24}  result"]
        for c in self.checks:
            lines.append(f"{c.name:<{width}}  {c.source:<7}  {_fmt(c.expected):<24}  "
                         f"{_fmt(c.computed):<24}  {verdict(c.passed)}")
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"{n_ok}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _sorted(labs: list[dict[str, int]]) -> list[tuple]:
    return sorted(tuple(sorted(d.items())) for d in labs)


def _fmt(x: Any) -> str:
    if isinstance(x, dict):
        return " ".join(f"{k}={''.join(map(str, v))}" for k, v in x.items())
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_fmt(y) for y in x) + "]"
    return str(x)


def _arcs(seq) -> list[tuple[str, str]]:
    return [(a.tail, a.head) for a in seq]


def _face_partition(orients) -> list[str]:
    kinds = []
    for o in orients:
        prof = face_cycle_profile(o)
        tags = prof.cyclic_tags()
        if len(prof.cyclic()) == len(prof.faces):
            kinds.append("all")
        elif tags == Counter({FaceTag.OUTER: 1, FaceTag.SECOND: 1}):
            kinds.append("outer+second")
        else:
            kinds.append(f"{len(prof.cyclic())} cyclic")
    return sorted(kinds)


def verify_all() -> VerificationReport:
    r = VerificationReport()
    closed, opened = closed_minimal(), open_minimal()

    pinned = enumerate_balanced_orientations(closed, [("f", "a"), ("a", "b")])
    r.add("closed variants (pinned f>a, a>b)", 5, len(pinned), STATED)
    brute = oracles.balanced_orientations(closed, [("f", "a"), ("a", "b")])
    r.add("closed variants match 2^9 brute force", True,
          sorted(tuple(_arcs(o.arcs)) for o in pinned) == sorted(brute), DERIVED)

    every = enumerate_balanced_orientations(closed)
    r.add("closed variants (no pins)", 10, len(every), STATED)
    as_set = {tuple(_arcs(o.arcs)) for o in every}
    r.add("reversal bijection", True,
          all(tuple(_arcs(o.reversed().arcs)) in as_set for o in every)
          and len(enumerate_balanced_orientations(closed, [("a", "f"), ("b", "a")])) == len(pinned),
          DERIVED)

    table = classify_exit_entry(closed)
    r.add("infeasible exit/entry combinations", [(1, 2), (1, 3), (2, 1), (3, 1)],
          sorted(k for k, ok in table.items() if not ok), STATED)

    r.add("face profiles of the 5 variants",
          ["3 cyclic", "3 cyclic", "3 cyclic", "all", "outer+second"],
          _face_partition(pinned), DERIVED)

    variants = enumerate_open_variants(opened)
    r.add("open variants", 9, len(variants), STATED)
    r.add("open variants with balanced extension", 4,
          sum(feasible_balanced(v) for v in variants), DERIVED)

    cg = restricted_line_graph(opened, {"q", "m"})
    r.add("conjugate nodes", 7, len(cg.nodes), STATED)
    r.add("conjugate links", 13, len(cg.links), STATED)
    r.add("conjugate degree multiset", [6, 4, 4, 3, 3, 3, 3],
          sorted(cg.degrees(), reverse=True), STATED)
    mat = adjacency_matrix(cg)
    r.add("adjacency matrix ones", 13, mat.ones, STATED)
    r.add("adjacency matrix stable", True,
          mat.to_text() == adjacency_matrix(restricted_line_graph(opened, {"m", "q"})).to_text(),
          DERIVED)

    chi = chromatic_number(cg)
    r.add("conjugate chromatic number", 4, chi, DERIVED)
    r.add("chromatic number at most 6", True, chi <= 6, STATED)

    entries = all_signings(opened)
    r.add("signings", 16, len(entries), STATED)
    mult = Counter(e.variant.index for e in entries)
    r.add("signings per variant", [1, 1, 2, 1, 1, 2, 2, 2, 4],
          [mult[k] for k in range(1, 10)], STATED)
    pinned_labs = oracles.labelings(opened, {"q": 1, "m": 2})
    unique = True
    for e in entries:
        x, y = e.pair.in_at_tail.tail, e.pair.out_at_head.head
        a, b = e.variant.main.tail, e.variant.main.head
        survivors = [lab for lab in pinned_labs if lab[x] == lab[b] and lab[y] == lab[a]]
        unique &= survivors == [e.signing.labels()]
    r.add("each signing constraint has a unique solution", True, unique, STATED)
    v2 = next(e for e in entries if e.label == "2")
    r.add("variant 2 signing", VARIANT_2_TABLE, v2.signing.as_dict(), STATED)
    r.add("all signings proper on conjugate graph", True,
          all(check_proper_on_conjugate(e.signing, cg) for e in entries), STATED)

    labs = proper_labelings(opened, {"q": 1, "m": 2})
    r.add("open labelings with q=1, m=2", 4, len(labs), DERIVED)
    r.add("open labelings match 3^5 scan", True, _sorted(labs) == _sorted(pinned_labs), DERIVED)
    r.add("closed labelings with b=1, d=2", 1,
          len(proper_labelings(closed, {"b": 1, "d": 2})), DERIVED)

    best_ok = circuits_ok = True
    for g in (closed, opened):
        for o in enumerate_balanced_orientations(g):
            best_ok &= count_euler_circuits(o) == len(oracles.closed_trails(_arcs(o.arcs)))
            circ = euler_circuit(o, g.vertices[0])
            circuits_ok &= oracles.is_euler_circuit(_arcs(circ), [a.edge for a in circ],
                                                    len(g.edges))
    r.add("BEST count equals trail enumeration", True, best_ok, DERIVED)
    r.add("Euler circuits use every edge once", True, circuits_ok, DERIVED)
    return r
