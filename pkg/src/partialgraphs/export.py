"""DOT, JSON and CSV serialisations. All output is byte-stable."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Sequence

from .conjugate import ConjugateGraph, adjacency_matrix
from .euler import Orientation, count_euler_circuits, face_cycle_profile
from .graph import EmbeddedGraph, FaceTag, build_graph
from .signing import LABEL_COLORS, SigningEntry, free_edge_resolutions
from .variants import OpenVariant, distance_one_pairs, feasible_balanced


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _num(x: int | Fraction) -> int | str:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _parse_num(x: int | str) -> int | Fraction:
    return Fraction(x) if isinstance(x, str) else x


# --- embedded graphs -------------------------------------------------------

def graph_to_json(g: EmbeddedGraph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [[e.u, e.v] for e in g.edges],
        "faces": [{"cycle": list(f.cycle), "tag": f.tag.value} for f in g.faces],
        "coords": {v: [_num(x), _num(y)] for v, (x, y) in zip(g.vertices, g.coords)},
        "rotation": {v: list(r) for v, r in zip(g.vertices, g.rotation)},
    }


def graph_from_json(obj: dict) -> EmbeddedGraph:
    tags = [FaceTag(f["tag"]) for f in obj.get("faces", [])]
    coords = {v: (_parse_num(x), _parse_num(y)) for v, (x, y) in obj["coords"].items()}
    return build_graph(obj["vertices"], [tuple(e) for e in obj["edges"]],
                       obj["rotation"], coords, tags, name=obj.get("name", "graph"))


def graph_to_dot(g: EmbeddedGraph) -> str:
    lines = [f"graph {g.name} {{"]
    for v, (x, y) in zip(g.vertices, g.coords):
        lines.append(f'  {v} [pos="{_num(x)},{_num(y)}!"];')
    for e in g.edges:
        lines.append(f"  {e.u} -- {e.v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- orientations ----------------------------------------------------------

def orientations_to_json(orients: Sequence[Orientation]) -> list[dict]:
    out = []
    for k, o in enumerate(orients, 1):
        prof = face_cycle_profile(o)
        out.append({
            "index": k,
            "arcs": [str(a) for a in o.arcs],
            "bits": "".join(map(str, o.bits)),
            "euler_circuits": count_euler_circuits(o),
            "faces": [{"cycle": "".join(f.cycle), "tag": f.tag.value, "bypass": s.value}
                      for f, s in zip(prof.faces, prof.status)],
        })
    return out


def orientations_to_dot(orients: Sequence[Orientation]) -> str:
    blocks = []
    for k, o in enumerate(orients, 1):
        g = o.graph
        lines = [f"digraph {g.name}_{k} {{"]
        for v, (x, y) in zip(g.vertices, g.coords):
            lines.append(f'  {v} [pos="{_num(x)},{_num(y)}!"];')
        for a in o.arcs:
            lines.append(f"  {a.tail} -> {a.head};")
        lines.append("}")
        blocks.append("\n".join(lines) + "\n")
    return "".join(blocks)


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def orientations_to_csv(g: EmbeddedGraph, orients: Sequence[Orientation]) -> str:
    rows: list[list[Any]] = [["index", *(e.name for e in g.edges)]]
    rows += [[k, *o.bits] for k, o in enumerate(orients, 1)]
    return _csv(rows)


# --- open variants ---------------------------------------------------------

def variants_to_json(variants: Sequence[OpenVariant]) -> list[dict]:
    return [{
        "index": v.index,
        "second_exit": str(v.second_exit),
        "second_entry": str(v.second_entry),
        "induced": [str(a) for a in v.induced],
        "feasible": feasible_balanced(v),
        "distance_one_pairs": [str(p) for p in distance_one_pairs(v)],
    } for v in variants]


def variants_to_csv(variants: Sequence[OpenVariant]) -> str:
    rows: list[list[Any]] = [["index", "secondExit", "secondEntry",
                              "qm", "mn", "nq", "qt", "qp", "mc", "md",
                              "feasible", "pairs"]]
    for v in variants:
        rows.append([v.index, str(v.second_exit), str(v.second_entry),
                     *(str(a) for a in v.induced),
                     int(feasible_balanced(v)), len(distance_one_pairs(v))])
    return _csv(rows)


# --- conjugate graph -------------------------------------------------------

def conjugate_to_json(cg: ConjugateGraph) -> dict:
    obj: dict[str, Any] = {
        "nodes": [{"name": n.name, "role": n.role.value if n.role else None}
                  for n in cg.nodes],
        "links": [list(p) for p in cg.link_names()],
    }
    if cg.canonical:
        obj["matrix"] = adjacency_matrix(cg).to_text().split()
    return obj


def conjugate_to_dot(cg: ConjugateGraph) -> str:
    lines = ["graph conjugate {"]
    for n in cg.nodes:
        role = f' role="{n.role.value}"' if n.role else ""
        lines.append(f"  {n.name} [{role.strip()}];" if role else f"  {n.name};")
    for a, b in cg.link_names():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- signings --------------------------------------------------------------

def _pair(p: tuple[int, int]) -> str:
    return f"{p[0]}{p[1]}"


def signings_to_json(entries: Sequence[SigningEntry]) -> list[dict]:
    out = []
    for e in entries:
        s = e.signing
        out.append({
            "variant": e.label,
            "pair": str(e.pair),
            "labels": s.labels(),
            "colors": {v: LABEL_COLORS[x] for v, x in s.labels().items()},
            "signing": {k: _pair(p) for k, p in s.as_dict().items()},
            "free_edges": {k: {a: _pair(p) for a, p in d.items()}
                           for k, d in free_edge_resolutions(s).as_dict().items()},
        })
    return out


def signings_to_csv(entries: Sequence[SigningEntry]) -> str:
    """One row per derivation; edge cells read like ``tq=21``."""
    names = ("qm", "mn", "nq", "qt", "qp", "mc", "md")
    rows: list[list[Any]] = [["variant", *names, "tp", "cd"]]
    for e in entries:
        s = e.signing
        cells = [f"{s.arc(n[0], n[1]).name}={_pair(s.pair(n[0], n[1]))}" for n in names]
        free = free_edge_resolutions(s)
        frees = ["|".join(f"{a.name}={_pair(p)}" for a, p in both) for _, both in free.options]
        rows.append([e.label, *cells, *frees])
    return _csv(rows)
