"""Command-line front end.

Exit status: 0 on success (all checks pass), 1 when a verification check
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from . import export
from .conjugate import adjacency_matrix, restricted_line_graph
from .euler import enumerate_balanced_orientations
from .graph import GraphError
from .minimal import closed_minimal, open_minimal
from .report import verify_all
from .signing import all_signings
from .variants import enumerate_open_variants

GRAPHS = {"closed": closed_minimal, "open": open_minimal}


class UsageError(Exception):
    pass


def _graph(target: str, fmt: str) -> str:
    g = GRAPHS[target]()
    if fmt == "dot":
        return export.graph_to_dot(g)
    return export.dumps(export.graph_to_json(g))


def _variants(fmt: str) -> str:
    vs = enumerate_open_variants(open_minimal())
    if fmt == "csv":
        return export.variants_to_csv(vs)
    return export.dumps({"count": len(vs), "variants": export.variants_to_json(vs)})


def _conjugate(fmt: str) -> str:
    cg = restricted_line_graph(open_minimal(), {"q", "m"})
    if fmt == "matrix":
        return adjacency_matrix(cg).to_text()
    if fmt == "dot":
        return export.conjugate_to_dot(cg)
    return export.dumps(export.conjugate_to_json(cg))


def _signings(fmt: str) -> str:
    entries = all_signings()
    if fmt == "csv":
        return export.signings_to_csv(entries)
    return export.dumps({"count": len(entries), "signings": export.signings_to_json(entries)})


# export target -> (allowed formats, renderer)
EXPORTS: dict[str, tuple[tuple[str, ...], Callable[[str], str]]] = {
    "closed": (("json", "dot"), lambda f: _graph("closed", f)),
    "open": (("json", "dot"), lambda f: _graph("open", f)),
    "conjugate": (("dot", "json", "matrix"), _conjugate),
    "variants": (("json", "csv"), _variants),
    "signings": (("csv", "json"), _signings),
}
COMMAND_TARGETS = {"open-variants": "variants", "conjugate": "conjugate", "signings": "signings"}


def _euler_variants(graph: str, pins: Sequence[str], fmt: str) -> str:
    g = GRAPHS[graph]()
    try:
        orients = enumerate_balanced_orientations(g, pins)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if fmt == "csv":
        return export.orientations_to_csv(g, orients)
    if fmt == "dot":
        return export.orientations_to_dot(orients)
    return export.dumps({
        "graph": graph,
        "pins": list(pins),
        "count": len(orients),
        "orientations": export.orientations_to_json(orients),
    })


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialgraphs",
        description="Enumerate and verify the minimal partial graphs of a conjugated triangulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, formats: Sequence[str], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default="-", help="output path (default: stdout)")
        return p

    add("hmin-closed", ("json", "dot"), "closed minimal graph")
    add("hmin-open", ("json", "dot"), "open minimal graph")
    p = add("euler-variants", ("json", "dot", "csv"), "balanced orientations")
    p.add_argument("--graph", choices=tuple(GRAPHS), default="closed")
    p.add_argument("--pin", action="append", default=[],
                   help="fixed direction, 'f>a' (tail>head) or 'fa>f' (edge>tail)")
    add("open-variants", ("json", "csv"), "the nine open-graph variants")
    add("conjugate", ("dot", "json", "matrix"), "conjugate graph of the cut-point edges")
    add("signings", ("csv", "json"), "the 16 constrained signings")
    add("verify-all", ("text", "json"), "run every check and report")
    p = add("export", ("json", "dot", "csv", "matrix"), "write any target in any supported format")
    p.add_argument("target", choices=tuple(EXPORTS))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-all":
            report = verify_all()
            if args.format == "json":
                text = export.dumps(report.to_json())
            else:
                color = args.out == "-" and sys.stdout.isatty() and "NO_COLOR" not in os.environ
                text = report.render(color=color)
            _write(text, args.out)
            return 0 if report.passed else 1
        if args.command == "euler-variants":
            text = _euler_variants(args.graph, args.pin, args.format)
        elif args.command == "export":
            formats, render = EXPORTS[args.target]
            if args.format not in formats:
                raise UsageError(f"{args.target} cannot be exported as {args.format}; "
                                 f"choose from {', '.join(formats)}")
            text = render(args.format)
        elif args.command in ("hmin-closed", "hmin-open"):
            text = _graph(args.command.removeprefix("hmin-"), args.format)
        else:
            text = EXPORTS[COMMAND_TARGETS[args.command]][1](args.format)
        _write(text, args.out)
    except UsageError as exc:
        print(f"partialgraphs: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
