"""Command-line interface.

Exit codes: 0 for a positive answer, 1 for a verified negative answer (with a
JSON certificate on stdout), 2 for bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .coloring import PreconditionError, diagonal_coloring, mv_to_coloring, standard_coloring
from .completion import complete_partial
from .constructions import domino_forcing_standard, greedy_forcing
from .controlling import is_controlling, uncontrolled_component
from .core import GridSize
from .digraph import is_forcing
from .fas import branch_and_bound_fas, lp_fas
from .instance import (
    InstanceDocument,
    InstanceError,
    parse_crease_set,
    parse_instance,
    serialize_crease_set,
    serialize_instance,
)
from .min_forcing import min_forcing_set
from .oracle import SizeGuardError, enumerate_colorings
from .render import RenderConfig, render_ascii, render_svg
from .sampling import random_coloring

SOLVERS = {"lp": lp_fas, "bb": branch_and_bound_fas}


class UsageError(Exception):
    pass


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _size(args) -> GridSize:
    if args.rows is None or args.cols is None:
        raise UsageError("--rows and --cols are required")
    try:
        return GridSize.of(args.rows, args.cols)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _coloring(doc: InstanceDocument):
    K = doc.grid_coloring()
    if K is not None:
        return K
    a = doc.assignment()
    if not a.is_total:
        raise UsageError("instance needs a coloring or a complete crease assignment")
    return mv_to_coloring(a)


def cmd_gen(args) -> tuple[int, str]:
    size = _size(args)
    if args.standard:
        K = standard_coloring(size)
    elif args.diagonal:
        K = diagonal_coloring(size)
    else:
        K = random_coloring(size, args.seed)
    doc = InstanceDocument.from_coloring(K)
    return 0, _render_doc(doc, args.format, args)


def cmd_min_forcing(args) -> tuple[int, str]:
    doc = parse_instance(_read(args.input))
    F = min_forcing_set(_coloring(doc), SOLVERS[args.solver])
    return 0, serialize_crease_set(doc.size, F)


def cmd_greedy(args) -> tuple[int, str]:
    doc = parse_instance(_read(args.input))
    return 0, serialize_crease_set(doc.size, greedy_forcing(_coloring(doc)))


def cmd_domino(args) -> tuple[int, str]:
    size = _size(args)
    return 0, serialize_crease_set(size, domino_forcing_standard(size))


def cmd_verify(args) -> tuple[int, str]:
    doc = parse_instance(_read(args.input))
    with open(args.forcing_set, encoding="utf-8") as fh:
        F = parse_crease_set(fh.read(), doc.size)
    ok, witness = is_forcing(_coloring(doc), F)
    if ok:
        return 0, json.dumps({"forcing": True}) + "\n"
    cycle = [{"kind": e.kind.lower(), "r": e.r, "c": e.c} for e in witness]
    return 1, json.dumps({"forcing": False, "witness_cycle": cycle}, separators=(",", ":")) + "\n"


def cmd_complete(args) -> tuple[int, str]:
    doc = parse_instance(_read(args.input))
    out = complete_partial(doc.assignment())
    if out:
        return 0, serialize_instance(InstanceDocument.from_assignment(out))
    cert = {
        "feasible": False,
        "nodes": [list(v) for v in out.nodes],
        "includes_outer": out.outer,
        "excess": out.excess,
    }
    return 1, json.dumps(cert, separators=(",", ":")) + "\n"


def cmd_controlling(args) -> tuple[int, str]:
    if args.rows is not None or args.cols is not None:
        size = _size(args)
    else:
        size = parse_instance(_read(args.input)).size
    with open(args.forcing_set, encoding="utf-8") as fh:
        F = parse_crease_set(fh.read(), size)
    if is_controlling(size, F):
        return 0, json.dumps({"controlling": True}) + "\n"
    comp = uncontrolled_component(size, F)
    cert = {"controlling": False, "component": [list(c) for c in comp]}
    return 1, json.dumps(cert, separators=(",", ":")) + "\n"


def cmd_enumerate(args) -> tuple[int, str]:
    size = _size(args)
    colorings = [K.to_lists() for K in enumerate_colorings(size, allow_large=args.allow_large)]
    obj = {"rows": size.rows, "cols": size.cols, "count": len(colorings), "colorings": colorings}
    return 0, json.dumps(obj, separators=(",", ":")) + "\n"


def _render_doc(doc: InstanceDocument, fmt: str, args) -> str:
    if fmt == "json":
        return serialize_instance(doc)
    if fmt == "ascii":
        return render_ascii(doc.assignment())
    try:
        cfg = RenderConfig(alpha=args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return render_svg(doc.assignment(), cfg)


def cmd_render(args) -> tuple[int, str]:
    doc = parse_instance(_read(args.input))
    return 0, _render_doc(doc, args.format, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="miura-forcing", description="Forcing sets for Miura-ori crease patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, size=False, inp=False, fs=False, fmt=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if size:
            p.add_argument("--rows", type=int)
            p.add_argument("--cols", type=int)
        if inp:
            p.add_argument("--input", metavar="FILE", help="instance JSON (default: stdin)")
        if fs:
            p.add_argument("--forcing-set", metavar="FILE", required=True, help="crease set JSON")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
            p.add_argument("--alpha", type=float, default=RenderConfig.alpha, help="acute cell angle (degrees)")
        p.add_argument("--output", metavar="FILE", help="write here instead of stdout")
        return p

    g = add("gen", cmd_gen, "generate an instance", size=True, fmt=("json", "ascii", "svg"))
    kind = g.add_mutually_exclusive_group()
    kind.add_argument("--standard", action="store_true", help="the standard Miura-ori assignment")
    kind.add_argument("--diagonal", action="store_true", help="diagonal-stripe coloring")
    g.add_argument("--seed", type=int, default=0, help="seed for a random assignment")
    p = add("min-forcing", cmd_min_forcing, "exact minimum forcing set", inp=True)
    p.add_argument("--solver", choices=sorted(SOLVERS), default="lp")
    add("verify", cmd_verify, "check a forcing set", inp=True, fs=True)
    add("greedy", cmd_greedy, "greedy forcing set of size ceil(mn/2)", inp=True)
    add("domino", cmd_domino, "domino forcing set for the standard assignment", size=True)
    add("complete", cmd_complete, "complete a partial assignment", inp=True)
    add("controlling", cmd_controlling, "check a controlling set", size=True, inp=True, fs=True)
    e = add("enumerate", cmd_enumerate, "list every valid coloring", size=True)
    e.add_argument("--allow-large", action="store_true", help="lift the size guard")
    add("render", cmd_render, "draw an instance", inp=True, fmt=("ascii", "svg", "json"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (InstanceError, UsageError, PreconditionError, SizeGuardError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
