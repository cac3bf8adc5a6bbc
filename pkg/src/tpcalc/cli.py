"""Command-line front end.

Exit codes: 0 success or equivalent, 1 distinct (or failing axioms),
2 user error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import semiring as sr
from .axioms import fuzz, negative_controls
from .colors import dim, enum, format_name
from .decision import equiv, normalize, synthesize, synthesize_full
from .diagram import fmt_obj
from .errors import InternalError, TpcError
from .semantics import SemMatrix, eval, eval_full
from .textio import export_dot, parse_diagram, parse_obj, render_program, semiring_pragma

EXIT_OK, EXIT_DISTINCT, EXIT_USER, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, semiring: Optional[str]):
    text = _read(path)
    tag = semiring or semiring_pragma(text)
    return parse_diagram(text, tag), tag


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("TPCALC_SEED")
    if env is None:
        return 42
    try:
        return int(env)
    except ValueError:
        raise TpcError(f"TPCALC_SEED must be an integer, got {env!r}") from None


def _full(d, fragment: str) -> bool:
    if fragment == "functional" and not d.functional:
        raise TpcError("functional semantics requested for a diagram that uses unit")
    return fragment == "full" or (fragment == "auto" and not d.functional)


def cmd_eval(args) -> int:
    d, tag = _load(args.file, args.semiring)
    m = eval_full(d, tag) if _full(d, args.fragment) else eval(d, tag)
    print(json.dumps(m.to_json()) if args.format == "json" else m.format_text())
    return EXIT_OK


def cmd_equiv(args) -> int:
    d, tag_d = _load(args.left, args.semiring)
    e, tag_e = _load(args.right, args.semiring)
    tag = args.semiring or tag_d or tag_e
    v = equiv(d, e, tag, fragment=args.fragment)
    if args.format == "json":
        print(json.dumps({"equivalent": v.equivalent, "semiring": v.tag, "row": v.row_name or None,
                          "col": v.col_name or None,
                          "left": None if v.equivalent else sr.get(v.tag).format(v.left),
                          "right": None if v.equivalent else sr.get(v.tag).format(v.right)}))
    else:
        print(v.describe())
    return EXIT_OK if v.equivalent else EXIT_DISTINCT


def cmd_normalize(args) -> int:
    d, tag = _load(args.file, args.semiring)
    nf = normalize(d, tag)
    sys.stdout.write(render_program(nf.diagram, nf.matrix.tag))
    return EXIT_OK


def cmd_synth(args) -> int:
    m = SemMatrix.from_json(_read(args.matrix))
    dom, cod = parse_obj(args.dom), parse_obj(args.cod)
    nf = synthesize_full(m, dom, cod) if args.full else synthesize(m, dom, cod)
    sys.stdout.write(render_program(nf.diagram, m.tag))
    return EXIT_OK


def cmd_axioms(args) -> int:
    tags = [t.strip() for t in args.semirings.split(",") if t.strip()]
    for t in tags:
        if not sr.get(t).exact:
            raise TpcError(f"{t} has no decidable equality; soundness checks need exact semirings")
    report = fuzz(_seed(args), args.iters, args.depth, tags)
    controls = negative_controls("nat")
    controls_ok = not any(c.passed for c in controls)
    if args.format == "json":
        data = json.loads(report.to_json())
        data["negative_controls"] = [{"label": c.label, "distinct": not c.passed} for c in controls]
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print(report.format_table())
        for c in controls:
            print(f"control {c.label}: {'distinct' if not c.passed else 'NOT distinct'}")
    return EXIT_OK if report.ok and controls_ok else EXIT_DISTINCT


def cmd_render(args) -> int:
    d, _ = _load(args.file, args.semiring)
    sys.stdout.write(export_dot(d))
    return EXIT_OK


def cmd_dims(args) -> int:
    x = parse_obj(args.obj)
    names = [format_name(x, n) for n in enum(x)]
    if args.format == "json":
        print(json.dumps({"object": fmt_obj(x), "dim": dim(x), "basis": names}))
    else:
        print(dim(x))
        for n in names:
            print(n)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", choices=sorted(sr.REGISTRY), default=None)
    common.add_argument("--fragment", choices=["functional", "full", "auto"], default="auto")
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="tpcalc", description="Tensor-plus diagram calculus toolkit.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("eval", parents=[common], help="print the matrix semantics of a .tpc file")
    s.add_argument("file")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("equiv", parents=[common], help="decide whether two diagrams are equal")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("normalize", parents=[common], help="print the normal form")
    s.add_argument("file")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("synth", parents=[common], help="diagram realizing a JSON matrix")
    s.add_argument("matrix")
    s.add_argument("--dom", required=True)
    s.add_argument("--cod", required=True)
    s.add_argument("--full", action="store_true", help="matrix includes the empty row and column")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("axioms", parents=[common], help="fuzz the axiom catalog")
    s.add_argument("--iters", type=int, default=50)
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--semirings", default="bool,nat,q")
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("render", parents=[common], help="Graphviz DOT output")
    s.add_argument("file")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("dims", parents=[common], help="dimension and basis of an object")
    s.add_argument("obj")
    s.set_defaults(func=cmd_dims)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USER
    try:
        return args.func(args)
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TpcError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
