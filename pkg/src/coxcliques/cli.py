"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a maximal 2-clique that
fits no template.  Errors are a single ``error: ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .cayley import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ball_to_dot,
    ball_to_json,
    full_group,
    generate_ball,
    halfgraph_to_dot,
    halfgraph_to_json,
    parity_split,
)
from .cliques import (
    ROMAN,
    ClassifiedClique,
    TAG_ORDER,
    TheoremViolation,
    classify_clique,
    clique_from_json,
    clique_to_json,
    enumerate_maximal_2cliques,
    is_two_clique,
)
from .coxeter import PRESET_HELP, CoxeterError, CoxeterSystem, distance, parse_diagram, parse_preset
from .halfauto import (
    NotExtendable,
    compose,
    diagram_automorphism,
    extend_half_automorphism,
    map_to_json,
    right_multiplication,
    type_breaking_witness,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_group(source: str) -> CoxeterSystem:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_diagram(fh.read(), name=os.path.basename(source))
    return parse_preset(source)


def _dump(data, out: TextIO) -> None:
    out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def _scope(args) -> dict:
    if args.radius is None:
        return {"kind": "full"}
    return {"kind": "ball", "radius": args.radius}


def cmd_presets(args, out):
    if args.format == "json":
        _dump([{"name": n, "description": d} for n, d in PRESET_HELP], out)
        return 0
    width = max(len(n) for n, _ in PRESET_HELP)
    for n, d in PRESET_HELP:
        out.write(f"{n.ljust(width)}  {d}\n")
    return 0


def cmd_ball(args, out):
    W = load_group(args.group)
    if args.radius is None:
        ball = full_group(W, args.budget)
    else:
        center = W.parse_word(args.center)
        ball = generate_ball(W, center, args.radius, args.budget)
    if args.format == "json":
        _dump(ball_to_json(ball), out)
    elif args.format == "dot":
        out.write(ball_to_dot(ball))
    else:
        out.write(f"group: {W.name}\n")
        out.write(f"center: {W.format_word(ball.center.word)}\n")
        out.write(f"radius: {ball.radius}\n")
        out.write(f"vertices: {len(ball)}\n")
        out.write(f"edges: {len(ball.edges())}\n")
        out.write(f"whole group: {str(ball.complete).lower()}\n")
        for v in ball.vertices:
            out.write(f"{ball.layer[v]}\t{W.format_word(v.word)}\n")
    return 0


def _counts(W, classified) -> dict:
    counts = dict.fromkeys(TAG_ORDER, 0)
    for cc in classified:
        for tag in set(cc.tags):
            counts[tag] += 1
    return counts


def _describe(W, t) -> str:
    gens = ",".join(W.names[g] for g in t.generators)
    extra = ", degenerate" if t.degenerate else ""
    return f"{t.tag}[{ROMAN[t.tag]}](w={W.format_word(t.w.word)}; {gens}{extra})"


def cmd_cliques(args, out):
    W = load_group(args.group)
    classified = enumerate_maximal_2cliques(W, args.radius, args.budget)
    if args.format == "json":
        _dump({
            "group": W.name,
            "generators": list(W.names),
            "scope": _scope(args),
            "counts": _counts(W, classified),
            "cliques": [clique_to_json(W, cc) for cc in classified],
        }, out)
        return 0
    for cc in classified:
        members = ", ".join(W.format_word(m.word) for m in cc.clique.members)
        out.write(f"{{{members}}}\t" + " ".join(_describe(W, t) for t in cc.types) + "\n")
    return 0


def cmd_verify(args, out):
    W = load_group(args.group)
    if args.from_json:
        return _verify_json(W, args, out)
    classified = enumerate_maximal_2cliques(W, args.radius, args.budget)
    counts = _counts(W, classified)
    report = {
        "group": W.name,
        "rank": W.rank,
        "scope": _scope(args),
        "maximal 2-cliques": len(classified),
        "typeI": counts["S-coset"],
        "typeII": counts["commuting-triple"],
        "typeIII": counts["braid"],
        "typeI present": counts["S-coset"] > 0,
        "typeII present": counts["commuting-triple"] > 0,
        "typeIII present": counts["braid"] > 0,
        "multiply tagged": sum(1 for cc in classified if len(cc.types) > 1),
        "theorem violations": 0,
        "result": "verified",
    }
    _emit_report(report, args.format, out)
    return 0


def _verify_json(W, args, out):
    with open(args.from_json, encoding="utf-8") as fh:
        data = json.load(fh)
    mismatches = 0
    for entry in data["cliques"]:
        clique = clique_from_json(W, entry)
        if not is_two_clique(W, clique.members):
            mismatches += 1
            continue
        again = clique_to_json(W, ClassifiedClique(clique, classify_clique(W, clique)))
        if again != entry:
            mismatches += 1
    report = {
        "group": W.name,
        "cliques checked": len(data["cliques"]),
        "mismatches": mismatches,
        "result": "verified" if not mismatches else "mismatch",
    }
    _emit_report(report, args.format, out)
    return 0 if not mismatches else 1


def _emit_report(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        _dump(report, out)
        return
    for k, v in report.items():
        if isinstance(v, bool):
            v = str(v).lower()
        elif isinstance(v, dict):
            v = " ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, list):
            v = "; ".join(f"{a} -> {b}" for a, b in v)
        out.write(f"{k}: {v}\n")


def cmd_halfgraph(args, out):
    W = load_group(args.group)
    if args.extend is not None or args.witness:
        return _halfgraph_extension(W, args, out)
    ball = full_group(W, args.budget) if args.radius is None else generate_ball(W, radius=args.radius, budget=args.budget)
    half = parity_split(ball)[args.parity - 1]
    if args.format == "json":
        _dump(halfgraph_to_json(half), out)
    elif args.format == "dot":
        out.write(halfgraph_to_dot(half))
    else:
        out.write(f"group: {W.name}\nparity: {half.parity}\n")
        out.write(f"vertices: {len(half.vertices)}\nedges: {len(half.edges)}\n")
        for a, b in half.edges:
            out.write(f"{W.format_word(a.word)}\t{W.format_word(b.word)}\n")
    return 0


def _halfgraph_extension(W, args, out):
    group = full_group(W, args.budget)
    if args.witness:
        f = type_breaking_witness(W, args.parity, group)
        report = {"group": W.name, "parity": args.parity, "witness": map_to_json(W, f.mapping)}
        try:
            extend_half_automorphism(W, f, group, enforce_rank=False)
            report["extendable"] = True
        except NotExtendable as exc:
            report["extendable"] = False
            report["reason"] = str(exc)
        _emit_report(report, args.format, out)
        return 0
    w = W.parse_word(args.extend)
    auto = right_multiplication(W, w, group)
    if args.diagram:
        perm = [int(x) - 1 for x in args.diagram.split()]
        auto = compose(diagram_automorphism(W, perm, group), auto)
    half = auto.restrict(args.parity)
    ext = extend_half_automorphism(W, half, group)
    report = {
        "group": W.name,
        "parity": args.parity,
        "automorphism": f"R_{W.format_word(w.word)}" + (f" then diagram {args.diagram}" if args.diagram else ""),
        "restricted vertices": len(half.mapping),
        "extension equals original": ext.same_map(auto),
    }
    if args.format == "json":
        report["extension"] = map_to_json(W, ext.mapping)
    _emit_report(report, args.format, out)
    return 0


def cmd_distance(args, out):
    W = load_group(args.group)
    a, b = W.parse_word(args.source), W.parse_word(args.target)
    d = distance(W, a, b)
    if args.format == "json":
        _dump({"group": W.name, "from": W.format_word(a.word), "to": W.format_word(b.word), "distance": d}, out)
    else:
        out.write(f"{d}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coxcliques", description="Coxeter group Cayley graphs and their maximal 2-cliques.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json"), radius=True):
        sp.add_argument("--group", required=True, help="preset name or diagram file")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of vertices")
        sp.add_argument("--format", choices=formats, default=formats[0])
        if radius:
            sp.add_argument("--radius", type=int, default=None, help="ball radius (default: whole finite group)")

    sp = sub.add_parser("presets", help="list preset names")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_presets)

    sp = sub.add_parser("ball", help="export a Cayley ball")
    common(sp, ("text", "json", "dot"))
    sp.add_argument("--center", default="e", help="center word (space-separated names)")
    sp.set_defaults(func=cmd_ball)

    sp = sub.add_parser("cliques", help="list classified maximal 2-cliques")
    common(sp)
    sp.set_defaults(func=cmd_cliques)

    sp = sub.add_parser("verify", help="check that every maximal 2-clique is of type I, II or III")
    common(sp)
    sp.add_argument("--from-json", default=None, help="re-verify a saved 'cliques --format json' output")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("halfgraph", help="export a half-graph or check automorphism extension")
    common(sp, ("text", "json", "dot"))
    sp.add_argument("--parity", type=int, choices=(1, 2), default=1)
    sp.add_argument("--extend", default=None, metavar="WORD",
                    help="extend the restriction of R_WORD (W must be finite, |S| >= 5)")
    sp.add_argument("--diagram", default=None, metavar="PERM",
                    help="compose with a diagram automorphism, 1-based images, e.g. '5 4 3 2 1'")
    sp.add_argument("--witness", action="store_true",
                    help="search a small half-graph for an automorphism that does not extend")
    sp.set_defaults(func=cmd_halfgraph)

    sp = sub.add_parser("distance", help="Cayley distance between two words")
    common(sp, radius=False)
    sp.add_argument("source")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_distance)
    return p


def _validate(args) -> None:
    if getattr(args, "radius", None) is not None and args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    if getattr(args, "budget", 1) < 1:
        raise UsageError("--budget must be at least 1")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        return args.func(args, out)
    except TheoremViolation as exc:
        err.write(f"theorem-violation: {exc}\n")
        return 2
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return 1
    except (CoxeterError, BudgetExceeded, NotExtendable, OSError, ValueError, KeyError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main() -> None:
    raise SystemExit(run())
