"""``naka-tau`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .algebra import (
    NAMED,
    Algebra,
    Pair,
    format_list,
    format_pair,
    format_signed,
    is_tau_rigid_module,
    load_algebra,
    named_algebra,
    parse_list,
)
from .errors import DomainError, NotRigid

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _algebra(args) -> Algebra:
    if not getattr(args, "algebra", None):
        raise UsageError("this command needs --algebra (a name, a JSON file or inline JSON)")
    return load_algebra(args.algebra)


def _texts(A: Algebra, items) -> list:
    return [format_signed(A, x) for x in items]


def _rigid_pair(A: Algebra, text: str) -> Pair:
    from .algebra import is_tau_rigid_pair

    items = parse_list(A, text)
    pair = Pair.from_signed(items)
    if len(pair) != len(items) or not is_tau_rigid_pair(A, pair):
        raise NotRigid(f"not a basic tau-rigid pair: {text!r}")
    return pair


# --- verbs ------------------------------------------------------------------


def cmd_algebra(args) -> int:
    if args.action == "list":
        rows = {name: named_algebra(name).to_dict() for name in sorted(NAMED)}
        text = "\n".join(f"{name}: {json.dumps(data)}" for name, data in rows.items())
        _emit(args, rows, text)
        return EXIT_OK
    A = _algebra(args)
    mods = A.indecomposables()
    payload = {
        "valid": True,
        "algebra": A.to_dict(),
        "rank": A.rank,
        "modules": len(mods),
        "tau_rigid": sum(1 for m in mods if is_tau_rigid_module(A, m)),
    }
    text = f"valid: true\nrank: {A.rank}\nmodules: {len(mods)}\ntau-rigid modules: {payload['tau_rigid']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_complete(args) -> int:
    from .tilting import bongartz, cobongartz

    A = _algebra(args)
    pair = _rigid_pair(A, args.pair)
    out = (bongartz if args.kind == "bongartz" else cobongartz)(A, pair)
    added = [x for x in out.summands() if x not in pair]
    payload = {"completion": args.kind, "pair": _texts(A, out.summands()), "added": _texts(A, added)}
    _emit(args, payload, f"{args.kind}: {format_pair(A, out)}\nadded: {format_list(A, added)}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    from .reduction import jasso

    A = _algebra(args)
    W = jasso(A, _rigid_pair(A, args.pair))
    rel = [format_signed(A, m) for m in W.rel_projectives]
    payload = {"gamma": W.gamma.to_dict(), "rel_projectives": rel}
    _emit(args, payload, f"gamma: {W.gamma.to_json()}\nrel_projectives: {', '.join(rel)}")
    return EXIT_OK


def cmd_psi(args) -> int:
    from .sequences import psi

    A = _algebra(args)
    seq = psi(A, parse_list(A, args.order))
    _emit(args, {"sequence": _texts(A, seq)}, format_list(A, seq))
    return EXIT_OK


def cmd_psi_inv(args) -> int:
    from .sequences import psi_inverse

    A = _algebra(args)
    order = psi_inverse(A, parse_list(A, args.sequence))
    _emit(args, {"order": _texts(A, order)}, format_list(A, order))
    return EXIT_OK


def _position(args, entries) -> int:
    return args.pos if args.pos is not None else len(entries) - 1


def cmd_mutate(args) -> int:
    from .mutation import mutate_at, mutation_case

    A = _algebra(args)
    entries = parse_list(A, args.order)
    i = _position(args, entries)
    out = mutate_at(A, entries, i)
    case = mutation_case(A, entries, i)
    payload = {"position": i, "case": case, "result": _texts(A, out)}
    _emit(args, payload, f"case: {case}\nresult: {format_list(A, out)}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    from .mutation import mutation_case, orbit

    A = _algebra(args)
    entries = parse_list(A, args.order)
    i = _position(args, entries)
    steps = [(T, mutation_case(A, T, i)) for T in orbit(A, entries, i)]
    payload = {"position": i, "length": len(steps), "orbit": [{"order": _texts(A, T), "case": c} for T, c in steps]}
    lines = [f"{c}: {format_list(A, T)}" for T, c in steps]
    _emit(args, payload, "\n".join(lines + [f"length: {len(steps)}"]))
    return EXIT_OK


def _graph_data(A: Algebra, kind: str) -> dict:
    if kind == "stautilt":
        from .tilting import enumerate_stautilt

        ex = enumerate_stautilt(A)
        nodes = [_texts(A, T.summands()) for T in ex.nodes]
        edges = [{"from": a, "to": b, "exchanged": format_signed(A, x)} for a, b, x in ex.edges]
    else:
        from .mutation import mutation_graph

        G = mutation_graph(A).graph
        order = sorted(G.nodes)
        pos = {T: k for k, T in enumerate(order)}
        nodes = [_texts(A, T) for T in order]
        edges = [
            {"from": pos[u], "to": pos[v], "position": G.edges[u, v]["position"]}
            for u in order for v in sorted(G.successors(u), key=pos.get)
        ]
    edges.sort(key=lambda e: (e["from"], e["to"]))
    return {"nodes": nodes, "edges": edges}


def _to_dot(data: dict, kind: str) -> str:
    lines = [f"digraph {kind} {{"]
    for k, node in enumerate(data["nodes"]):
        label = ", ".join(node).replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for e in data["edges"]:
        label = e.get("exchanged", e.get("position"))
        lines.append(f'  n{e["from"]} -> n{e["to"]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_graph(args) -> int:
    A = _algebra(args)
    data = _graph_data(A, args.kind)
    if args.json or args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(_to_dot(data, args.kind))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    algebras = [load_algebra(args.algebra)] if args.algebra else None
    rep = run_suite(args.suite, algebras)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(f"{rep.name}: {'pass' if rep.passed else 'fail'} ({rep.checked} checks)")
        shown = {k: v for k, v in rep.details.items() if not isinstance(v, (dict, list))}
        if shown:
            print(", ".join(f"{k}: {json.dumps(v)}" for k, v in shown.items()))
        for k, v in rep.details.items():
            if isinstance(v, (dict, list)):
                print(f"{k}: {json.dumps(v)}")
        for f in rep.failures:
            print(f"counterexample: {f}")
    return EXIT_OK if rep.passed else EXIT_DOMAIN


def cmd_draw(args) -> int:
    from .disk import diagram_of, render
    from .tilting import bongartz, cobongartz

    A = _algebra(args)
    pair = _rigid_pair(A, args.pair) if args.pair else Pair()
    if args.complete:
        pair = (bongartz if args.complete == "bongartz" else cobongartz)(A, pair)
    out = render(diagram_of(A, pair, decorative=True), args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
        if args.json:
            print(json.dumps({"written": args.output, "pair": _texts(A, pair.summands())}))
    else:
        sys.stdout.write(out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default=argparse.SUPPRESS, help="built-in name, JSON file, or inline JSON")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="naka-tau", description="tau-tilting combinatorics of Nakayama algebras")
    parser.add_argument("--algebra", default=None, help="built-in name, JSON file, or inline JSON")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("algebra", parents=[common], help="validate an algebra or list built-ins")
    p.add_argument("action", choices=["validate", "list"])
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("complete", parents=[common], help="Bongartz or co-Bongartz completion")
    p.add_argument("kind", choices=["bongartz", "cobongartz"])
    p.add_argument("--pair", required=True, help='comma-separated summands, e.g. "m:0:1:2,p:0:3[1]"')
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("reduce", parents=[common], help="tau-perpendicular reduction")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("psi", parents=[common], help="ordered pair to signed exceptional sequence")
    p.add_argument("--order", required=True)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("psi-inv", parents=[common], help="signed exceptional sequence to ordered pair")
    p.add_argument("--sequence", required=True)
    p.set_defaults(func=cmd_psi_inv)

    for name, func, desc in (("mutate", cmd_mutate, "mutate a TF-ordered module once"),
                             ("orbit", cmd_orbit, "full mutation orbit at one position")):
        p = sub.add_parser(name, parents=[common], help=desc)
        p.add_argument("--order", required=True)
        p.add_argument("--pos", type=int, default=None, help="1-based position (default: last pair)")
        p.set_defaults(func=func)

    p = sub.add_parser("graph", parents=[common], help="export the exchange or mutation graph")
    p.add_argument("--kind", choices=["stautilt", "tf"], default="stautilt")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    from .verify import SUITES

    p = sub.add_parser("verify", parents=[common], help="run a consistency suite")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("draw", parents=[common], help="draw a pair in the disk model")
    p.add_argument("--pair", default="")
    p.add_argument("--complete", choices=["bongartz", "cobongartz"])
    p.add_argument("--format", choices=["svg", "tikz"], default="svg")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_draw)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"naka-tau: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"naka-tau: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
