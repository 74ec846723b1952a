"""Command-line interface.

All subcommands emit JSON on stdout (pass --pretty for indentation).  Domain
errors exit 1 with a JSON error object; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .basis import build_delta, pi_system, weight_index_sets
from .classify import basis_for, classify, orbit_table, reachable
from .core import CapExceededError, PuzzleError, format_config, parse_config, parse_graph
from .forms import forms_report
from .oracle import find_witness, oracle_cap, sweep


def _graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True,
                   help="graph spec, e.g. 'n=4 attach=3' or '{\"n\":4,\"attach\":[3]}'")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")


def _cmd_pi(args) -> dict:
    g = parse_graph(args.graph)
    p = pi_system(g)
    b = build_delta(p)
    sets = weight_index_sets(p)
    return {
        "n": g.n,
        "attach": list(g.attach),
        "pi": [format_config(v, g.n) for v in p.pi],
        "pi0": sorted(p.pi0),
        "pi1": sorted(p.pi1),
        "pi1_size": p.pi1_size,
        "delta_labels": list(b.labels),
        "delta": [format_config(v, g.n) for v in b.vectors],
        "I": sorted(sets.I),
        "J": sorted(sets.J) if sets.J is not None else None,
    }


def _cmd_classify(args) -> dict:
    g = parse_graph(args.graph)
    u = parse_config(args.config, g.n)
    b = basis_for(g)
    label = classify(b, u)
    return {
        "config": format_config(u, g.n),
        "side": label.side,
        "weights": list(label.weights),
        "trivial": label.trivial,
        "sw": b.sw(u),
    }


def _cmd_reach(args) -> dict:
    g = parse_graph(args.graph)
    u = parse_config(args.from_, g.n)
    v = parse_config(args.to, g.n)
    out: dict = {"reachable": reachable(g, u, v), "witness": None, "distance": None}
    if args.witness and out["reachable"]:
        try:
            moves = find_witness(g, u, v)
        except CapExceededError:
            out["note"] = f"witness unavailable: n={g.n} exceeds the oracle cap {oracle_cap()}"
        else:
            out["witness"] = moves
            out["distance"] = len(moves)
    return out


def _cmd_solve(args) -> dict:
    g = parse_graph(args.graph)
    u = parse_config(args.from_, g.n)
    v = parse_config(args.to, g.n)
    if not reachable(g, u, v):
        return {"reachable": False, "moves": None, "distance": None}
    moves = find_witness(g, u, v)
    if moves is None:
        raise RuntimeError("classifier says reachable but BFS found no path")
    return {"reachable": True, "moves": moves, "distance": len(moves)}


def _cmd_orbits(args) -> dict:
    g = parse_graph(args.graph)
    out = {"n": g.n, "attach": list(g.attach)}
    out.update(orbit_table(g).to_json())
    return out


def _cmd_verify(args) -> dict:
    report = sweep(args.nmax, jobs=args.jobs)
    if args.per_graph:
        for r in report.reports:
            print(json.dumps(r.to_json()))
    return report.to_json()


def _cmd_forms(args) -> dict:
    g = parse_graph(args.graph)
    return forms_report(g).to_json()


def _cmd_serve(args) -> None:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(ui_dir=args.ui_dir), host=args.host, port=args.port)
    return None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="litflip",
                                 description="flipping-puzzle engine: basis, orbits, witnesses")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="the Pi vectors, their split, the simple basis, and I/J")
    _graph_arg(p)
    _common(p)
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("classify", help="orbit label of one configuration")
    _graph_arg(p)
    p.add_argument("--config", required=True, help="bitstring, leftmost = s_1")
    _common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("reach", help="decide reachability; optionally produce a witness")
    _graph_arg(p)
    p.add_argument("--from", dest="from_", required=True, metavar="CONFIG")
    p.add_argument("--to", required=True, metavar="CONFIG")
    p.add_argument("--witness", action="store_true",
                   help="also search for a shortest move sequence (n-capped)")
    _common(p)
    p.set_defaults(handler=_cmd_reach)

    p = sub.add_parser("solve", help="shortest move sequence between two configurations")
    _graph_arg(p)
    p.add_argument("--from", dest="from_", required=True, metavar="CONFIG")
    p.add_argument("--to", required=True, metavar="CONFIG")
    _common(p)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("orbits", help="full orbit table with sizes and min weights")
    _graph_arg(p)
    _common(p)
    p.set_defaults(handler=_cmd_orbits)

    p = sub.add_parser("verify", help="exhaustive check of predictions against BFS")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--per-graph", action="store_true", help="emit one JSON line per graph")
    _common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("forms", help="adjacency-form checks and transpose-orbit comparison")
    _graph_arg(p)
    _common(p)
    p.set_defaults(handler=_cmd_forms)

    p = sub.add_parser("serve", help="run the HTTP API (and UI, when built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui-dir", default=None, help="directory of built UI assets")
    _common(p)
    p.set_defaults(handler=_cmd_serve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except PuzzleError as exc:
        print(json.dumps({"error": {"code": exc.code, "message": str(exc)}}), file=sys.stderr)
        return 1
    if out is not None:
        print(json.dumps(out, indent=2 if args.pretty else None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
