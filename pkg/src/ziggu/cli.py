"""Command-line front door.

Subcommands: list, rank, unrank, next, prev, compare, solve, moves, graph,
nurikabe (count | map | grids), verify, serve.  States are positional
arguments in the usual text form (leftmost digit first).  Exit codes:
0 success, 1 domain error (invalid state, rank out of range, ...),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import codes, loopless, nurikabe, oracle, ranking, rulers, state, stepper
from .codes import ListingKind
from .state import IllegalMoveError, InvalidStateError, Move

__all__ = ["main", "run"]

KINDS = ("brgc", "quat", "long", "short")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ziggu",
        description="Ziggu and Gray-code puzzle engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="print a listing in order")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("rank", help="0-based position of a state in a listing")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("state")

    p = sub.add_parser("unrank", help="state at a given position of a listing")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("rank", type=int)

    p = sub.add_parser("next", help="successor of a state in a listing")
    p.add_argument("--kind", choices=("quat", "long", "short"), required=True)
    p.add_argument("state")

    p = sub.add_parser("prev", help="predecessor of a state in a listing")
    p.add_argument("--kind", choices=("quat", "long", "short"), required=True)
    p.add_argument("state")

    p = sub.add_parser("compare", help="relative order of two states")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("solve", help="moves from a state to the solved state")
    p.add_argument("--mode", choices=("shortest", "longest", "bfs"), default="shortest")
    p.add_argument("--states", action="store_true", help="also print each state")
    p.add_argument("state")

    p = sub.add_parser("moves", help="legal signed moves from a state")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("state")

    p = sub.add_parser("graph", help="export the full state graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("nurikabe", help="2 x n grid tools")
    nsub = p.add_subparsers(dest="nurikabe_command", required=True)
    q = nsub.add_parser("count", help="grid counts (total, full, with-white-column)")
    q.add_argument("--n", type=int, required=True)
    q = nsub.add_parser("map", help="grid for a shortest-solution state")
    q.add_argument("state")
    q = nsub.add_parser("grids", help="all grids, in shortest-solution order")
    q.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="recompute the cross-module equalities at size n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("serve", help="start the JSON solver service")
    p.add_argument("--addr", default=None)
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--session-dir", default=None)

    return parser


def _dump_json(obj, out) -> None:
    # deterministic output: insertion-ordered keys, no timestamps
    json.dump(obj, out, separators=(",", ":"))
    out.write("\n")


def _cmd_list(args, out) -> int:
    states = [str(s) for s in codes.iter_listing(args.kind, args.n)]
    if args.format == "json":
        _dump_json(
            {"kind": args.kind, "n": args.n, "count": len(states), "states": states},
            out,
        )
    else:
        for s in states:
            print(s, file=out)
    return 0


def _cmd_solve(args, out) -> int:
    mode = {"shortest": "shortest_list", "longest": "longest_list", "bfs": "bfs"}[
        args.mode
    ]
    q = state.parse(args.state)
    moves = stepper.solve_path(q, mode)
    print(" ".join(f"{m.delta * m.index:+d}" for m in moves), file=out)
    if args.states:
        cur = q
        print(cur, file=out)
        for m in moves:
            cur = state.apply_move(cur, m)
            print(cur, file=out)
    return 0


def _cmd_graph(args, out) -> int:
    g = oracle.build_graph(args.n)
    on_short = set(codes.iter_listing("short", args.n)) if args.n <= 12 else set()
    if args.format == "json":
        nodes = [
            {"state": str(q), "short": 1 if q in on_short else 0}
            for q in sorted(g.vertices)
        ]
        edges = []
        for q in sorted(g.vertices):
            for move, nxt in sorted(g.adjacency[q].items()):
                if q < nxt:  # one record per undirected edge
                    edges.append({"a": str(q), "b": str(nxt), "idx": move.index})
        _dump_json({"n": args.n, "nodes": nodes, "edges": edges}, out)
        return 0
    print(f"graph ziggu_{args.n} {{", file=out)
    for q in sorted(g.vertices):
        attrs = ' [short=1]' if q in on_short else ""
        print(f'  "{q}"{attrs};', file=out)
    for q in sorted(g.vertices):
        for move, nxt in sorted(g.adjacency[q].items()):
            if q < nxt:
                print(f'  "{q}" -- "{nxt}" [idx={move.index}];', file=out)
    print("}", file=out)
    return 0


def _cmd_nurikabe(args, out) -> int:
    if args.nurikabe_command == "count":
        a, b, c = nurikabe.nurikabe_counts(args.n)
        print(f"total={a} full={b} with_white_column={c}", file=out)
        return 0
    if args.nurikabe_command == "map":
        grid = nurikabe.sigma(state.parse(args.state))
        print(grid.render(), file=out)
        return 0
    for q in codes.iter_listing("short", args.n):
        print(nurikabe.sigma(q).render(), file=out)
        print(file=out)
    return 0


def _cmd_verify(args, out) -> int:
    n = args.n
    if not 2 <= n <= 10:
        raise ValueError(f"verify supports 2 <= n <= 10, got {n}")
    failures = []

    def check(name: str, ok: bool) -> None:
        print(f"  {name}: {'ok' if ok else 'FAIL'}", file=out)
        if not ok:
            failures.append(name)

    short_states = list(codes.iter_listing("short", n))
    long_states = list(codes.iter_listing("long", n))
    ns, nl = len(short_states), len(long_states)
    print(f"shortest={ns} longest={nl}", file=out)
    check("counts", ns == codes.count("short", n) == codes.recurrence_count("short", n)
          and nl == codes.count("long", n) == codes.recurrence_count("long", n))

    g = oracle.build_graph(n)
    check("bfs geodesic = shortest solution",
          oracle.bfs_path(g, "0" * n, "3" * n) == short_states)
    check("longest solution is a Hamilton path",
          oracle.is_hamilton_path(g, long_states))
    check("greedy leftmost = shortest",
          oracle.greedy_walk(g, "leftmost") == short_states)
    check("greedy rightmost = longest",
          oracle.greedy_walk(g, "rightmost") == long_states)

    check("rank = list index (short)",
          all(ranking.rank("short", s) == i for i, s in enumerate(short_states)))
    check("rank = list index (long)",
          all(ranking.rank("long", s) == i for i, s in enumerate(long_states)))

    ok = True
    for kind in ("quat", "long", "short"):
        want = list(codes.iter_listing(kind, n))
        ok = ok and rulers.replay("0" * n, rulers.ruler(kind, n, signed=True), signed=True) == want
        ok = ok and rulers.replay("0" * n, rulers.ruler(kind, n), signed=False) == want
    check("replayed change sequences = listings", ok)

    ok = True
    for algorithm in loopless.ALGORITHMS:
        ok = ok and list(loopless.iter_short(n, algorithm)) == short_states
    check("loopless generation = shortest solution", ok)

    cur = state.QuatString("0" * n)
    seq = [cur]
    while True:
        step = stepper.next_state("short", cur)
        if step.at_end:
            break
        cur = step.state
        seq.append(cur)
    check("successor iteration = shortest solution", seq == short_states)

    grids = oracle.enumerate_nurikabe(n)
    image = [nurikabe.sigma(s) for s in short_states]
    check("grid bijection", len(set(image)) == len(image) and set(image) == set(grids))

    print("FAIL" if failures else "PASS", file=out)
    return 1 if failures else 0


def _cmd_serve(args) -> int:
    from . import service

    service.serve(addr=args.addr, port=args.port, session_dir=args.session_dir)
    return 0


def run(argv: Sequence[str] | None = None, out=None) -> int:
    """Entry point returning the exit code (0 ok, 1 domain error, 2 usage)."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args, out)
        if args.command == "rank":
            print(ranking.rank(args.kind, state.parse(args.state)), file=out)
            return 0
        if args.command == "unrank":
            print(ranking.unrank(args.kind, args.n, args.rank), file=out)
            return 0
        if args.command in ("next", "prev"):
            fn = stepper.next_state if args.command == "next" else stepper.prev_state
            outcome = fn(args.kind, state.parse(args.state))
            if outcome.at_end:
                print(outcome.end.value.upper(), file=out)
            else:
                print(outcome.state, file=out)
            return 0
        if args.command == "compare":
            order = stepper.compare(state.parse(args.first), state.parse(args.second))
            print({stepper.BEFORE: "before", stepper.EQUAL: "equal",
                   stepper.AFTER: "after"}[order], file=out)
            return 0
        if args.command == "solve":
            return _cmd_solve(args, out)
        if args.command == "moves":
            q = state.parse(args.state)
            moves = sorted(state.legal_moves(q), key=lambda m: (m.index, -m.delta))
            if args.format == "json":
                _dump_json(
                    {"state": str(q),
                     "moves": [{"index": m.index, "delta": m.delta} for m in moves]},
                    out,
                )
            else:
                print(" ".join(f"{m.delta * m.index:+d}" for m in moves), file=out)
            return 0
        if args.command == "graph":
            return _cmd_graph(args, out)
        if args.command == "nurikabe":
            return _cmd_nurikabe(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "serve":
            return _cmd_serve(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (InvalidStateError, IllegalMoveError, ValueError, RuntimeError) as exc:
        print(f"ziggu: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
