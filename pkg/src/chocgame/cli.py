"""Command line tool: pattern exports, counts, verification suites, play, serve.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 capacity bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .core import Cell, pattern
from .engine import GameState, apply_move, best_move, legal_moves, Move, nim_value
from .enumeration import g, sum_all, sum_odd
from .errors import CapacityError, DomainError
from .recursion import pattern_recursive
from .automaton import ca_pattern, trace_slices
from .nim_pass import overlay, pass_game_graph
from .sierpinski import half_section, integer_section
from .verify import SUITES, run_suites

_GENERATORS = {"xor": pattern, "recursive": pattern_recursive, "ca": ca_pattern}

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _write(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chocgame",
        description="P-position workbench for the square chocolate game",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pattern", help="emit the P-position pattern of an m x m board")
    p.add_argument("m", type=int)
    p.add_argument("--method", choices=sorted(_GENERATORS), default="xor")
    p.add_argument("--format", choices=["pbm", "svg"], default="pbm")
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.add_argument("--trace", default=None, metavar="DIR",
                   help="with --method ca: dump one PBM frame per time slice")

    p = sub.add_parser("gvalue", help="print the P-position count g(m)")
    p.add_argument("m", type=int)

    p = sub.add_parser("gsum", help="print a g-sum next to its closed form")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--odd", type=int, metavar="N",
                     help="sum over odd sides up to 2^N - 1")
    grp.add_argument("--all", type=int, metavar="N", dest="all_",
                     help="sum over all sides up to 2^N")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max", type=int, default=None,
                   help="override the suite's primary bound")

    p = sub.add_parser("sierpinski", help="export a horizontal fractal section")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--half", action="store_true",
                   help="slice between levels m and m+1")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("-o", "--output", default=None, metavar="FILE")

    p = sub.add_parser("nimpass", help="with-pass overlay or game graph export")
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("--format", choices=["grid", "svg"], default="grid")
    p.add_argument("--graph", default=None, metavar="P1,P2,P3,P4",
                   help="emit the DOT game graph from a pile tuple instead")
    p.add_argument("-o", "--output", default=None, metavar="FILE")

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("m", type=int)
    p.add_argument("--poison", default=None, metavar="I,J")
    p.add_argument("--first", choices=["human", "engine"], default="human")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--session-ttl", type=int, default=600, metavar="SECS")
    p.add_argument("--static-dir", default=None, metavar="DIR",
                   help="also serve a built web UI from this directory")

    return parser


def _cmd_pattern(args, out) -> int:
    pat = _GENERATORS[args.method](args.m)
    if args.trace is not None:
        if args.method != "ca":
            raise DomainError("--trace is only meaningful with --method ca")
        trace_dir = Path(args.trace)
        trace_dir.mkdir(parents=True, exist_ok=True)
        for step, frame in trace_slices(args.m):
            (trace_dir / f"slice_{step:04d}.pbm").write_text(
                formats.save_pbm(frame), encoding="utf-8"
            )
    text = formats.save_pbm(pat) if args.format == "pbm" else formats.pattern_svg(pat)
    _write(text, args.output, out)
    return EXIT_OK


def _cmd_gsum(args, out) -> int:
    if args.odd is not None:
        total, closed = sum_odd(args.odd), 6 ** (args.odd - 1)
    else:
        n = args.all_
        total, closed = sum_all(n), (4 ** n + 6 ** n) // 2
    out.write(f"{total} == {closed}\n")
    return EXIT_OK if total == closed else EXIT_VERIFY


def _cmd_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    worst = EXIT_OK
    for name, checked, failed in run_suites(names, args.max):
        out.write(f"suite={name} checked={checked} failed={failed}\n")
        if failed:
            worst = EXIT_VERIFY
    return worst


def _cmd_sierpinski(args, out) -> int:
    sec = half_section(args.n, args.m) if args.half else integer_section(args.n, args.m)
    text = (formats.save_section_csv(sec) if args.format == "csv"
            else formats.section_svg(sec))
    _write(text, args.output, out)
    return EXIT_OK


def _cmd_nimpass(args, out) -> int:
    if (args.graph is None) == (args.m is None):
        raise DomainError("give either a side m or --graph p1,p2,p3,p4")
    if args.graph is not None:
        try:
            piles = tuple(int(x) for x in args.graph.split(","))
        except ValueError as exc:
            raise DomainError(f"bad pile list {args.graph!r}") from exc
        nodes, edges = pass_game_graph(piles)
        _write(formats.dot_pass_graph(nodes, edges), args.output, out)
        return EXIT_OK
    ov = overlay(args.m)
    text = (formats.save_overlay_grid(ov) if args.format == "grid"
            else formats.overlay_svg(ov))
    _write(text, args.output, out)
    return EXIT_OK


def _render_bar(state: GameState, out) -> None:
    for j in range(state.h, 0, -1):
        cells = "".join(
            " X" if (i, j) == tuple(state.poison) else " ."
            for i in range(1, state.w + 1)
        )
        out.write(f"{j:3d} |{cells}\n")
    out.write("     " + "".join(f"{i:2d}" for i in range(1, state.w + 1)) + "\n")


def _parse_human_move(raw: str, state: GameState) -> Move | None:
    parts = raw.strip().lower().replace(",", " ").split()
    if len(parts) != 2 or parts[0] not in ("v", "h"):
        return None
    try:
        cut = int(parts[1])
    except ValueError:
        return None
    return Move("vertical" if parts[0] == "v" else "horizontal", cut)


def _cmd_play(args, out) -> int:
    if args.poison is None:
        import random

        poison = Cell(random.randint(1, args.m), random.randint(1, args.m))
    else:
        try:
            i, j = (int(x) for x in args.poison.split(","))
        except ValueError as exc:
            raise DomainError(f"bad poison {args.poison!r}, expected I,J") from exc
        poison = Cell(i, j)
    state = GameState(args.m, args.m, poison, mover=args.first)
    out.write(f"Bar {args.m}x{args.m}, poison at ({poison.i},{poison.j}). "
              "Cuts: v K (vertical) or h K (horizontal); q quits.\n")
    while True:
        _render_bar(state, out)
        if state.terminal:
            out.write(f"{state.mover} holds the poisoned square and loses. "
                      f"Winner: {'engine' if state.mover == 'human' else 'human'}.\n")
            return EXIT_OK
        if state.mover == "engine":
            mv = best_move(state)
            out.write(f"engine cuts: {mv.axis} {mv.cut} "
                      f"(position was {'losing' if nim_value(state) else 'winning'} for you)\n")
            state = apply_move(state, mv)
            continue
        out.write(f"your move (vertical 1..{state.w - 1}, horizontal 1..{state.h - 1}): ")
        out.flush()
        raw = sys.stdin.readline()
        if not raw or raw.strip().lower() in ("q", "quit"):
            out.write("bye\n")
            return EXIT_OK
        mv = _parse_human_move(raw, state)
        if mv is None:
            out.write("could not parse that; use e.g. `v 2` or `h 1`\n")
            continue
        if mv not in legal_moves(state):
            out.write(f"illegal cut {mv.cut} on the {mv.axis} axis\n")
            continue
        state = apply_move(state, mv)
    return EXIT_OK


def _cmd_serve(args, out) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_ttl=args.session_ttl, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


_HANDLERS = {
    "pattern": _cmd_pattern,
    "gvalue": lambda args, out: (out.write(f"{g(args.m)}\n"), EXIT_OK)[1],
    "gsum": _cmd_gsum,
    "verify": _cmd_verify,
    "sierpinski": _cmd_sierpinski,
    "nimpass": _cmd_nimpass,
    "play": _cmd_play,
    "serve": _cmd_serve,
}


def cli_dispatch(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args, out)
    except CapacityError as exc:
        err.write(f"capacity error: {exc}\n")
        return EXIT_CAPACITY
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
