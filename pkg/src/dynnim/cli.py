"""Command-line front door.

Subcommands:

  classify   verdict (and certificate) of one position
  advise     recommended move for one position
  blocks     game 1 block table for a start turn
  table      full verdict/family table for game 2, or a block table
  verify     closed form vs exhaustive solver over an envelope
  selfplay   engine-vs-opponent trials from a start position
  serve      HTTP/JSON API and the bundled web UI

Exit codes: 0 on success/pass, 1 when verification or self-play finds a
failure, 2 on usage errors.

Examples:

  dynnim classify --game g1 --f affine:1,0 -u 4 -k 1
  dynnim classify --game g2 -x 5 -y 3 --format json
  dynnim advise --game g2 -x 2 -y 2
  dynnim blocks --f table:1,2,2,3,7 -k 1 --max-x 40
  dynnim table --game g2 --max-weight 127 --format csv --out grid.csv
  dynnim verify --game g2 --max-weight 512
  dynnim selfplay --game g2 --start 8,0 --trials 100 --seed 7
  dynnim serve --port 8080
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .harness import (
    dump_table,
    render_blocks_g1,
    render_table_g2,
    selfplay,
    verify_g1,
    verify_g2,
)
from .kernel import (
    BoundFn,
    BoundSpecError,
    DynnimError,
    TurnPosition,
    WeightedPosition,
)
from .closed_form import classify_g1, classify_g2
from .strategist import AllLosing, NoMove, advise_g1, advise_g2

DEFAULT_PORT = 8080


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out:
        dump_table(out, text)
    else:
        sys.stdout.write(text)


def _parse_f(args) -> BoundFn:
    if not args.f:
        raise BoundSpecError("--f is required for game 1 (e.g. --f const:2)")
    return BoundFn.parse(args.f)


def _g1_position(args) -> TurnPosition:
    if args.stones is None:
        raise ValueError("-u/--stones is required for game 1")
    return TurnPosition(args.stones, args.turn)


def _g2_position(args) -> WeightedPosition:
    if args.heavy is None or args.light is None:
        raise ValueError("-x/--heavy and -y/--light are required for game 2")
    return WeightedPosition(args.heavy, args.light)


def _cmd_classify(args) -> int:
    if args.game == "g1":
        f = _parse_f(args)
        pos = _g1_position(args)
        verdict, block = classify_g1(pos, f)
        if args.format == "json":
            payload = {
                "game": "g1",
                "f": f.spec(),
                "u": pos.stones,
                "k": pos.turn,
                "verdict": verdict.value,
                "block": block,
            }
            _emit(args, json.dumps(payload, indent=2) + "\n")
        else:
            tail = f" (block n={block})" if block is not None else ""
            _emit(args, f"{verdict.value}{tail}\n")
    else:
        pos = _g2_position(args)
        verdict, tag = classify_g2(pos)
        if args.format == "json":
            payload = {
                "game": "g2",
                "x": pos.heavy,
                "y": pos.light,
                "verdict": verdict.value,
                "family": tag.label() if tag else None,
            }
            _emit(args, json.dumps(payload, indent=2) + "\n")
        else:
            tail = f" ({tag.label()})" if tag else ""
            _emit(args, f"{verdict.value}{tail}\n")
    return 0


def _cmd_advise(args) -> int:
    if args.game == "g1":
        f = _parse_f(args)
        pos = _g1_position(args)
        advice = advise_g1(pos, f)
        move_json = (lambda m: {"take": m.take})
        target_json = (lambda p: {"u": p.stones, "k": p.turn})
        witness_label = (lambda wtn: f"block n={wtn}")
    else:
        pos = _g2_position(args)
        advice = advise_g2(pos)
        move_json = (lambda m: {"takeHeavy": m.take_heavy, "takeLight": m.take_light})
        target_json = (lambda p: {"x": p.heavy, "y": p.light})
        witness_label = (lambda wtn: wtn.label())

    if isinstance(advice, NoMove):
        payload = {"advice": "no-move"}
        text = "no legal move: the position is lost on the spot\n"
    elif isinstance(advice, AllLosing):
        payload = {"advice": "all-losing", "move": move_json(advice.move)}
        text = f"every move loses; stalling with {payload['move']}\n"
    else:
        payload = {
            "advice": "winning",
            "move": move_json(advice.move),
            "target": target_json(advice.target),
            "witness": witness_label(advice.witness),
        }
        text = (
            f"winning move {payload['move']} -> {payload['target']}"
            f" [{payload['witness']}]\n"
        )
    _emit(args, json.dumps(payload, indent=2) + "\n" if args.format == "json" else text)
    return 0


def _cmd_blocks(args) -> int:
    f = _parse_f(args)
    _emit(args, render_blocks_g1(f, args.turn, args.max_x, args.format))
    return 0


def _cmd_table(args) -> int:
    if args.game == "g1":
        f = _parse_f(args)
        _emit(args, render_blocks_g1(f, args.turn, args.max_x, args.format))
    else:
        _emit(args, render_table_g2(args.max_weight, args.format))
    return 0


def _cmd_verify(args) -> int:
    if args.game == "g1":
        f = _parse_f(args)
        report = verify_g1(f, max_x=args.max_x, max_k=args.max_k)
    else:
        report = verify_g2(args.max_weight)
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.passed else 1


def _cmd_selfplay(args) -> int:
    if args.game == "g1":
        f = _parse_f(args)
        u, k = args.start
        start = TurnPosition(u, k)
        report = selfplay(
            "g1", [start], f=f, opponent=args.opponent, trials=args.trials,
            seed=args.seed, engine_first=not args.engine_second,
        )
    else:
        x, y = args.start
        report = selfplay(
            "g2", [WeightedPosition(x, y)], opponent=args.opponent,
            trials=args.trials, seed=args.seed, engine_first=not args.engine_second,
        )
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.passed else 1


def _cmd_serve(args) -> int:
    from . import service  # deferred: keeps plain CLI use import-light

    port = args.port
    if port is None:
        port = int(os.environ.get("DYNNIM_PORT", DEFAULT_PORT))
    return service.run(host=args.host, port=port)


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynnim",
        description="Solvers and play engine for two restricted Nim variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, game=True, fmt=("text", "json"), out=True):
        if game:
            p.add_argument("--game", choices=("g1", "g2"), required=True)
        p.add_argument("--f", help="game 1 bound function, e.g. const:2, affine:1,0, table:1,2,2,3,7")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        if out:
            p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("classify", help="verdict of one position")
    add_common(p)
    p.add_argument("-u", "--stones", type=int)
    p.add_argument("-k", "--turn", type=int, default=1)
    p.add_argument("-x", "--heavy", type=int)
    p.add_argument("-y", "--light", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("advise", help="recommended move for one position")
    add_common(p)
    p.add_argument("-u", "--stones", type=int)
    p.add_argument("-k", "--turn", type=int, default=1)
    p.add_argument("-x", "--heavy", type=int)
    p.add_argument("-y", "--light", type=int)
    p.set_defaults(func=_cmd_advise)

    p = sub.add_parser("blocks", help="game 1 block table at a start turn")
    add_common(p, game=False, fmt=("text", "json", "csv"))
    p.add_argument("-k", "--turn", type=int, default=1)
    p.add_argument("--max-x", type=int, default=100)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("table", help="verdict/family or block table")
    add_common(p, fmt=("csv", "json", "text"))
    p.add_argument("-k", "--turn", type=int, default=1)
    p.add_argument("--max-x", type=int, default=100)
    p.add_argument("--max-weight", type=int, default=127)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="closed form vs exhaustive solver")
    add_common(p)
    p.add_argument("--max-x", type=int, default=200)
    p.add_argument("--max-k", type=int, default=40)
    p.add_argument("--max-weight", type=int, default=512)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selfplay", help="engine trials from a start position")
    add_common(p)
    p.add_argument("--start", type=_pair, required=True,
                   help="u,k for game 1; x,y for game 2")
    p.add_argument("--opponent", choices=("random", "engine"), default="random")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--engine-second", action="store_true",
                   help="let the opponent move first")
    p.set_defaults(func=_cmd_selfplay)

    p = sub.add_parser("serve", help="run the HTTP/JSON API")
    p.add_argument("--port", type=int, default=None,
                   help=f"default: DYNNIM_PORT or {DEFAULT_PORT}")
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BoundSpecError, ValueError, DynnimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
