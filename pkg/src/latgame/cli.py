"""Command-line surface: validate, solve, compile, query, move, congruent,
complexity, gen, plot, and serve subcommands over the JSON file formats."""

from __future__ import annotations

import argparse
import json
import sys

from . import games, genfun, oracle, serialize, strat, strategy
from .core import Cone, RuleSet, input_complexity, validate_rule_set
from .errors import LatgameError
from .linalg import dot

EXIT_ERROR = 3


def _parse_pos(text: str, dim: int | None = None):
    try:
        p = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise LatgameError(f"malformed position {text!r}")
    if dim is not None and len(p) != dim:
        raise LatgameError(f"position {text!r} must have {dim} coordinates")
    return p


def _load_game(path: str):
    return serialize.game_from_dict(serialize.load_json(path))


def _load_gf(path: str):
    return serialize.gf_from_dict(serialize.load_json(path))


def _load_strat(path: str):
    return serialize.strat_from_dict(serialize.load_json(path))


def cmd_validate(args) -> int:
    data = serialize.load_json(args.game)
    d = int(data["d"])
    gamma = tuple(tuple(int(x) for x in g) for g in data["gamma"])
    rays = data.get("cone_rays", "orthant")
    cone = Cone.orthant(d) if rays == "orthant" \
        else Cone(tuple(tuple(int(x) for x in r) for r in rays))
    report = validate_rule_set(RuleSet(gamma), cone)
    print(report.describe())
    return 0 if report.valid else 1


def cmd_solve(args) -> int:
    game = _load_game(args.game)
    region = oracle.solve_sublevel(game, args.level)
    items = sorted(region.labels.items(),
                   key=lambda kv: (dot(game.ell, kv[0]), kv[0]))
    if args.format == "json":
        print(json.dumps({
            "level": args.level,
            "labels": [{"pos": list(p), "label": lab} for p, lab in items],
        }, indent=2))
    else:
        for p, lab in items:
            print(",".join(str(x) for x in p), lab)
    return 0


def cmd_compile(args) -> int:
    s = _load_strat(args.strat)
    f = strat.compile_rational_strategy(s)
    if not args.no_verify:
        if args.game is None or args.verify_level is None:
            raise LatgameError(
                "--game and --verify-level are required unless --no-verify")
        game = _load_game(args.game)
        region = oracle.solve_sublevel(game, args.verify_level)
        coeffs = genfun.expand_in_sublevel(f, game.ell, args.verify_level)
        gf_set = {p for p, c in coeffs.items() if c == 1}
        if any(c not in (0, 1) for c in coeffs.values()):
            raise LatgameError("compiled strategy is not a set "
                               "generating function on the sublevel")
        if gf_set != region.p_positions():
            diff = gf_set.symmetric_difference(region.p_positions())
            raise LatgameError(
                f"strategy disagrees with oracle at {sorted(diff)[0]}")
    serialize.dump_json(serialize.gf_to_dict(f), args.output)
    print(f"wrote {args.output}")
    return 0


def cmd_query(args) -> int:
    game = _load_game(args.game)
    f = _load_gf(args.strategy)
    p = _parse_pos(args.pos, game.dim)
    result = strategy.is_p(f, p, game.ell)
    print("P" if result else "N")
    return 0 if result else 1


def cmd_move(args) -> int:
    game = _load_game(args.game)
    f = _load_gf(args.strategy)
    q = _parse_pos(args.pos, game.dim)
    for g in strategy.winning_moves(game, f, q):
        print(",".join(str(x) for x in g))
    return 0


def cmd_congruent(args) -> int:
    game = _load_game(args.game)
    f = _load_gf(args.strategy) if args.strategy else None
    s = _load_strat(args.strat) if args.strat else None
    verdict = strategy.congruent(game, _parse_pos(args.pos1, game.dim),
                                 _parse_pos(args.pos2, game.dim), strategy_gf=f,
                                 stratification=s, radius=args.radius,
                                 trials=args.trials)
    print(json.dumps(verdict.to_json(), indent=2))
    kind = verdict.kind
    if kind is strategy.VerdictKind.CONGRUENT_CERTIFIED:
        return 0
    if kind is strategy.VerdictKind.DISTINGUISHED:
        return 1
    return 2


def cmd_complexity(args) -> int:
    data = serialize.load_json(args.file)
    if "gamma" in data:
        value = input_complexity(serialize.game_from_dict(data))
    elif "strata" in data:
        value = strat.strat_complexity(serialize.strat_from_dict(data))
    elif "terms" in data:
        value = genfun.gf_complexity(serialize.gf_from_dict(data))
    else:
        raise LatgameError(f"unrecognized file format in {args.file}")
    print(value)
    return 0


def cmd_gen(args) -> int:
    if args.kind == "nim":
        game = games.nim(args.heaps, args.mode)
    elif args.kind == "octal":
        spec = serialize.load_json(args.spec)
        moves = tuple(tuple(mv) for mv in spec["moves"])
        game = games.octal(games.HeapGameSpec(
            int(spec["max_heap"]), moves,
            spec.get("play_mode", args.mode)))
    else:
        game = games.ex5()
    out = json.dumps(serialize.game_to_dict(game), indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
        print(f"wrote {args.output}")
    else:
        print(out)
    return 0


def _plot_grid(game, level: int):
    region = oracle.solve_sublevel(game, level)
    xs = [p[0] for p in region.labels]
    ys = [p[1] for p in region.labels]
    max_x, max_y = max(xs, default=0), max(ys, default=0)
    rows = []
    for y in range(max_y, -1, -1):
        row = []
        for x in range(max_x + 1):
            lab = region.labels.get((x, y))
            row.append({"P": "P", "N": ".", "D": "D", None: " "}[lab])
        rows.append("".join(row).rstrip())
    return rows


def _plot_svg(game, level: int) -> str:
    region = oracle.solve_sublevel(game, level)
    cell = 16
    max_x = max((p[0] for p in region.labels), default=0)
    max_y = max((p[1] for p in region.labels), default=0)
    colors = {"P": "#2a9d2a", "N": "#d0d0d0", "D": "#c03030"}
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{(max_x + 1) * cell}" height="{(max_y + 1) * cell}">']
    for (x, y), lab in sorted(region.labels.items()):
        parts.append(
            f'<rect x="{x * cell}" y="{(max_y - y) * cell}" '
            f'width="{cell - 1}" height="{cell - 1}" '
            f'fill="{colors[lab]}"><title>({x},{y}) {lab}</title></rect>')
    parts.append("</svg>")
    return "\n".join(parts)


def cmd_plot(args) -> int:
    game = _load_game(args.game)
    if game.dim != 2:
        raise LatgameError("plot renders 2-dimensional games only")
    for row in _plot_grid(game, args.level):
        print(row)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(_plot_svg(game, args.level) + "\n")
        print(f"wrote {args.svg}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    game = _load_game(args.game)
    f = _load_gf(args.strategy) if args.strategy else None
    s = _load_strat(args.strat) if args.strat else None
    app = create_app(game, strategy_gf=f, stratification=s,
                     verify=not args.no_verify)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latgame",
        description="Exact solving and rational strategies for lattice games")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the rule-set axioms")
    p.add_argument("game")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="label an l-sublevel of the board")
    p.add_argument("game")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compile",
                       help="compile a stratification to a strategy GF")
    p.add_argument("strat")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--game")
    p.add_argument("--verify-level", type=int, default=None)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("query", help="classify a position via a strategy")
    p.add_argument("game")
    p.add_argument("strategy")
    p.add_argument("--pos", required=True)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("move", help="list winning moves from a position")
    p.add_argument("game")
    p.add_argument("strategy")
    p.add_argument("--pos", required=True)
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("congruent", help="decide misere congruence")
    p.add_argument("game")
    p.add_argument("--pos1", required=True)
    p.add_argument("--pos2", required=True)
    p.add_argument("--strategy")
    p.add_argument("--strat")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("complexity", help="print the complexity measure")
    p.add_argument("file")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("gen", help="generate a built-in game")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("nim")
    g.add_argument("--heaps", type=int, required=True)
    g.add_argument("--mode", choices=("normal", "misere"), default="misere")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("octal")
    g.add_argument("--spec", required=True)
    g.add_argument("--mode", choices=("normal", "misere"), default="misere")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("ex5")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("plot", help="text/SVG grid of a 2-d sublevel")
    p.add_argument("game")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--game", required=True)
    p.add_argument("--strategy")
    p.add_argument("--strat")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LatgameError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
