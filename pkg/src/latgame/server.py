"""JSON-over-HTTP service for a single game and (optionally) its compiled
strategy.  All state is immutable; /api/play is stateless — the client
holds the current position."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import genfun, oracle, strategy
from .core import LatticeGame, board_contains, legal_moves
from .errors import LatgameError, PositionOffBoard, StrategyOracleMismatch
from .linalg import dot, vsub

DEFAULT_VERIFY_LEVEL = 20
MAX_REGION_LEVEL = 200


class PosBody(BaseModel):
    pos: list[int]


class PlayBody(BaseModel):
    pos: list[int]
    move: list[int]


class CongruentBody(BaseModel):
    p: list[int]
    q: list[int]
    radius: int | None = None
    trials: int = 5


def verify_strategy(game: LatticeGame, f: genfun.RationalGF,
                    level: int = DEFAULT_VERIFY_LEVEL) -> None:
    """Cross-check the strategy GF against the oracle on a sublevel; raises
    on the first disagreement."""
    region = oracle.solve_sublevel(game, level)
    for p, lab in region.labels.items():
        if lab == "D":
            continue
        if strategy.is_p(f, p, game.ell) != (lab == "P"):
            raise StrategyOracleMismatch(
                f"strategy disagrees with the oracle at {p}")


def _check_pos(game: LatticeGame, raw: list[int], name: str = "pos"):
    if len(raw) != game.dim:
        raise HTTPException(400, f"{name} must have {game.dim} coordinates")
    p = tuple(int(x) for x in raw)
    if not board_contains(game, p):
        raise HTTPException(422, f"{name} {list(p)} is not on the board")
    return p


def create_app(game: LatticeGame, strategy_gf=None, stratification=None,
               verify: bool = True,
               verify_level: int = DEFAULT_VERIFY_LEVEL) -> FastAPI:
    if strategy_gf is not None and verify:
        verify_strategy(game, strategy_gf, verify_level)

    app = FastAPI(title="latgame")

    @app.exception_handler(LatgameError)
    async def _domain_error(request, exc: LatgameError):
        code = 422 if isinstance(exc, PositionOffBoard) else 400
        return JSONResponse(status_code=code,
                            content={"error": type(exc).__name__,
                                     "message": str(exc)})

    def classify_pos(p):
        if strategy_gf is not None:
            return "P" if strategy.is_p(strategy_gf, p, game.ell) else "N"
        return oracle.classify(game, p)

    def winning(q):
        if strategy_gf is not None:
            return strategy.winning_moves(game, strategy_gf, q)
        region = oracle.solve_sublevel(game, dot(game.ell, q))
        out = []
        for g in game.rules.gamma:
            t = vsub(q, g)
            if region.labels.get(t) == "P":
                out.append(g)
        return out

    @app.get("/api/meta")
    def meta():
        return {
            "d": game.dim,
            "gamma": [list(g) for g in game.rules.gamma],
            "ell": list(game.ell),
            "defeated_generators": [list(g)
                                    for g in game.board.defeated_generators],
            "has_strategy": strategy_gf is not None,
        }

    @app.get("/api/region")
    def region(level: int = 0):
        if level < 0 or level > MAX_REGION_LEVEL:
            raise HTTPException(
                400, f"level must be between 0 and {MAX_REGION_LEVEL}")
        solved = oracle.solve_sublevel(game, level)
        return {"level": level,
                "labels": [{"pos": list(p), "label": lab}
                           for p, lab in sorted(solved.labels.items())]}

    @app.post("/api/classify")
    def classify(body: PosBody):
        p = _check_pos(game, body.pos)
        return {"label": classify_pos(p)}

    @app.post("/api/move")
    def move(body: PosBody):
        q = _check_pos(game, body.pos)
        return {"moves": [list(g) for g in winning(q)]}

    @app.post("/api/play")
    def play(body: PlayBody):
        q = _check_pos(game, body.pos)
        if len(body.move) != game.dim:
            raise HTTPException(400,
                                f"move must have {game.dim} coordinates")
        mv = tuple(int(x) for x in body.move)
        if mv not in game.rules.gamma:
            raise HTTPException(400, f"{list(mv)} is not in the rule set")
        after_human = vsub(q, mv)
        if not board_contains(game, after_human):
            raise HTTPException(422,
                                f"move lands off the board at "
                                f"{list(after_human)}")
        legal = legal_moves(game, after_human)
        if not legal:
            return {"after_human": list(after_human),
                    "label": classify_pos(after_human),
                    "engine_move": None, "terminal": True,
                    "no_winning_move": False, "legal_moves": []}
        wins = winning(after_human)
        if wins:
            reply = wins[0]
            after_engine = vsub(after_human, reply)
            return {"after_human": list(after_human),
                    "label": classify_pos(after_human),
                    "engine_move": list(reply),
                    "after_engine": list(after_engine),
                    "terminal": not legal_moves(game, after_engine),
                    "no_winning_move": False,
                    "legal_moves": [list(g) for g in legal]}
        return {"after_human": list(after_human),
                "label": classify_pos(after_human),
                "engine_move": None, "terminal": False,
                "no_winning_move": True,
                "legal_moves": [list(g) for g in legal]}

    @app.post("/api/congruent")
    def congruent(body: CongruentBody):
        p = _check_pos(game, body.p, "p")
        q = _check_pos(game, body.q, "q")
        verdict = strategy.congruent(game, p, q, strategy_gf=strategy_gf,
                                     stratification=stratification,
                                     radius=body.radius, trials=body.trials)
        return verdict.to_json()

    return app
