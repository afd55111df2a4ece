"""Brute-force ground truth: exact P/N labels on ell-sublevel regions.

A position on the board is N iff some legal move reaches a P position, else
P; defeated positions carry label D.  Sublevels are move-closed because ell
strictly decreases along moves, so the labels are exact.
"""

from __future__ import annotations

import itertools
import math
import os
import threading
from dataclasses import dataclass, field

from . import fm
from .core import LatticeGame, defeated_set
from .errors import RegionTooLarge
from .linalg import Vec, dot, vsub

DEFAULT_POINT_CAP = 10_000_000


def point_cap() -> int:
    return int(os.environ.get("LATGAME_POINT_CAP", DEFAULT_POINT_CAP))


@dataclass
class SolvedRegion:
    game: LatticeGame
    level: int
    labels: dict[Vec, str] = field(repr=False)

    def p_positions(self) -> set[Vec]:
        return {p for p, lab in self.labels.items() if lab == "P"}


def _coordinate_box(game: LatticeGame, level: int) -> list[range]:
    """Integer ranges covering {p in C : ell.p <= level} coordinatewise."""
    cone = game.board.cone
    ell = game.ell
    d = game.dim
    if cone.is_orthant():
        return [range(0, level // ell[i] + 1) for i in range(d)]
    rows = [list(n) for n in cone.facet_normals()]
    rhss = [0] * len(rows)
    rows.append([-c for c in ell])
    rhss.append(-level)
    system = fm.make_system(rows, rhss)
    ranges = []
    for i in range(d):
        phi = [0] * d
        phi[i] = 1
        try:
            lo, hi = fm.functional_bounds(system, d, phi)
        except fm.Infeasible:
            return [range(0)] * d
        if lo is None or hi is None:
            raise RegionTooLarge("sublevel region is unbounded")
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    return ranges


def sublevel_points(game: LatticeGame, level: int) -> list[Vec]:
    """Points of Lambda with ell.p <= level, sorted by (ell.p, lex)."""
    cone = game.board.cone
    ell = game.ell
    box = _coordinate_box(game, level)
    count = 1
    for r in box:
        count *= len(r)
    if count > point_cap():
        raise RegionTooLarge(f"sublevel box has {count} candidate points")
    pts = [p for p in itertools.product(*box)
           if dot(ell, p) <= level and cone.contains(p)]
    pts.sort(key=lambda p: (dot(ell, p), p))
    return pts


# per-game incremental cache: game -> (level, labels, ordered points)
_cache: dict[LatticeGame, tuple[int, dict, list]] = {}
_lock = threading.Lock()


def solve_sublevel(game: LatticeGame, level: int) -> SolvedRegion:
    """Exact labels on the ell-sublevel; incremental per-game memoization."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    with _lock:
        cached = _cache.get(game)
        if cached is not None and cached[0] >= level:
            solved_level, labels, _ = cached
            if solved_level == level:
                return SolvedRegion(game, level, dict(labels))
            ell = game.ell
            sub = {p: lab for p, lab in labels.items() if dot(ell, p) <= level}
            return SolvedRegion(game, level, sub)
        labels = dict(cached[1]) if cached else {}
        ell = game.ell
        defeated = defeated_set(game)
        pts = sublevel_points(game, level)
        for p in pts:
            if p in labels:
                continue
            if p in defeated:
                labels[p] = "D"
                continue
            is_n = any(labels.get(vsub(p, g)) == "P" for g in game.rules.gamma)
            labels[p] = "N" if is_n else "P"
        _cache[game] = (level, labels, pts)
        return SolvedRegion(game, level, dict(labels))


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def classify(game: LatticeGame, p: Vec) -> str:
    """One of 'P', 'N', 'D', 'OffBoard'."""
    if len(p) != game.dim:
        return "OffBoard"
    if not game.board.cone.contains(p):
        return "OffBoard"
    region = solve_sublevel(game, dot(game.ell, p))
    return region.labels[p]
