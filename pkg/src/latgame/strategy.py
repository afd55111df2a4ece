"""Game-level services on top of a rational strategy: P/N queries, winning
moves, and misere-congruence decisions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import genfun, oracle, strat
from .core import LatticeGame, board_contains
from .errors import (DegenerateWeight, NotASetGF, PositionOffBoard,
                     StrategyOracleMismatch, UnsupportedGeometry,
                     DimensionTooLarge)
from .linalg import Vec, dot, unit, vadd, vsub


def is_p(f: genfun.RationalGF, p: Vec, ell: Vec | None = None) -> bool:
    """True iff the strategy's Hadamard product with t^p is t^p itself."""
    if ell is None:
        ell = genfun.default_ell(f)
    c = genfun.coefficient_at(f, tuple(p), ell)
    if c == 1:
        return True
    if c == 0:
        return False
    raise NotASetGF(f"coefficient {c} at {p}: not a set generating function")


def winning_moves(game: LatticeGame, f: genfun.RationalGF, q: Vec
                  ) -> list[Vec]:
    """Moves from q landing on a P-position, in rule-set order."""
    if not board_contains(game, q):
        raise PositionOffBoard(f"{q} is not on the board")
    out = []
    for g in game.rules.gamma:
        target = vsub(tuple(q), g)
        if board_contains(game, target) and is_p(f, target, game.ell):
            out.append(g)
    return out


class VerdictKind(Enum):
    DISTINGUISHED = "distinguished"
    CONGRUENT_CERTIFIED = "congruent-certified"
    CONGRUENT_PROBABLE = "congruent-probable"


@dataclass(frozen=True)
class CongruenceVerdict:
    kind: VerdictKind
    witness: Vec | None
    radius: int
    specializations: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": list(self.witness) if self.witness else None,
            "evidence": {"radius": self.radius,
                         "specializations": self.specializations},
        }


def _cone_points(game: LatticeGame, radius: int) -> list[Vec]:
    return oracle.sublevel_points(game, radius)


def _p_membership(game: LatticeGame, f, max_level: int):
    """P-membership test on the sublevel; cross-checks the strategy against
    the oracle when both are available."""
    region = oracle.solve_sublevel(game, max_level)

    def member(v: Vec) -> bool:
        oracle_p = region.labels.get(v) == "P"
        if f is not None:
            gf_p = is_p(f, v, game.ell)
            if gf_p != oracle_p:
                raise StrategyOracleMismatch(
                    f"strategy disagrees with the oracle at {v}")
            return gf_p
        return oracle_p

    return member


def default_radius(game: LatticeGame, p: Vec, q: Vec,
                   stratification=None) -> int:
    ell = game.ell
    gen_max = 0
    if stratification is not None:
        gen_max = max((dot(ell, g) for st in stratification.strata
                       for g in st.A.gens), default=0)
    return 4 * max(dot(ell, p), dot(ell, q), gen_max, 1)


def _shifted_set_gf(game: LatticeGame, stratification, x: Vec):
    """GF of ((x + C) cap P) - x via translate intersections; the board cone
    must be the orthant."""
    d = game.dim
    orthant = strat.AffineSemigroup(tuple(unit(d, i) for i in range(d)))
    pieces = []
    for t in stratification.translates():
        for st in strat.intersect_translates(t, (tuple(x), orthant)):
            for b in st.F:
                pieces.append((vsub(b, tuple(x)), st.A))
    terms = tuple(genfun.GFTerm(Fraction(1), b, tuple(a.gens))
                  for b, a in sorted(pieces, key=lambda t: (t[0], t[1].gens)))
    return genfun.RationalGF(d, terms)


def _canonical_terms(f: genfun.RationalGF):
    return sorted((t.alpha, t.p, tuple(sorted(t.denoms))) for t in f.terms)


def congruent(game: LatticeGame, p: Vec, q: Vec, *,
              strategy_gf: genfun.RationalGF | None = None,
              stratification: strat.AffineStratification | None = None,
              radius: int | None = None, trials: int = 5,
              rng: random.Random | None = None) -> CongruenceVerdict:
    """Misere-congruence decision ladder: exact distinguishing sweep, exact
    certification from a stratification, then probabilistic evidence."""
    p, q = tuple(p), tuple(q)
    if not board_contains(game, p):
        raise PositionOffBoard(f"{p} is not on the board")
    if not board_contains(game, q):
        raise PositionOffBoard(f"{q} is not on the board")
    if radius is None:
        radius = default_radius(game, p, q, stratification)
    if p == q:
        return CongruenceVerdict(VerdictKind.CONGRUENT_CERTIFIED, None,
                                 radius, 0)
    f = strategy_gf
    if f is None and stratification is not None:
        f = strat.compile_rational_strategy(stratification)
    ell = game.ell
    max_level = max(dot(ell, p), dot(ell, q)) + radius
    member = _p_membership(game, f, max_level)
    # (1) exact distinguishing sweep over the shifted cone
    for v in _cone_points(game, radius):
        if member(vadd(p, v)) != member(vadd(q, v)):
            return CongruenceVerdict(VerdictKind.DISTINGUISHED, v, radius, 0)
    # (2) exact certification via stratified shifted-cone intersections
    if stratification is not None and game.board.cone.is_orthant():
        try:
            f_p = _shifted_set_gf(game, stratification, p)
            f_q = _shifted_set_gf(game, stratification, q)
            if _canonical_terms(f_p) == _canonical_terms(f_q):
                eq, _ = genfun.equals_on_sublevel(f_p, f_q, ell, radius)
                assert eq
                return CongruenceVerdict(VerdictKind.CONGRUENT_CERTIFIED,
                                         None, radius, 0)
            diff = genfun.subtract(f_p, f_q)
            agreements = _specialization_trials(diff, ell, radius, trials,
                                                rng)
            return CongruenceVerdict(VerdictKind.CONGRUENT_PROBABLE, None,
                                     radius, agreements)
        except (UnsupportedGeometry, DimensionTooLarge):
            pass
    # (3) probabilistic evidence only
    return CongruenceVerdict(VerdictKind.CONGRUENT_PROBABLE, None, radius, 0)


def _specialization_trials(diff: genfun.RationalGF, ell: Vec, radius: int,
                           trials: int, rng: random.Random | None) -> int:
    rng = rng or random.Random(0)
    d = diff.dim
    agreements = 0
    for _ in range(trials):
        for _attempt in range(50):
            w = tuple(rng.randint(1, 9) for _ in range(d))
            try:
                g = genfun.weight_specialize(diff, w)
            except DegenerateWeight:
                continue
            level = radius * max(w)
            expansion = genfun.expand_in_sublevel(g, (1,), level)
            if not expansion:
                agreements += 1
            break
    return agreements
