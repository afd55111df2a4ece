"""JSON (de)serialization for games, strategies, and stratifications.

All formats carry exact integers (rationals as [num, den] pairs); no
floating point anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import Cone, GameBoard, LatticeGame, RuleSet
from .genfun import GFTerm, RationalGF
from .strat import AffineSemigroup, AffineStratification, Stratum


def game_to_dict(game: LatticeGame) -> dict:
    cone = game.board.cone
    return {
        "d": game.dim,
        "gamma": [list(g) for g in game.rules.gamma],
        "cone_rays": "orthant" if cone.is_orthant()
        else [list(r) for r in cone.rays],
        "defeated_generators": [list(g)
                                for g in game.board.defeated_generators],
    }


def game_from_dict(data: dict) -> LatticeGame:
    d = int(data["d"])
    gamma = tuple(tuple(int(x) for x in g) for g in data["gamma"])
    rays = data.get("cone_rays", "orthant")
    cone = Cone.orthant(d) if rays == "orthant" \
        else Cone(tuple(tuple(int(x) for x in r) for r in rays))
    defeated = tuple(tuple(int(x) for x in g)
                     for g in data.get("defeated_generators", []))
    return LatticeGame.create(RuleSet(gamma), GameBoard(cone, defeated))


def gf_to_dict(f: RationalGF) -> dict:
    return {
        "d": f.dim,
        "terms": [
            {
                "alpha": [t.alpha.numerator, t.alpha.denominator],
                "p": list(t.p),
                "denoms": [list(a) for a in t.denoms],
            }
            for t in f.terms
        ],
    }


def gf_from_dict(data: dict) -> RationalGF:
    d = int(data["d"])
    terms = []
    for t in data["terms"]:
        num, den = t["alpha"]
        terms.append(GFTerm(Fraction(int(num), int(den)),
                            tuple(int(x) for x in t["p"]),
                            tuple(tuple(int(x) for x in a)
                                  for a in t["denoms"])))
    return RationalGF(d, tuple(terms))


def strat_to_dict(s: AffineStratification) -> dict:
    return {
        "d": s.dim,
        "strata": [
            {"F": [list(b) for b in st.F],
             "A": [list(g) for g in st.A.gens]}
            for st in s.strata
        ],
    }


def strat_from_dict(data: dict) -> AffineStratification:
    d = int(data["d"])
    strata = []
    for st in data["strata"]:
        fs = tuple(tuple(int(x) for x in b) for b in st["F"])
        gens = tuple(tuple(int(x) for x in g) for g in st["A"])
        strata.append(Stratum(fs, AffineSemigroup(gens)))
    return AffineStratification(d, tuple(strata))


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(data: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
