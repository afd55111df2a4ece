"""JSON round trips for games, strategies, and stratifications."""

from fractions import Fraction

from latgame import games, serialize
from latgame.core import Cone, GameBoard, LatticeGame, RuleSet
from latgame.genfun import GFTerm, RationalGF
from latgame.strat import AffineSemigroup, AffineStratification, Stratum


def test_game_round_trip():
    game = games.nim(2, "normal")
    data = serialize.game_to_dict(game)
    assert data["cone_rays"] == "orthant"
    back = serialize.game_from_dict(data)
    assert back == game


def test_game_with_explicit_cone():
    game = LatticeGame.create(
        RuleSet(((1, 0), (1, 2))), GameBoard(Cone(((1, 0), (1, 2))), ()))
    data = serialize.game_to_dict(game)
    assert data["cone_rays"] == [[1, 0], [1, 2]]
    assert serialize.game_from_dict(data) == game


def test_gf_round_trip():
    f = RationalGF(2, (
        GFTerm(Fraction(-3, 2), (1, 0), ((2, 0), (0, 2))),
        GFTerm(Fraction(1), (0, 0), ()),
    ))
    data = serialize.gf_to_dict(f)
    assert data["terms"][0]["alpha"] == [-3, 2]
    assert serialize.gf_from_dict(data) == f


def test_strat_round_trip():
    s = AffineStratification(2, (
        Stratum(((0, 0), (1, 1)), AffineSemigroup(((2, 0), (0, 2)))),
        Stratum(((5, 0),), AffineSemigroup(())),
    ))
    assert serialize.strat_from_dict(serialize.strat_to_dict(s)) == s


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "game.json")
    game = games.ex5()
    serialize.dump_json(serialize.game_to_dict(game), path)
    assert serialize.game_from_dict(serialize.load_json(path)) == game
