"""End-to-end CLI coverage through cli.main with temp files."""

import json

import pytest

from latgame import cli


@pytest.fixture
def workspace(tmp_path):
    paths = {
        "game": str(tmp_path / "game.json"),
        "strat": str(tmp_path / "strat.json"),
        "strategy": str(tmp_path / "strategy.json"),
        "svg": str(tmp_path / "plot.svg"),
    }
    assert cli.main(["gen", "nim", "--heaps", "2", "--mode", "misere",
                     "-o", paths["game"]]) == 0
    with open(paths["strat"], "w") as fh:
        json.dump({"d": 2, "strata": [
            {"F": [[0, 0]], "A": [[2, 0], [0, 2]]}]}, fh)
    assert cli.main(["compile", paths["strat"], "-o", paths["strategy"],
                     "--game", paths["game"], "--verify-level", "30"]) == 0
    return paths


def test_gen_writes_expected_schema(workspace):
    with open(workspace["game"]) as fh:
        data = json.load(fh)
    assert data["gamma"] == [[1, 0], [0, 1], [-1, 1]]
    assert data["cone_rays"] == "orthant"


def test_gen_ex5(tmp_path, capsys):
    assert cli.main(["gen", "ex5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["d"] == 5 and len(data["gamma"]) == 8


def test_validate(workspace, capsys):
    assert cli.main(["validate", workspace["game"]]) == 0
    out = capsys.readouterr().out
    assert "ell" in out and "witness" in out


def test_validate_rejects_bad_rule_set(tmp_path, capsys):
    path = str(tmp_path / "bad.json")
    with open(path, "w") as fh:
        json.dump({"d": 2, "gamma": [[1, -1], [-1, 1]],
                   "defeated_generators": []}, fh)
    assert cli.main(["validate", path]) == 1


def test_solve_text_and_json(workspace, capsys):
    assert cli.main(["solve", workspace["game"], "--level", "4"]) == 0
    text = capsys.readouterr().out
    assert "0,0 P" in text
    assert cli.main(["solve", workspace["game"], "--level", "4",
                     "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert {"pos": [2, 0], "label": "P"} in data["labels"]


def test_query_exit_codes(workspace, capsys):
    assert cli.main(["query", workspace["game"], workspace["strategy"],
                     "--pos", "4,2"]) == 0
    assert capsys.readouterr().out.strip() == "P"
    assert cli.main(["query", workspace["game"], workspace["strategy"],
                     "--pos", "1,2"]) == 1
    assert capsys.readouterr().out.strip() == "N"


def test_move(workspace, capsys):
    assert cli.main(["move", workspace["game"], workspace["strategy"],
                     "--pos", "1,2"]) == 0
    assert capsys.readouterr().out.strip() == "1,0"


def test_congruent_exit_codes(workspace, capsys):
    assert cli.main(["congruent", workspace["game"], "--pos1", "0,0",
                     "--pos2", "2,0", "--strat", workspace["strat"]]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] \
        == "congruent-certified"
    assert cli.main(["congruent", workspace["game"], "--pos1", "0,0",
                     "--pos2", "1,0", "--strat", workspace["strat"]]) == 1
    assert json.loads(capsys.readouterr().out)["kind"] == "distinguished"


def test_complexity_detects_format(workspace, capsys, tmp_path):
    d0_game = str(tmp_path / "d0.json")
    with open(d0_game, "w") as fh:
        json.dump({"d": 2, "gamma": [[1, 0], [0, 1], [-1, 1]],
                   "defeated_generators": [[0, 0]]}, fh)
    for path, expected in [(d0_game, "13"), (workspace["strat"], "10"),
                           (workspace["strategy"], "9")]:
        assert cli.main(["complexity", path]) == 0
        assert capsys.readouterr().out.strip() == expected


def test_plot(workspace, capsys):
    assert cli.main(["plot", workspace["game"], "--level", "8",
                     "--svg", workspace["svg"]]) == 0
    out = capsys.readouterr().out
    assert "P.P.P" in out
    with open(workspace["svg"]) as fh:
        assert fh.read().startswith("<svg")


def test_compile_requires_verification(workspace, tmp_path, capsys):
    out = str(tmp_path / "f.json")
    assert cli.main(["compile", workspace["strat"], "-o", out]) \
        == cli.EXIT_ERROR
    err = json.loads(capsys.readouterr().err)
    assert "verify" in err["message"]
    assert cli.main(["compile", workspace["strat"], "-o", out,
                     "--no-verify"]) == 0


def test_compile_rejects_wrong_stratification(workspace, tmp_path, capsys):
    bad = str(tmp_path / "bad_strat.json")
    with open(bad, "w") as fh:
        json.dump({"d": 2, "strata": [
            {"F": [[1, 0]], "A": [[2, 0], [0, 2]]}]}, fh)
    code = cli.main(["compile", bad, "-o", str(tmp_path / "f.json"),
                     "--game", workspace["game"], "--verify-level", "20"])
    assert code == cli.EXIT_ERROR
    assert "disagrees" in json.loads(capsys.readouterr().err)["message"]


def test_error_is_machine_readable(workspace, capsys):
    assert cli.main(["query", workspace["game"], workspace["strategy"],
                     "--pos", "banana"]) == cli.EXIT_ERROR
    err = json.loads(capsys.readouterr().err)
    assert err["error"] and "banana" in err["message"]


def test_missing_file(capsys):
    assert cli.main(["validate", "/nonexistent/game.json"]) \
        == cli.EXIT_ERROR
    assert json.loads(capsys.readouterr().err)["error"]
