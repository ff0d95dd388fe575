"""File formats and the command-line surface."""

import json

import pytest

from skillcent import (ParseError, SkillMultiset, dump_game, load_game,
                       parse_legacy, serialize_game, wtc911)
from skillcent.cli import main
from skillcent.fixtures import fixture_path
from skillcent.gameio import parse_game_json

TOY2 = "2 1 0 1\n1\n\n0 1\n1 2\n"


# -- legacy parser -----------------------------------------------------

def test_parse_legacy_fixture():
    game, graph = parse_legacy(fixture_path("911"))
    assert game.n == 19
    assert len(graph.edges) == 33
    m_nodes = {i + 1 for i in range(19) if "M" in {game.skills[s] for s in game.skill_sets[i]}}
    p_nodes = {i + 1 for i in range(19) if "P" in {game.skills[s] for s in game.skill_sets[i]}}
    assert m_nodes == {2, 4, 6, 8, 10, 11, 13, 17, 18}
    assert p_nodes == {5, 7, 9, 12}
    assert game.task_requirement(0) == SkillMultiset({"M": 2, "P": 1})
    assert game.tasks[0].profit == 1


def test_parse_legacy_toy_two_node(tmp_path):
    path = tmp_path / "toy2.net"
    path.write_text(TOY2)
    game, graph = parse_legacy(path)
    assert game.n == 2
    assert game.task_requirement(0) == SkillMultiset({"M": 1})
    assert game.skill_set(0) == SkillMultiset({"M": 1})
    assert game.skill_set(1) == SkillMultiset()
    assert graph.edges == ((0, 1),)


def test_parse_legacy_edge_count_mismatch(tmp_path):
    path = tmp_path / "bad.net"
    path.write_text("2 1 0 2\n1\n\n0 1\n1 2\n")
    with pytest.raises(ParseError, match="announces 2 edges"):
        parse_legacy(path)


def test_parse_legacy_malformed_line(tmp_path):
    path = tmp_path / "bad.net"
    path.write_text("2 1 0 1\n1\n\n0 x\n1 2\n")
    with pytest.raises(ParseError, match="line 4"):
        parse_legacy(path)


def test_parse_legacy_out_of_range_node(tmp_path):
    path = tmp_path / "bad.net"
    path.write_text("2 1 0 1\n7\n\n0 1\n1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_legacy(path)


# -- JSON game files ----------------------------------------------------

def test_round_trip_legacy_through_json(tmp_path):
    game, graph = wtc911()
    out = tmp_path / "g.json"
    dump_game(game, graph, out)
    game2, graph2 = load_game(out)
    assert game2.labels == game.labels
    assert game2.skill_sets == game.skill_sets or all(
        {game2.skills[s] for s in game2.skill_sets[i]} ==
        {game.skills[s] for s in game.skill_sets[i]} for i in range(game.n))
    assert [game2.task_requirement(j) for j in range(len(game2.tasks))] == \
        [game.task_requirement(j) for j in range(len(game.tasks))]
    assert [t.profit for t in game2.tasks] == [t.profit for t in game.tasks]
    assert graph2 == graph
    # serialize -> parse is idempotent
    assert serialize_game(game2, graph2) == serialize_game(game, graph)


def test_fraction_profits_round_trip(tmp_path):
    doc = {"players": [{"id": "a", "skills": ["s"]}],
           "tasks": [{"requires": {"s": 1}, "profit": "1/3"}]}
    game, _ = parse_game_json(doc)
    from fractions import Fraction
    assert game.tasks[0].profit == Fraction(1, 3)
    out = tmp_path / "g.json"
    dump_game(game, None, out)
    game2, _ = load_game(out)
    assert game2.tasks[0].profit == Fraction(1, 3)


def test_decimal_profits_parse_exactly(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({
        "players": [{"id": "a", "skills": ["s"]}],
        "tasks": [{"requires": {"s": 1}, "profit": 0.5}]}))
    game, _ = load_game(path)
    from fractions import Fraction
    assert game.tasks[0].profit == Fraction(1, 2)


def test_duplicate_ids_rejected():
    doc = {"players": [{"id": "a"}, {"id": "a"}], "tasks": []}
    with pytest.raises(Exception, match="unique"):
        parse_game_json(doc)


def test_edge_with_unknown_player_rejected():
    doc = {"players": [{"id": "a"}, {"id": "b"}], "tasks": [],
           "edges": [["a", "z"]]}
    with pytest.raises(Exception, match="undeclared"):
        parse_game_json(doc)


# -- CLI -----------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def tsv_values(out):
    values = {}
    for line in out.splitlines():
        if line.startswith("#") or line.startswith("player"):
            continue
        parts = line.split("\t")
        values[parts[0]] = float(parts[1])
    return values


def test_cli_help_enum_normalized(capsys):
    code, out = run_cli(capsys, "compute", "--game", "911", "--measure", "help",
                        "--method", "enum", "--normalize")
    assert code == 0
    values = tsv_values(out)
    assert abs(values["16"] - 0.126117) < 1e-5
    assert "# ordering\t16> 13> {7,9,12}>" in out


def test_cli_json_and_tsv_agree(capsys):
    code, tsv = run_cli(capsys, "compute", "--game", "911", "--measure", "hc",
                        "--delta-star", "def")
    assert code == 0
    code, js = run_cli(capsys, "compute", "--game", "911", "--measure", "hc",
                       "--delta-star", "def", "--output", "json")
    assert code == 0
    doc = json.loads(js)
    assert doc["delta_star"] == 11.0
    assert doc["measure"] == "hc"
    for lab, v in tsv_values(tsv).items():
        assert abs(doc["values"][lab] - v) < 1e-12 * max(1.0, abs(v))
    assert doc["classes"][0] == ["1", "19"]


def test_cli_fpt_and_enum_identical_output(capsys):
    _, a = run_cli(capsys, "compute", "--game", "911", "--measure", "sh", "--method", "fpt")
    _, b = run_cli(capsys, "compute", "--game", "911", "--measure", "sh", "--method", "enum")
    assert tsv_values(a) == tsv_values(b)


def test_cli_sample_reproducible(capsys):
    args = ("compute", "--game", "911", "--measure", "help", "--method", "sample",
            "--samples", "5000", "--seed", "4")
    _, a = run_cli(capsys, *args, "--threads", "1")
    _, b = run_cli(capsys, *args, "--threads", "8")
    assert a == b
    assert "stderr" in a.splitlines()[0] or any(
        line.startswith("player\tvalue\tstderr") for line in a.splitlines())


def test_cli_custom_semivalue(capsys, tmp_path):
    beta = tmp_path / "beta.txt"
    n = 19
    beta.write_text("\n".join(f"{k} 1/{n}" for k in range(n)))
    _, a = run_cli(capsys, "compute", "--game", "911",
                   "--measure", f"semivalue:{beta}", "--method", "enum")
    _, b = run_cli(capsys, "compute", "--game", "911", "--measure", "sh",
                   "--method", "enum")
    assert tsv_values(a) == tsv_values(b)


def test_cli_trivial_measure(capsys):
    code, out = run_cli(capsys, "compute", "--game", "911", "--measure", "trivial")
    assert code == 0
    assert all(v == 0 for v in tsv_values(out).values())


def test_cli_hc_with_fpt_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--game", "911", "--measure", "hc", "--method", "fpt"])
    assert exc.value.code == 2


def test_cli_sample_banzhaf_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--game", "911", "--measure", "banzhaf", "--method", "sample"])
    assert exc.value.code == 2


def test_cli_graph_measure_without_graph_is_usage_error(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({
        "players": [{"id": "a", "skills": ["s"]}, {"id": "b"}],
        "tasks": [{"requires": {"s": 1}, "profit": 1}]}))
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--game", str(path), "--measure", "help"])
    assert exc.value.code == 2


def test_cli_separate_graph_file(capsys, tmp_path):
    game_path = tmp_path / "g.json"
    game_path.write_text(json.dumps({
        "players": [{"id": "1", "skills": ["s"]}, {"id": "2", "skills": []}],
        "tasks": [{"requires": {"s": 1}, "profit": 1}]}))
    graph_path = tmp_path / "gr.json"
    graph_path.write_text(json.dumps({"edges": [["1", "2"]]}))
    code, out = run_cli(capsys, "compute", "--game", str(game_path), "--graph",
                        str(graph_path), "--measure", "help")
    assert code == 0
    assert tsv_values(out)["2"] == 0.5


def test_cli_sums(capsys):
    code, out = run_cli(capsys, "sums", "--game", "911")
    assert code == 0
    lines = dict(line.split("\t") for line in out.splitlines())
    assert float(lines["sh-sum"]) == 1.0
    assert float(lines["hc-sum"]) == 1.0
    assert abs(float(lines["help-sum"]) - 2.21318681319) < 1e-9
    assert lines["check"] == "ok"


def test_cli_convert_round_trip(capsys, tmp_path):
    out_path = tmp_path / "converted.json"
    code = main(["convert", "--game", str(fixture_path("911")), "--to", str(out_path)])
    assert code == 0
    game, graph = load_game(out_path)
    ref_game, ref_graph = wtc911()
    assert game.labels == ref_game.labels
    assert graph == ref_graph


def test_cli_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("SKILLCENT_THREADS", "2")
    code, out = run_cli(capsys, "compute", "--game", "p2", "--measure", "hsh")
    assert code == 0
    vals = tsv_values(out)
    assert abs(vals["2"] - 2 / 3) < 1e-12


def test_cli_capacity_error_exit_code(capsys, tmp_path):
    path = tmp_path / "big.json"
    doc = {"players": [{"id": str(i), "skills": ["s"]} for i in range(26)],
           "tasks": [{"requires": {"s": 1}, "profit": 1}]}
    path.write_text(json.dumps(doc))
    code = main(["compute", "--game", str(path), "--measure", "sh", "--method", "enum"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_degree_direct_path3():
    from skillcent import Graph, degree_direct
    assert list(degree_direct(Graph.path(3)).values) == [1, 2, 1]
