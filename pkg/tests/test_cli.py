import json
import os
import subprocess
import sys

import pytest

from liebasis.cli import main
from liebasis.graphs import star_graph
from liebasis.lie import left_greedy_bracket, standard_bracket
from liebasis.pairing import pair
from liebasis.partition import format_tree, full_partition
from liebasis.projection import project
from liebasis.words import enumerate_lyndon_by_content, enumerate_lyndon_by_length

L6 = "[[[a,b],b],[[a,b],a]]"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("LIEBASIS_ALPHABET", None)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "liebasis", *args], capture_output=True, text=True, env=full_env
    )


def test_lyndon_content():
    r = run("lyndon", "--content", "a:3,b:3")
    assert r.returncode == 0
    assert r.stdout.split() == ["aaabbb", "aababb", "aabbab"]


def test_lyndon_length():
    assert run("lyndon", "--length", "1").stdout.split() == ["a", "b"]
    assert run("lyndon", "--length", "4").stdout.split() == ["aaab", "aabb", "abbb"]
    assert run("lyndon", "--length", "2", "--alphabet", "abc").stdout.split() == ["ab", "ac", "bc"]


def test_lyndon_json():
    data = json.loads(run("lyndon", "--length", "5", "--format", "json").stdout)
    assert data == {"format": 1, "words": enumerate_lyndon_by_length("ab", 5)}


def test_lyndon_bad_flags():
    assert run("lyndon").returncode == 2
    assert run("lyndon", "--content", "a:0").returncode == 2
    assert run("lyndon", "--length", "x").returncode == 2
    assert run("lyndon", "--length", "0").returncode == 2


def test_partition():
    r = run("partition", "ababb")
    assert (r.returncode, r.stdout.strip()) == (0, "((ab)(ab)(b))")
    assert run("partition", "b").stdout.strip() == "(b)"
    assert run("partition", "aabcb").stdout.strip() == "(((aab)(c))((b)))"


def test_partition_failure():
    r = run("partition", "abab")
    assert r.returncode == 1
    assert "repetitions of a single subword (ab)" in r.stderr
    assert r.stdout == ""
    r = run("partition", "aaba")
    assert r.returncode == 1 and "same initial and final letter" in r.stderr


def test_partition_json():
    data = json.loads(run("partition", "ababb", "--format", "json").stdout)
    assert data["format"] == 1
    assert data["tree"] == {"base": {"base": "a", "exponent": 1, "anchor": "b"}, "exponent": 2, "anchor": "b"}


def test_bracket():
    assert run("bracket", "aababb", "--style", "leftgreedy").stdout.strip() == "[[[a,[a,b]],[a,b]],b]"
    assert run("bracket", "aababb", "--style", "standard").stdout.strip() == "[a,[[a,b],[[a,b],b]]]"
    assert run("bracket", "a").stdout.strip() == "a"
    assert run("bracket", "abab", "--style", "standard").returncode == 1
    assert run("bracket", "abab").returncode == 1
    data = json.loads(run("bracket", "aab", "--format", "json").stdout)
    assert data["expr"] == ["a", ["a", "b"]]


def test_star():
    data = json.loads(run("star", "aaab", "--format", "json").stdout)
    assert len(data["vertices"]) == 4
    assert sorted((e["from"], e["to"]) for e in data["edges"]) == [(0, 3), (1, 3), (2, 3)]
    assert data["anchor"] == 3 and data["format"] == 1
    dot = run("star", "b", "--format", "dot").stdout
    assert dot.count("[label=") == 1 and "->" not in dot
    big = json.loads(run("star", "ababbabaab").stdout)
    assert (len(big["vertices"]), len(big["edges"])) == (10, 9)
    assert run("star", "abab").returncode == 1


def test_pair():
    assert run("pair", "--star", "aababb", L6).stdout.strip() == "2"
    assert run("pair", "--star", "ab", "[a,b]").stdout.strip() == "1"
    assert run("pair", "--star", "aabbab", L6, "--evaluator", "bruteforce").stdout.strip() == "-2"


def test_pair_graph_file_and_json_expr(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps(star_graph("aab").to_json()))
    assert run("pair", str(g), "[[a,b],a]").stdout.strip() == "-2"
    assert run("pair", str(g), "--json-expr", '[["a","b"],"a"]').stdout.strip() == "-2"
    e = tmp_path / "e.json"
    e.write_text(json.dumps({"format": 1, "expr": [["a", "b"], "a"]}))
    assert run("pair", "--star", "aab", "--json-expr", str(e)).stdout.strip() == "-2"
    # a cycle still pairs by brute force
    cyc = {"format": 1, "vertices": [{"id": 0, "label": "a"}, {"id": 1, "label": "b"}],
           "edges": [{"from": 0, "to": 1}]}
    g.write_text(json.dumps(cyc))
    assert run("pair", str(g), "[b,a]").stdout.strip() == "-1"


def test_pair_errors(tmp_path):
    assert run("pair", "--star", "ab", "[a,b").returncode == 2
    assert run("pair", str(tmp_path / "missing.json"), "[a,b]").returncode == 2
    assert run("pair", "--star", "ab").returncode == 2


def test_project():
    r = run("project", L6)
    assert (r.returncode, r.stdout.strip()) == (0, "+1*[[[a,[a,b]],[a,b]],b] -1*[[[a,[a,b]],b],[a,b]]")
    assert run("project", L6, "--words").stdout.strip() == "+1*aababb -1*aabbab"
    data = json.loads(run("project", L6, "--format", "json").stdout)
    assert data["format"] == 1
    assert [(t["word"], t["coefficient"]) for t in data["terms"]] == [("aababb", 1), ("aabbab", -1)]
    assert run("project", "+1*[a,b] +1*[b,a]").stdout.strip() == "0"
    assert run("project", "+2*[a,b] -1*[[a,b],b]", "--words").stdout.strip() == "+2*ab -1*abb"
    assert run("project", "--json-expr", '["b","a"]', "--words").stdout.strip() == "-1*ab"


def test_project_parse_error():
    r = run("project", "[a,b")
    assert r.returncode == 2 and r.stderr


def test_alphabet_env_and_flag():
    assert run("project", "[a,b]", "--words", env={"LIEBASIS_ALPHABET": "ba"}).stdout.strip() == "-1*ba"
    assert run("project", "[a,b]", "--words", "--alphabet", "ba").stdout.strip() == "-1*ba"
    assert run("lyndon", "--length", "2", env={"LIEBASIS_ALPHABET": "cab"}).stdout.split() == ["ca", "cb", "ab"]
    assert run("project", "[a,c]", "--alphabet", "ab").returncode == 2
    assert run("lyndon", "--length", "2", "--alphabet", "aa").returncode == 2


def test_verify():
    r = run("verify", "--alphabet", "ab", "--max-degree", "4")
    assert r.returncode == 0 and r.stdout.strip().endswith("PASS")
    data = json.loads(run("verify", "--alphabet", "abc", "--max-degree", "3", "--format", "json").stdout)
    assert data["ok"] and data["format"] == 1
    assert [row["lyndon"] for row in data["counts"]] == [3, 3, 8]
    assert run("verify", "--max-degree", "0").returncode == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    import liebasis.projection as proj

    monkeypatch.setattr(proj, "self_pairing", lambda w: 1)
    assert main(["verify", "--max-degree", "3"]) == 1
    assert capsys.readouterr().out.strip().endswith("FAIL")


@pytest.mark.parametrize("word", ["aababb", "aabbab", "aaabbb", "aabcb", "abacc"])
def test_cli_matches_library(word):
    assert run("partition", word).stdout.strip() == format_tree(full_partition(word))
    assert run("bracket", word).stdout.strip() == str(left_greedy_bracket(word))
    assert run("bracket", word, "--style", "standard").stdout.strip() == str(standard_bracket(word, "abc"))
    assert json.loads(run("star", word).stdout) == star_graph(word).to_json()
    assert run("pair", "--star", word, L6).stdout.strip() == str(pair(star_graph(word), L6))
    lg = str(left_greedy_bracket(word))
    assert run("project", lg).stdout.strip() == str(project(lg))
    content = ",".join(f"{c}:{word.count(c)}" for c in sorted(set(word)))
    assert run("lyndon", "--content", content).stdout.split() == enumerate_lyndon_by_content(content)


def test_deterministic_output():
    a = run("verify", "--max-degree", "5", "--format", "json").stdout
    b = run("verify", "--max-degree", "5", "--format", "json").stdout
    assert a == b


def test_console_script_main():
    assert main(["pair", "--star", "aab", "[[a,b],a]"]) == 0
