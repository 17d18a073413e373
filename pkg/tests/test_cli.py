import json
import re

import pytest

from januarials.action import coset_map
from januarials.cli import FIXTURES, main, read_perm_file
from januarials.dot import companion_dot, coset_dot, map_dot
from januarials.exceptions import InvalidInputError
from januarials.presets import ALT16_X, ALT16_Y, PRESETS, find_preset, get_preset
from januarials.report import SCHEMA_KEYS, JanuarialReport, build_report
from januarials.surface import companion


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze(capsys, *argv):
    code, out, _ = run(capsys, "analyze", *argv)
    assert code == 0
    return json.loads(out)


def test_analyze_p73(capsys):
    r = analyze(capsys, "--p", "73", "--k", "3", "--associate")
    assert set(r) == set(SCHEMA_KEYS)
    assert r["verdict"]["class"] == "januarial"
    assert r["genus"] == {"euler": 5, "lemma": 5}
    assert r["type"]["display"] == "(3,2,1)"
    assert r["input"]["generators"]["x"]["formula"] == "z -> -z"
    assert r["input"]["generators"]["t"]["matrix"] == [0, 1, 1, 0]
    assert r["admissibility"]["admissible"] is True
    assert r["orders"]["base_l"] == 73


def test_analyze_portrait_by_k(capsys):
    r = analyze(capsys, "--p", "11", "--k", "5", "--space", "pairs")
    assert r["input"]["preset"] == "portrait-psl2-11"
    assert r["counts"]["xy_orbits"] == 14
    assert r["verdict"]["m_nontrivial"] == 13
    assert r["euler_characteristic"] == -2
    assert r["genus"]["euler"] == 2
    assert r["admissibility"] is None


def test_analyze_perm_file(tmp_path, capsys):
    path = tmp_path / "alt16.cyc"
    path.write_text(f"# Alt(16) generators\n{ALT16_X}\n\n{ALT16_Y}  # y\n")
    dot = tmp_path / "alt16.dot"
    r = analyze(capsys, "--perm-file", str(path), "--degree", "16", "--dot", str(dot))
    assert r["verdict"]["class"] == "januarial"
    assert r["genus"]["euler"] == 0
    assert r["type"]["display"] == "(1,0,0)"
    assert dot.read_text().startswith("graph companion {")


def test_analyze_is_deterministic(capsys):
    _, first, _ = run(capsys, "analyze", "--preset", "k4-p43", "--associate")
    _, second, _ = run(capsys, "analyze", "--preset", "k4-p43", "--associate")
    assert first == second


@pytest.mark.parametrize("argv", [
    ["analyze", "--p", "12", "--k", "3"],
    ["analyze", "--p", "13", "--k", "5"],
    ["analyze", "--p", "43", "--k", "4"],
    ["analyze", "--perm-file", "/nonexistent/file", "--degree", "4"],
    ["analyze", "--perm-file", "x.cyc"],
    ["analyze"],
    ["search", "--k", "3", "--pmin", "50", "--pmax", "10"],
    ["search", "--k", "5", "--pmin", "5", "--pmax", "10"],
    ["bogus"],
])
def test_invalid_input_exit_code(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_allow_pgl_unlocks_p43(capsys):
    r = analyze(capsys, "--p", "43", "--k", "4", "--associate", "--allow-pgl")
    assert r["input"]["group"] == "PGL"
    assert r["genus"]["lemma"] == 5


def test_search_k3(capsys):
    code, out, _ = run(capsys, "search", "--k", "3", "--pmin", "5", "--pmax", "140")
    assert code == 0
    rows = json.loads(out)
    wins = [r["p"] for r in rows if r["outcome"] == "januarial"]
    fails = [(r["p"], r["l"]) for r in rows if r["outcome"] != "januarial"]
    assert wins == [13, 17, 37, 53, 73, 97, 137]
    assert fails == [(113, 19)]


def test_search_k4_pgl(capsys):
    code, out, _ = run(capsys, "search", "--k", "4", "--pmin", "5", "--pmax", "70",
                       "--allow-pgl", "--format", "table", "--jobs", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[:3] == ["p", "admissible", "outcome"]
    outcome = {int(l.split()[0]): (l.split()[2], l.split()[4]) for l in lines[1:]}
    assert outcome == {17: ("januarial", "9"), 19: ("januarial", "10"),
                       41: ("m_face_map", "7"), 43: ("januarial", "22"),
                       67: ("m_face_map", "17")}


def test_search_empty(capsys):
    code, out, _ = run(capsys, "search", "--k", "3", "--pmin", "5", "--pmax", "11")
    assert code == 0 and json.loads(out) == []


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "p=13 k=3 → (1,0,0), genus 0: PASS" in out
    assert "p=31 k=6 → ((1,4),(4,1)), genus 4: PASS" in out
    assert "portrait relations x²=y⁵=(xy)⁵=t²=(xt)²=(yt)²=(xyt)⁵=1: PASS" in out
    assert out.count("PASS") == len(FIXTURES)


def test_report_round_trip():
    for name in PRESETS:
        r = build_report(PRESETS[name].action(use_associate=True), preset=name)
        text = r.to_json()
        assert JanuarialReport.from_json(text) == r
        assert JanuarialReport.from_json(text).to_json() == text
        assert list(json.loads(text)) == sorted(SCHEMA_KEYS)
    with pytest.raises(ValueError):
        JanuarialReport.from_dict({"input": {}})


def test_dot_companion_edges():
    for name in ("k4-p43", "k6-p31", "alt16"):
        cm = coset_map(PRESETS[name].action(use_associate=True))
        g = companion(cm)
        text = companion_dot(g)
        edges = re.findall(r"v\d+ -- v\d+ \[color=(\w+)\];", text)
        assert len(edges) == len(cm.x_pairs)
        assert set(edges) <= {"blue", "red", "green"}
        assert len(re.findall(r"^  v\d+ \[label=", text, re.M)) == len(cm.y_orbits)
        assert map_dot(cm) == text


def test_dot_coset_graph_for_non_januarial():
    cm = coset_map(PRESETS["portrait-psl2-11"].action())
    text = map_dot(cm)
    assert text == coset_dot(cm)
    assert text.startswith("digraph")
    assert '"{0,∞}"' in text


def test_read_perm_file_errors(tmp_path):
    bad = tmp_path / "bad.cyc"
    bad.write_text("(1,2)\n")
    with pytest.raises(InvalidInputError, match="expected 2 or 3"):
        read_perm_file(str(bad), 4)


def test_presets_lookup():
    assert find_preset(11, 5, "pairs").name == "portrait-psl2-11"
    assert find_preset(13, 5, "line") is None
    with pytest.raises(InvalidInputError):
        get_preset("nope")
    with pytest.raises(InvalidInputError):
        PRESETS["k4-p43"].action(47)
