import json

import pytest

from elpkit.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(text, name="p.elp"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_g91_json(write, capsys):
    f = write("a :- not K b.\nb :- not K a.\n")
    code, out, _ = run(capsys, "solve", f, "--semantics", "g91", "--json")
    assert code == 0
    assert json.loads(out)["world_views"] == [[["a"]], [["b"]]]
    # byte-identical on a second run
    assert run(capsys, "solve", f, "--semantics", "g91", "--json")[1] == out


def test_solve_theory_file(write, capsys):
    f = write("K a -> a\n", "t.eth")
    code, out, _ = run(capsys, "solve", f, "--semantics", "faeel", "--json")
    assert code == 0 and json.loads(out)["world_views"] == [[[]]]


def test_solve_feel_three_views(write, capsys):
    code, out, _ = run(capsys, "solve", write("a | b."), "--semantics", "feel", "--json")
    assert code == 0 and len(json.loads(out)["world_views"]) == 3


def test_solve_without_views_exits_1(write, capsys):
    code, _, _ = run(capsys, "solve", write("a.\n:- K a."))
    assert code == 1


def test_compare_reports_disagreement(write, capsys):
    f = write("K a -> a\n", "t.eth")
    code, out, _ = run(capsys, "compare", f, "--semantics", "g91,faeel", "--json")
    assert code == 1
    assert json.loads(out)["disagreements"] == [[["a"]]]


def test_analyze(write, capsys):
    f = write("a :- not K b.\nb :- not K a.\nc :- K a.\n")
    code, out, _ = run(capsys, "analyze", f, "--tight", "--json")
    assert code == 0 and json.loads(out)["layers"] == {"a": 0, "b": 0, "c": 1}
    code, out, _ = run(capsys, "analyze", f, "--stratified")
    assert code == 1 and "cycle" in out


def test_split(write, capsys):
    f = write("a :- not K b.\nb :- not K a.\nc :- K a.\n")
    code, out, _ = run(capsys, "split", f, "--set", "a,b", "--json")
    doc = json.loads(out)
    assert code == 0
    assert [s["world_view"] for s in doc["solutions"]] == [[["a", "c"]], [["b"]]]
    code, out, _ = run(capsys, "split", f, "--set", "", "--json")
    assert json.loads(out)["bottom"] == []
    code, out, _ = run(capsys, "split", f, "--set", "a,b,c", "--json")
    assert json.loads(out)["top"] == []


def test_split_rejects_non_splitting_set(write, capsys):
    code, _, err = run(capsys, "split", write("a :- not K b.\nb :- not K a."), "--set", "a")
    assert code == 2 and "not K b" in err


def test_parse_error_exits_2(write, capsys):
    code, _, err = run(capsys, "solve", write("a :- not not not b."))
    assert code == 2 and "line 1" in err


def test_cap_exceeded_exits_2(write, capsys):
    f = write("a.", "p.elp")
    code, _, _ = run(capsys, "solve", f, "--semantics", "feel", "--atoms", "b,c,d,e")
    assert code == 2


def test_check_and_fuzz(write, capsys):
    code, out, _ = run(capsys, "check", write("a | b."), "--properties", "supra_asp", "--semantics", "feel")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(
        capsys, "fuzz", "--properties", "faeel_characterization", "--count", "20", "--max-atoms", "3", "--json"
    )
    assert code == 0


def test_usage_errors_exit_2(capsys):
    assert main(["solve"]) == 2
    assert main(["fuzz", "--max-atoms", "9"]) == 2
