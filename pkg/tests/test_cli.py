import json

import pytest

from zmaxext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_builtins(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--builtin", "Fn", "--n", "3")
    d = json.loads(out)
    assert code == 0 and d["embedding"] == [[3]] and len(d["generators"]) == 3
    path = tmp_path / "lex.json"
    assert run(capsys, "construct", "--builtin", "lex", "--out", str(path))[0] == 0
    assert json.loads(path.read_text())["embedding"] == [[0], [1]]
    code, out, _ = run(capsys, "construct", str(path))
    assert code == 0 and json.loads(out) == json.loads(path.read_text())


def test_malformed_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"K": [')
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "line" in json.loads(err)["message"]
    code, _, _ = run(capsys, "analyze")
    assert code == 2
    code, _, _ = run(capsys, "analyze", "--builtin", "Fn")
    assert code == 2
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2


def test_analyze(capsys):
    _, out, _ = run(capsys, "analyze", "--builtin", "Fn", "--n", "2")
    r = json.loads(out)["results"]
    assert r["selective"] and r["archimedean"]["verdict"] == "yes"
    assert r["convex"]["verdict"] == "no" and r["unit_index"] == 2
    _, out, _ = run(capsys, "analyze", "--builtin", "lex")
    r = json.loads(out)["results"]
    assert r["archimedean"]["verdict"] == "no" and r["convex"]["verdict"] == "yes"
    assert r["unit_index"] == "infinite"
    _, out, _ = run(capsys, "analyze", "--builtin", "identity")
    r = json.loads(out)["results"]
    assert r["archimedean"]["verdict"] == "yes" and r["convex"]["verdict"] == "yes" and r["unit_index"] == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "Fn", "--n", "6")
    assert code == 0 and json.loads(out)["results"]["n"] == 6
    code, out, _ = run(capsys, "classify", "--builtin", "identity")
    assert json.loads(out)["results"]["n"] == 1
    code, _, err = run(capsys, "classify", "--builtin", "lex")
    assert code == 3 and json.loads(err)["error"] == "InfiniteUnitIndex"


def test_archimedeanize(capsys):
    code, out, _ = run(capsys, "archimedeanize", "--builtin", "Fn", "--n", "2", "--generators", '[{"exp":[0]},{"exp":[1]}]')
    r = json.loads(out)["results"]
    assert code == 0 and (r["M"], r["N"], r["closed"], r["coset_count"]) == (1, 4, True, 2)
    _, out, _ = run(capsys, "archimedeanize", "--builtin", "identity", "--generators", '[{"exp":[0]}]')
    r = json.loads(out)["results"]
    assert r["M"] == 0 and r["T"] == [{"exp": [0]}]
    code, out, _ = run(capsys, "archimedeanize", "--builtin", "lex", "--generators", '[{"exp":[1,0]}]')
    r = json.loads(out)["results"]
    assert code == 0 and r["outcome"] == "unknown" and r["bound"] == 64
    code, _, _ = run(capsys, "archimedeanize", "--builtin", "Fn", "--n", "2", "--generators", "[{")
    assert code == 2


def test_quotient(capsys):
    code, out, _ = run(capsys, "quotient", "--builtin", "lex")
    r = json.loads(out)["results"]
    assert code == 0 and r["quotient_group"] == {"rank": 1, "order": "lex"} and r["projection"] == [[1, 0]]
    code, _, err = run(capsys, "quotient", "--builtin", "Fn", "--n", "2")
    e = json.loads(err)
    assert code == 3 and e["error"] == "NotConvex" and e["counterexample"] == {"exp": [1]}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "monotonic-division", "--seed", "7", "--trials", "500")
    r = json.loads(out)
    assert code == 0 and r["results"]["passed"] and r["seed"] == 7
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "nope"])
    assert info.value.code == 2


def test_reports_are_deterministic(capsys):
    outs = [run(capsys, "verify", "--suite", "axioms", "--trials", "50")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    a = run(capsys, "analyze", "--builtin", "lex")[1]
    b = run(capsys, "analyze", "--builtin", "lex")[1]
    assert a == b
    r = json.loads(a)
    assert set(r) == {"command", "input_digest", "results", "seed", "bounds"}
    assert r["input_digest"].startswith("sha256:")
