import json

import pytest

from minhom.cli import main


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


C5 = "n 5\n" + "".join(f"a {i} {(i + 1) % 5}\n" for i in range(5))
TT3 = "n 3\na 0 1\na 0 2\na 1 2\n"


def test_classify_c5(tmp_path, capsys):
    path = write(tmp_path, "c5.dg", C5)
    code, rep = run(capsys, ["classify", "--input", path, "--class", "ls"])
    assert code == 0
    assert rep["schema"] == "minhom-report/1" and rep["subcommand"] == "classify"
    assert rep["inputs"][0]["path"] == path and len(rep["inputs"][0]["sha256"]) == 64
    (verdict,) = rep["result"]["verdicts"]
    assert verdict["verdict"] == "polynomial"
    assert verdict["components"][0]["certificate"]["kind"] == "DirectedCycle"


def test_recognize_and_order(tmp_path, capsys):
    path = write(tmp_path, "tt3.dg", TT3)
    code, rep = run(capsys, ["recognize", "-i", path])
    assert code == 0 and rep["result"]["transitive_oriented"] is True
    code, rep = run(capsys, ["order", "-i", path])
    assert code == 0 and rep["result"]["ordering"] == [0, 1, 2]
    code, _ = run(capsys, ["order", "-i", write(tmp_path, "c5.dg", C5)])
    assert code == 2


def test_pib(tmp_path, capsys):
    path = write(tmp_path, "k22.bg", "nw 2\nnb 2\ne 0 0\ne 0 1\ne 1 0\ne 1 1\n")
    code, rep = run(capsys, ["pib", "-i", path])
    assert code == 0 and rep["result"]["pib"] is True and "ordering" in rep["result"]["certificate"]


def test_solve_and_infeasible(tmp_path, capsys):
    g = write(tmp_path, "g.dg", "n 2\na 0 1\n")
    h = write(tmp_path, "h.dg", TT3)
    c = write(tmp_path, "c.csv", "0,5,5\n5,5,0\n")
    code, rep = run(capsys, ["solve", "-g", g, "-H", h, "-c", c])
    assert code == 0 and rep["result"]["feasible"] and rep["result"]["cost"] == 0
    assert rep["result"]["mapping"] == [0, 2]
    c3 = write(tmp_path, "c3.dg", "n 3\na 0 1\na 1 2\na 2 0\n")
    zero = write(tmp_path, "z.csv", "0,0,0\n0,0,0\n0,0,0\n")
    code, rep = run(capsys, ["solve", "-g", c3, "-H", h, "-c", zero])
    assert code == 0 and rep["result"]["feasible"] is False


def test_solve_bad_inputs(tmp_path, capsys):
    g = write(tmp_path, "g.dg", "n 2\na 0 1\n")
    h = write(tmp_path, "h.dg", TT3)
    bad = write(tmp_path, "c.csv", "0,5\n5,5\n")
    assert main(["solve", "-g", g, "-H", h, "-c", bad]) == 2
    c = write(tmp_path, "ok.csv", "0,5,5\n5,5,0\n")
    c3 = write(tmp_path, "c3.dg", "n 3\na 0 1\na 1 2\na 2 0\n")
    assert main(["solve", "-g", g, "-H", c3, "-c", c, "--algorithm", "mincut"]) == 2
    assert main(["solve", "-g", g, "-H", str(tmp_path / "missing.dg"), "-c", c]) == 2
    assert main(["classify", "-i", write(tmp_path, "junk.dg", "n 2\na 0 9\n")]) == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 1


def test_reduce_emit(tmp_path, capsys):
    k2 = write(tmp_path, "k2.ug", "n 2\ne 0 1\n")
    out = tmp_path / "out"
    code, rep = run(capsys, ["reduce", "--gadget", "h1", "--k", "2", "--graph", k2, "--emit", str(out)])
    assert code == 0
    assert sorted(p.name for p in out.iterdir()) == ["G.dg", "H.dg", "costs.csv", "manifest.json"]
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["expected_cost"] == 1 and manifest["n_g"] == 12 and manifest == rep["result"]
    code, rep = run(capsys, ["solve", "-g", str(out / "G.dg"), "-H", str(out / "H.dg"), "-c", str(out / "costs.csv")])
    assert code == 0 and rep["result"]["cost"] == 1
    assert main(["reduce", "--gadget", "h1", "--graph", k2]) == 1


def test_verify_is_deterministic(capsys):
    code, _ = run(capsys, ["verify", "--suite", "oracle", "--seed", "7", "--trials", "40"])
    assert code == 0
    main(["verify", "--suite", "oracle", "--seed", "7", "--trials", "40"])
    a = capsys.readouterr().out
    main(["verify", "--suite", "oracle", "--seed", "7", "--trials", "40"])
    b = capsys.readouterr().out
    assert a == b and json.loads(a)["seed"] == 7
