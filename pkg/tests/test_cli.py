import csv
import json

import pytest

from oddhom.cli import main
from oddhom.formats import graph_to_json, instance_to_json, write_json
from oddhom.graph import Graph
from oddhom.instance import CycleTarget, LHomInstance


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.json"
    write_json(p, instance_to_json(LHomInstance(Graph.cycle(5), CycleTarget(2))))
    return p


@pytest.fixture
def k3_file(tmp_path):
    p = tmp_path / "k3.json"
    write_json(p, instance_to_json(LHomInstance(Graph.complete(3), CycleTarget(2))))
    return p


def read(path):
    return json.loads(path.read_text())


def test_solve_yes_and_no(c5_file, k3_file, tmp_path):
    out = tmp_path / "r.json"
    wit = tmp_path / "w.json"
    assert main(["solve", str(c5_file), "--out", str(out), "--witness-out", str(wit)]) == 0
    rep = read(out)
    assert rep["answer"] == "YES" and len(rep["witness"]) == 5
    assert read(wit) == rep["witness"]
    assert main(["solve", str(k3_file), "--out", str(out)]) == 1
    assert read(out)["answer"] == "NO"


def test_solve_precondition_exit_2(c5_file, tmp_path):
    p = tmp_path / "p.json"
    write_json(p, instance_to_json(LHomInstance(Graph.path(7), CycleTarget(2))))
    assert main(["solve", str(p), "--alg", "poly"]) == 2
    assert main(["solve", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[")
    assert main(["solve", str(bad)]) == 2


def test_solve_with_target_file(c5_file, tmp_path):
    t = tmp_path / "t.json"
    write_json(t, graph_to_json(Graph.petersen()))
    out = tmp_path / "r.json"
    assert main(["solve", str(c5_file), "--target-file", str(t), "--alg", "trifree", "--out", str(out)]) == 0
    assert read(out)["algorithm"] == "trifree"


def test_emit_tree(tmp_path):
    p = tmp_path / "p.json"
    g = Graph.cycle(5)
    g._add_edge(0, g._add_vertex())
    write_json(p, instance_to_json(LHomInstance(g, CycleTarget(2))))
    tree = tmp_path / "tree.json"
    assert main(["solve", str(p), "--alg", "subexp", "--emit-tree", str(tree), "--out", str(tmp_path / "o")]) == 0
    nodes = read(tree)["nodes"]
    assert nodes and nodes[0]["parent"] is None


def test_reduce(tmp_path, k3_file):
    p = tmp_path / "p.json"
    inst = LHomInstance(Graph.path(3), CycleTarget(2), {0: 2, 1: 5, 2: 2})
    write_json(p, instance_to_json(inst))
    out = tmp_path / "r.json"
    assert main(["reduce", str(p), "--out", str(out)]) == 0
    rep = read(out)
    assert rep["instance"]["graph"]["n"] == 2
    assert rep["vertex_map"]["0"] == rep["vertex_map"]["2"]
    assert any(e["rule"] == "R6" for e in rep["changelog"])
    assert main(["reduce", str(k3_file), "--out", str(out)]) == 1
    assert read(out)["answer"] == "NO"


def test_classify(tmp_path, capsys):
    assert main(["classify", "--k", "3", "--d", "6"]) == 0
    assert capsys.readouterr().out.strip() == "open"
    path = tmp_path / "grid.csv"
    assert main(["classify", "--csv", str(path)]) == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 5 * 11
    assert (tmp_path / "grid.png").exists()
    assert main(["classify", "--k", "0", "--d", "3"]) == 2


def test_generate_hard(tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 3 0\n")
    out = tmp_path / "g.json"
    assert main(["generate-hard", "--cnf", str(cnf), "--k", "2", "--out", str(out)]) == 0
    obj = read(out)
    assert obj["graph"]["n"] == 28 and obj["k"] == 2 and "v1" in obj["landmarks"]
    assert main(["oracle", str(out), "--force", "--out", str(tmp_path / "o.json")]) == 0
    assert main(["oracle", str(out), "--out", str(tmp_path / "o.json")]) == 2   # over the cap
    cnf.write_text("p cnf 3 1\n1 1 3 0\n")
    assert main(["generate-hard", "--cnf", str(cnf), "--k", "2"]) == 2


def test_generate_random_and_oracle(tmp_path):
    out = tmp_path / "r.json"
    assert main(["generate-random", "--n", "8", "--seed", "4", "--max-diameter", "3", "--out", str(out)]) == 0
    assert read(out)["graph"]["n"] == 8
    code = main(["oracle", str(out), "--out", str(tmp_path / "o.json")])
    assert code in (0, 1)
    assert read(tmp_path / "o.json")["answer"] == ("YES" if code == 0 else "NO")


def test_bench(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--count", "12", "--n", "8", "--max-diameter", "3", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 12
    assert all(r["agreement"] in ("match", "self", "skipped") for r in rows)
    assert (tmp_path / "b.png").exists()
    assert "0 mismatches" in capsys.readouterr().out


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["solve", "x.json", "--alg", "nope"])
