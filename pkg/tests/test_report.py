import csv

from oddhom.formats import instance_to_json, write_json
from oddhom.graph import Graph
from oddhom.instance import CycleTarget, LHomInstance
from oddhom.oracle import GeneratorConfig
from oddhom.report import (
    BENCH_FIELDS, CLASSIFY_FIELDS, bench_jobs, bench_row, classify_rows, figure_path, plot_bench,
    plot_classify, run_bench, write_csv,
)


def test_figure_path():
    assert figure_path("out/bench.csv") == "out/bench.png"


def test_empty_directory_gives_header_only(tmp_path):
    rows = run_bench(bench_jobs(directory=tmp_path))
    out = tmp_path / "e.csv"
    write_csv(out, rows, BENCH_FIELDS)
    plot_bench(rows, figure_path(str(out)))
    assert out.read_text().strip() == ",".join(BENCH_FIELDS)
    assert (tmp_path / "e.png").exists()


def test_directory_jobs(tmp_path):
    for i, g in enumerate([Graph.cycle(5), Graph.complete(3), Graph.path(9)]):
        write_json(tmp_path / f"{i}.json", instance_to_json(LHomInstance(g, CycleTarget(2))))
    rows = run_bench(bench_jobs(directory=tmp_path))
    assert [r["answer"] for r in rows] == ["YES", "NO", "YES"]
    assert rows[2]["algorithm"] == "oracle"  # diameter 8 has no dedicated solver


def test_hundred_rows_with_workers(tmp_path):
    base = GeneratorConfig(n=7, edge_prob=0.4, max_diameter=4, list_density=0.7, seed=100)
    rows = run_bench(bench_jobs(100, base), workers=2)
    assert [r["index"] for r in rows] == list(range(100))
    assert not any(r["agreement"] == "MISMATCH" for r in rows)
    out = tmp_path / "b.csv"
    write_csv(out, rows, BENCH_FIELDS)
    plot_bench(rows, figure_path(str(out)))
    assert len(list(csv.DictReader(out.open()))) == 100
    assert (tmp_path / "b.png").stat().st_size > 0


def test_error_rows():
    row = bench_row(0, "x", LHomInstance(Graph.path(7), CycleTarget(2)), alg="poly")
    assert row["answer"] == "error:DiameterTooLarge" and row["agreement"] == "skipped"


def test_classify_outputs(tmp_path):
    rows = classify_rows(range(1, 6), range(2, 13))
    out = tmp_path / "c.csv"
    write_csv(out, rows, CLASSIFY_FIELDS)
    plot_classify(rows, figure_path(str(out)))
    got = list(csv.DictReader(out.open()))
    assert len(got) == 55 and got[0] == {"k": "1", "d": "2", "verdict": "subexp"}
    assert (tmp_path / "c.png").exists()
